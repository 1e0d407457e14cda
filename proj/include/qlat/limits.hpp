#pragma once

#include <cstddef>

namespace qlat {

inline constexpr std::size_t kMaxElements = 4096;
inline constexpr std::size_t kMaxChainEnumerationElements = 256;
inline constexpr std::size_t kMaxIndependentSearchAtoms = 24;
inline constexpr unsigned kMaxBooleanRank = 12;
inline constexpr unsigned kMaxTreeDepth = 6;
inline constexpr std::size_t kMaxCoverConstants = 8;
inline constexpr std::size_t kMaxCoverAmbient = 64;

/// Element bound after applying LATTICE_MAX_ELEMENTS. The variable can only
/// lower the built-in bound; larger or unparsable values are ignored.
std::size_t max_elements();

}  // namespace qlat
