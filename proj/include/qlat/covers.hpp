#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/realization.hpp"
#include "qlat/structure.hpp"

namespace qlat::construct {

/// Boolean sublattice sharing bottom and top with its ambient lattice,
/// generated by pairwise disjoint nonzero elements whose join is top.
struct BooleanSublattice {
  std::vector<ElementId> generators;  // ascending
  std::vector<ElementId> elements;    // ascending, 2^k of them

  /// Each element's height in the sublattice equals its height in the ambient.
  bool height_consistent(const FiniteLattice& ambient) const;
  bool contains(ElementId x) const;
};

/// Every boolean sublattice of `lattice` that shares its bottom and top and
/// contains `must_contain`, in lexicographic order of generator lists.
/// Throws SizeBound above 256 elements.
std::vector<BooleanSublattice> enumerate_boolean_sublattices(const FiniteLattice& lattice,
                                                             std::span<const ElementId> must_contain = {});

/// h(x) for each element and every x v y, x ^ y among `elements`, sorted.
/// The set is expected to be closed under meet and join.
std::vector<ElementStatement> statement_set(const FiniteLattice& lattice, std::span<const ElementId> elements);

/// One maximal family of boolean extensions: the height-consistent boolean
/// sublattices whose intersection with f(M) is the same maximal set.
struct Cover {
  std::vector<ConstId> covered;           // constants of M hosted by every part
  std::vector<BooleanSublattice> parts;   // the B_M candidates
};

/// Covers of M relative to `ambient` and the realization f (the first one
/// found when absent). Throws SizeBound when |M| > 8 or the ambient lattice has
/// more than 64 elements, UnknownConstant for foreign constants and
/// RealizationMissing when s has no realization.
std::vector<Cover> covers_of(const PartialStructure& s, std::span<const ConstId> m, const FiniteLattice& ambient,
                             const std::optional<Realization>& f = std::nullopt);

struct Closure {
  std::vector<ElementId> elements;           // common to every B_M
  std::vector<ElementStatement> statements;  // statement_set of those elements
  std::size_t extensions = 0;                // number of B_M intersected
};

/// When every cover hosts all of M, the substructure common to all B_M;
/// otherwise empty. Same errors as covers_of.
std::optional<Closure> principle_III_closure(const PartialStructure& s, std::span<const ConstId> m,
                                             const FiniteLattice& ambient,
                                             const std::optional<Realization>& f = std::nullopt);

struct Extended {
  PartialStructure structure;
  Realization realization;
  std::vector<ConstId> added;
};

/// Names every closure element that has no constant yet (e1, e2, ...) and adds
/// the closure statements translated through f.
Extended apply_principle_III(const PartialStructure& s, const FiniteLattice& ambient, const Realization& f,
                             const Closure& closure);

}  // namespace qlat::construct
