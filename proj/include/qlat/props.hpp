#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat {

enum class Law {
  LatticeAxioms,
  Distributive,
  Modular,
  HeightLaw,
  Complemented,
  Atomic,
  Perspective,
  P1,
  P2,
  P3ThirdPoint,
  Spanning,
  TopHeight,
};

std::string_view to_string(Law law) noexcept;

/// Outcome of one law check. A failing report carries the lexicographically
/// first counterexample; some passing reports carry a certificate (e.g. the
/// spanning set).
struct LawReport {
  Law law = Law::LatticeAxioms;
  bool holds = true;
  std::vector<ElementId> witness;
  std::string detail;

  bool operator==(const LawReport&) const = default;
};

enum class PerspectiveMode { AtomsOnly, EqualHeightPairs };

}  // namespace qlat

namespace qlat::props {

// OpenMP kernels. Rows (the first witness coordinate) are scanned in parallel;
// the reported witness is always the lexicographically first violation.

/// Idempotency, commutativity, associativity, absorption and agreement of the
/// tables with the order, re-derived from the stored tables.
LawReport check_lattice_axioms(const FiniteLattice& lattice);

/// x meet (y join z) = (x meet y) join (x meet z) for all triples.
LawReport is_distributive(const FiniteLattice& lattice);

/// x <= z implies x join (y meet z) = (x join y) meet z for all triples.
LawReport is_modular(const FiniteLattice& lattice);

/// h(x meet y) + h(x join y) = h(x) + h(y) with h the longest-chain height.
LawReport satisfies_height_law(const FiniteLattice& lattice);

LawReport is_complemented(const FiniteLattice& lattice);

/// Every element is the join of the atoms below it.
LawReport is_atomic(const FiniteLattice& lattice);

std::optional<ElementId> common_complement(const FiniteLattice& lattice, ElementId x, ElementId y);

LawReport is_perspective_lattice(const FiniteLattice& lattice, PerspectiveMode mode = PerspectiveMode::AtomsOnly);

}  // namespace qlat::props

namespace qlat::reference {

// Plain serial loops with the same contracts and witness order as qlat::props.
// Kept as the comparison baseline for tests and benchmarks.

LawReport check_lattice_axioms(const FiniteLattice& lattice);
LawReport is_distributive(const FiniteLattice& lattice);
LawReport is_modular(const FiniteLattice& lattice);
LawReport satisfies_height_law(const FiniteLattice& lattice);
LawReport is_complemented(const FiniteLattice& lattice);
LawReport is_atomic(const FiniteLattice& lattice);
LawReport is_perspective_lattice(const FiniteLattice& lattice, PerspectiveMode mode = PerspectiveMode::AtomsOnly);

}  // namespace qlat::reference
