#pragma once

#include "qlat/lattice.hpp"

namespace qlat::gen {

struct SubspaceLatticeSpec {
  unsigned dimension = 1;    // n >= 1
  unsigned field_order = 2;  // prime q
};

/// Powerset of n atoms ordered by containment, 1 <= n <= 12. Element i is the
/// subset with bitmask i; labels look like "{a,c}".
FiniteLattice boolean_lattice(unsigned n);

/// All linear subspaces of the n-dimensional space over the prime field of
/// order q, ordered by inclusion. Meet is intersection, join is the span of
/// the union and height is dimension. Elements are sorted by dimension, then
/// by their reduced row-echelon basis, which is also the label ("<10,01>").
FiniteLattice subspace_lattice(SubspaceLatticeSpec spec);

/// Bottom, three pairwise incomparable atoms a, b, c, top.
FiniteLattice diamond_m3();

/// The pentagon 0 < a < c < 1, 0 < b < 1.
FiniteLattice pentagon_n5();

/// Total order 0 < 1 < ... < k-1, k >= 2.
FiniteLattice chain(unsigned k);

bool is_prime(unsigned q) noexcept;

}  // namespace qlat::gen
