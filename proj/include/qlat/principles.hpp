#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/realization.hpp"
#include "qlat/structure.hpp"

namespace qlat::construct {

/// 0 and 1 with 0 join 1 = 1, h(0) = 0 and h(1) = depth_bound.
/// Throws InvalidArgument for depth_bound 0.
PartialStructure principle_I(unsigned depth_bound);

struct HeightSplit {
  unsigned left = 1, right = 1;

  auto operator<=>(const HeightSplit&) const = default;
};

struct SplitNames {
  std::string left, right;
};

struct SplitResult {
  PartialStructure structure;
  Split split;
};

/// Adds b, c with b join c = a, b meet c = 0 and the given heights, which must
/// be positive and sum to h(a). Without `heights` the split is (ceil, floor).
/// Fresh names are b<k>, c<k> unless `names` is given.
///
/// Throws UnknownConstant, InvalidArgument when h(a) is undeclared or the
/// heights do not add up, and DepthExhausted when h(a) < 2.
SplitResult principle_II(const PartialStructure& s, ConstId a, std::optional<HeightSplit> heights = std::nullopt,
                         std::optional<SplitNames> names = std::nullopt);

/// One result per admissible split (1, h-1), (2, h-2), ..., (h-1, 1).
std::vector<SplitResult> principle_II_branches(const PartialStructure& s, ConstId a);

struct ThirdPointResult {
  PartialStructure structure;
  ConstId third;  // b'
};

/// Adds b' (named after b with a trailing prime) with b' join c = a,
/// b' meet c = 0 and h(b') = h(b). Distinctness from b and c is carried by
/// injectivity of realizations. Throws MissingSplit unless b join c = a is in s.
ThirdPointResult principle_IIa(const PartialStructure& s, ConstId a, ConstId b, ConstId c);

/// Result of splitting 1 down to height-1 leaves.
struct Tree {
  PartialStructure structure;
  std::vector<ConstId> leaves;  // creation order
  std::vector<Split> splits;    // breadth-first from 1

  /// Parent split of c, if c is a child in one.
  std::optional<Split> parent_split(ConstId c) const;
  /// Leaves below c in the tree (c itself when c is a leaf).
  std::vector<ConstId> leaves_under(ConstId c) const;
};

/// h(1) = n, split by principle II with (ceil, floor) heights until every leaf
/// has height 1, so there are exactly n leaves p1..pn. Internal constants are
/// t1, t2, ... Throws InvalidArgument for n = 0 and SizeBound above 6.
Tree build_tree(unsigned n);

/// Perfect binary tree with `levels` levels of splitting: h(1) = 2^levels,
/// 2^levels leaves p1.. and 2^levels - 2 internal constants t1.. Throws
/// SizeBound above 6.
Tree build_binary_tree(unsigned levels);

struct IndependentAtoms {
  std::vector<ElementId> atoms;       // q_1, q_2, ...
  std::vector<ConstId> leaves;        // the leaf each q_i is the image of
  std::vector<unsigned> join_heights; // h(q_1 v ... v q_i)
  bool stepwise = true;               // every step raised the height by exactly 1
};

/// Picks leaf images one at a time, climbing the ancestors of the first leaf:
/// under each ancestor P_i every leaf whose image is not yet below the running
/// join is taken. Uses `f` or the first realization of the tree in `lattice`.
/// Throws RealizationMissing when there is none.
IndependentAtoms derive_independent_atoms(const Tree& tree, const FiniteLattice& lattice,
                                          const std::optional<Realization>& f = std::nullopt);

}  // namespace qlat::construct
