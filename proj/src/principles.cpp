#include "qlat/principles.hpp"

#include <algorithm>
#include <deque>

#include "qlat/error.hpp"
#include "qlat/limits.hpp"

namespace qlat::construct {

PartialStructure principle_I(unsigned depth_bound) { return PartialStructure(depth_bound); }

SplitResult principle_II(const PartialStructure& s, ConstId a, std::optional<HeightSplit> heights,
                         std::optional<SplitNames> names) {
  const auto ha = s.height_of(a);  // throws UnknownConstant
  if (!ha) throw Error(ErrorCode::InvalidArgument, "height of '" + s.symbol(a) + "' is not declared");
  if (*ha < 2) {
    throw Error(ErrorCode::DepthExhausted, "'" + s.symbol(a) + "' has height " + std::to_string(*ha) + ", needs 2");
  }
  const HeightSplit hs = heights.value_or(HeightSplit{(*ha + 1) / 2, *ha / 2});
  if (hs.left == 0 || hs.right == 0 || hs.left + hs.right != *ha) {
    throw Error(ErrorCode::InvalidArgument, "split (" + std::to_string(hs.left) + ", " + std::to_string(hs.right) +
                                                ") does not add up to h = " + std::to_string(*ha));
  }
  SplitResult out{s, {}};
  auto& t = out.structure;
  const ConstId b = names ? t.add_constant(names->left, hs.left) : t.fresh_constant("b", hs.left);
  const ConstId c = names ? t.add_constant(names->right, hs.right) : t.fresh_constant("c", hs.right);
  t.add_statement(join_eq(b, c, a));
  t.add_statement(disjoint(b, c));
  t.add_statement(join_eq(b, a, a));
  t.add_statement(join_eq(c, a, a));
  out.split = Split{a, b, c};
  return out;
}

std::vector<SplitResult> principle_II_branches(const PartialStructure& s, ConstId a) {
  const auto ha = s.height_of(a);
  if (!ha) throw Error(ErrorCode::InvalidArgument, "height of '" + s.symbol(a) + "' is not declared");
  if (*ha < 2) {
    throw Error(ErrorCode::DepthExhausted, "'" + s.symbol(a) + "' has height " + std::to_string(*ha) + ", needs 2");
  }
  std::vector<SplitResult> out;
  for (unsigned k = 1; k < *ha; ++k) out.push_back(principle_II(s, a, HeightSplit{k, *ha - k}));
  return out;
}

ThirdPointResult principle_IIa(const PartialStructure& s, ConstId a, ConstId b, ConstId c) {
  if (!s.contains(join_eq(b, c, a))) {
    throw Error(ErrorCode::MissingSplit, s.symbol(b) + " v " + s.symbol(c) + " = " + s.symbol(a) + " is not a statement");
  }
  ThirdPointResult out{s, {}};
  auto& t = out.structure;
  std::string name = s.symbol(b) + "'";
  while (t.find(name)) name += "'";
  out.third = t.add_constant(std::move(name), s.height_of(b));
  t.add_statement(join_eq(out.third, c, a));
  t.add_statement(disjoint(out.third, c));
  t.add_statement(join_eq(out.third, a, a));
  return out;
}

std::optional<Split> Tree::parent_split(ConstId c) const {
  for (const auto& sp : splits)
    if (sp.left == c || sp.right == c) return sp;
  return std::nullopt;
}

std::vector<ConstId> Tree::leaves_under(ConstId c) const {
  std::vector<ConstId> out;
  std::vector<ConstId> stack{c};
  while (!stack.empty()) {
    const ConstId x = stack.back();
    stack.pop_back();
    auto it = std::find_if(splits.begin(), splits.end(), [x](const Split& sp) { return sp.whole == x; });
    if (it == splits.end()) {
      out.push_back(x);
    } else {
      stack.push_back(it->right);
      stack.push_back(it->left);
    }
  }
  return out;
}

namespace {

Tree grow(unsigned depth_bound) {
  Tree tree{principle_I(depth_bound), {}, {}};
  unsigned leaf_count = 0, inner_count = 0;
  auto name_for = [&](unsigned h) {
    return h == 1 ? "p" + std::to_string(++leaf_count) : "t" + std::to_string(++inner_count);
  };
  std::deque<ConstId> pending{tree.structure.one()};
  while (!pending.empty()) {
    const ConstId a = pending.front();
    pending.pop_front();
    const unsigned h = *tree.structure.height_of(a);
    if (h == 1) {
      tree.leaves.push_back(a);
      continue;
    }
    const HeightSplit hs{(h + 1) / 2, h / 2};
    SplitNames names;
    names.left = name_for(hs.left);
    names.right = name_for(hs.right);
    auto r = principle_II(tree.structure, a, hs, names);
    tree.structure = std::move(r.structure);
    tree.splits.push_back(r.split);
    pending.push_back(r.split.left);
    pending.push_back(r.split.right);
  }
  return tree;
}

}  // namespace

Tree build_tree(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "tree depth must be at least 1");
  if (n > kMaxTreeDepth) {
    throw Error(ErrorCode::SizeBound, "tree depth " + std::to_string(n) + " exceeds " + std::to_string(kMaxTreeDepth));
  }
  return grow(n);
}

Tree build_binary_tree(unsigned levels) {
  if (levels > kMaxTreeDepth) {
    throw Error(ErrorCode::SizeBound, "tree depth " + std::to_string(levels) + " exceeds " + std::to_string(kMaxTreeDepth));
  }
  return grow(1U << levels);
}

IndependentAtoms derive_independent_atoms(const Tree& tree, const FiniteLattice& L, const std::optional<Realization>& f) {
  const auto realization = f ? f : find_realization(tree.structure, L);
  if (!realization) throw Error(ErrorCode::RealizationMissing, "the tree has no realization in the lattice");
  if (!satisfies(tree.structure, L, *realization)) {
    throw Error(ErrorCode::RealizationMissing, "the supplied map is not a realization of the tree");
  }
  IndependentAtoms out;
  if (tree.leaves.empty()) return out;

  ElementId running = L.bottom();
  auto take = [&](ConstId leaf) {
    const ElementId q = (*realization)(leaf);
    if (L.leq(q, running)) return;
    const unsigned before = L.height(running);
    running = L.join(running, q);
    out.atoms.push_back(q);
    out.leaves.push_back(leaf);
    out.join_heights.push_back(L.height(running));
    out.stepwise = out.stepwise && L.height(running) == before + 1;
  };
  // P_1 is the first leaf; each P_{i+1} is the parent of P_i.
  ConstId p = tree.leaves.front();
  take(p);
  while (auto up = tree.parent_split(p)) {
    p = up->whole;
    for (ConstId leaf : tree.leaves_under(p)) take(leaf);
  }
  return out;
}

}  // namespace qlat::construct
