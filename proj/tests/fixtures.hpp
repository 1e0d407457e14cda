#pragma once

#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "qlat/error.hpp"
#include "qlat/principles.hpp"

namespace fixtures {

using qlat::construct::PartialStructure;

struct NamedStructure {
  std::string name;
  PartialStructure structure;
};

/// Partial structures of at most 8 constants.
inline std::vector<NamedStructure> structures() {
  using namespace qlat::construct;
  std::vector<NamedStructure> out;
  for (unsigned d = 1; d <= 4; ++d) out.push_back({"principle-I-" + std::to_string(d), principle_I(d)});
  for (unsigned n = 1; n <= 4; ++n) out.push_back({"tree-" + std::to_string(n), build_tree(n).structure});
  out.push_back({"binary-tree-1", build_binary_tree(1).structure});
  out.push_back({"binary-tree-2", build_binary_tree(2).structure});
  for (const auto& b : principle_II_branches(principle_I(3), ConstId{1}))
    out.push_back({"branch-" + std::to_string(out.size()), b.structure});

  for (unsigned n : {2u, 3u}) {
    const auto tree = build_tree(n);
    PartialStructure s = tree.structure;
    for (const auto& sp : tree.splits) s = principle_IIa(s, sp.whole, sp.left, sp.right).structure;
    out.push_back({"tree-iia-" + std::to_string(n), s});
  }

  {
    PartialStructure s = principle_I(3);
    const auto l1 = s.add_constant("L1", 2), l2 = s.add_constant("L2", 2);
    s.add_statement(join_eq(l1, l2, s.one()));
    const auto p = s.add_constant("P", 1);
    s.add_statement(meet_eq(l1, l2, p));
    out.push_back({"coplanar-lines", s});
  }
  {
    PartialStructure s = principle_I(2);
    const auto a = s.add_constant("a"), b = s.add_constant("b"), c = s.add_constant("c");
    s.add_statement(join_eq(a, b, s.one()));
    s.add_statement(join_eq(b, c, s.one()));
    s.add_statement(join_eq(a, c, s.one()));
    out.push_back({"three-unranked", s});
  }

  // Seeded random structures: up to 4 extra constants, random heights and
  // statements. Statements that would break an invariant are skipped.
  std::mt19937 rng(20240601);
  for (int i = 0; i < 60; ++i) {
    const unsigned depth = 1 + rng() % 4;
    PartialStructure s = principle_I(depth);
    const unsigned extra = 1 + rng() % 4;
    for (unsigned k = 0; k < extra; ++k) {
      std::optional<unsigned> h;
      if (rng() % 3 != 0) h = rng() % (depth + 1);
      s.add_constant("x" + std::to_string(k), h);
    }
    const auto count = static_cast<std::uint32_t>(s.constant_count());
    const unsigned statements = rng() % 5;
    for (unsigned k = 0; k < statements; ++k) {
      const ConstId a{static_cast<std::uint32_t>(rng() % count)}, b{static_cast<std::uint32_t>(rng() % count)},
          c{static_cast<std::uint32_t>(rng() % count)};
      try {
        switch (rng() % 4) {
          case 0: s.add_statement(join_eq(a, b, c)); break;
          case 1: s.add_statement(meet_eq(a, b, c)); break;
          case 2: s.add_statement(disjoint(a, b)); break;
          default: s.add_statement(chain_bound(s.zero(), a, static_cast<unsigned>(rng() % (depth + 1)))); break;
        }
      } catch (const qlat::Error&) {
      }
    }
    out.push_back({"random-" + std::to_string(i), s});
  }
  return out;
}

/// Target lattices of at most 16 elements.
inline std::vector<corpus::Named> targets() {
  std::vector<corpus::Named> out;
  for (auto& l : corpus::small())
    if (l.lattice.size() <= 16) out.push_back(std::move(l));
  return out;
}

}  // namespace fixtures
