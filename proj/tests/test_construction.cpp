#include <doctest.h>

#include "oracles.hpp"
#include "qlat/covers.hpp"
#include "qlat/error.hpp"
#include "qlat/generators.hpp"
#include "qlat/pipeline.hpp"
#include "qlat/principles.hpp"
#include "qlat/projective.hpp"

using namespace qlat;
using namespace qlat::construct;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

// b, c, b' under 1 with h(1) = 2.
PartialStructure iia_triple() {
  auto split = principle_II(principle_I(2), ConstId{1}, HeightSplit{1, 1}, SplitNames{"b", "c"});
  return principle_IIa(split.structure, split.split.whole, split.split.left, split.split.right).structure;
}

}  // namespace

TEST_CASE("principle I") {
  CHECK(code_of([] { principle_I(0); }) == ErrorCode::InvalidArgument);
  const auto s = principle_I(3);
  CHECK(s.constant_count() == 2);
  CHECK(s.contains(join_eq(s.zero(), s.one(), s.one())));
  CHECK(s.height_of(s.one()) == 3u);
  const auto B = gen::boolean_lattice(3);
  const auto f = find_realization(s, B);
  REQUIRE(f);
  CHECK(B.label((*f)(s.one())) == "{a,b,c}");
  CHECK(B.label((*f)(s.zero())) == "{}");
  // Depth 1 fits only a two-element lattice.
  CHECK(find_realization(principle_I(1), gen::chain(2)));
  CHECK_FALSE(find_realization(principle_I(1), gen::chain(3)));
  CHECK_FALSE(find_realization(principle_I(1), gen::boolean_lattice(2)));
}

TEST_CASE("structure bookkeeping") {
  PartialStructure s(3);
  const auto x = s.add_constant("x", 1);
  CHECK(s.contains(join_eq(s.zero(), x, x)));
  CHECK(s.contains(join_eq(x, s.one(), s.one())));
  CHECK(s.at("x") == x);
  CHECK(code_of([&] { s.at("nope"); }) == ErrorCode::UnknownConstant);
  CHECK(code_of([&] { s.add_constant("x"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { s.add_statement(height_is(x, 2)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { s.add_statement(height_is(ConstId{9}, 1)); }) == ErrorCode::UnknownConstant);
  CHECK(code_of([&] { s.add_constant("deep", 4); }) == ErrorCode::DepthExhausted);
  CHECK_FALSE(s.find("deep"));
  const auto before = s.statements().size();
  s.add_statement(join_eq(x, s.zero(), x));  // same as 0 v x = x after sorting
  CHECK(s.statements().size() == before);
  s.add_statement(chain_bound(s.zero(), x, 1));
  CHECK(s.describe(s.statements().back()) == "d(0, x) = 1");
  CHECK(s.describe(disjoint(x, s.one())) == "1 ^ x = 0");
  CHECK(code_of([&] { s.add_statement(chain_bound(x, s.one(), 4)); }) == ErrorCode::DepthExhausted);
}

TEST_CASE("principle II") {
  const auto r = principle_II(principle_I(2), ConstId{1});
  CHECK(r.structure.constant_count() == 4);
  CHECK(r.structure.symbol(r.split.left) == "b1");
  CHECK(r.structure.symbol(r.split.right) == "c2");
  CHECK(r.structure.height_of(r.split.left) == 1u);
  CHECK(r.structure.contains(disjoint(r.split.left, r.split.right)));
  CHECK(r.structure.splits() == std::vector{r.split});
  CHECK(find_realization(r.structure, gen::boolean_lattice(2)));

  const auto branches = principle_II_branches(principle_I(3), ConstId{1});
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].structure.height_of(branches[0].split.left) == 1u);
  CHECK(branches[1].structure.height_of(branches[1].split.left) == 2u);
  for (const auto& b : branches) CHECK(find_realization(b.structure, gen::boolean_lattice(3)));

  CHECK(code_of([&] { principle_II(r.structure, r.split.left); }) == ErrorCode::DepthExhausted);
  CHECK(code_of([&] { principle_II(r.structure, ConstId{42}); }) == ErrorCode::UnknownConstant);
  CHECK(code_of([&] { principle_II(principle_I(3), ConstId{1}, HeightSplit{2, 2}); }) == ErrorCode::InvalidArgument);
  PartialStructure s(3);
  const auto free = s.add_constant("free");
  CHECK(code_of([&] { principle_II(s, free); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("principle IIa separates boolean from projective targets") {
  const auto t = iia_triple();
  CHECK(t.constant_count() == 5);
  CHECK(t.find("b'"));
  CHECK(t.height_of(t.at("b'")) == 1u);
  for (unsigned n = 1; n <= 4; ++n) CHECK_FALSE(find_realization(t, gen::boolean_lattice(n)));
  const auto M = gen::diamond_m3();
  const auto f = find_realization(t, M);
  REQUIRE(f);
  CHECK(M.label((*f)(t.at("b"))) == "a");
  CHECK(M.label((*f)(t.at("c"))) == "b");
  CHECK(M.label((*f)(t.at("b'"))) == "c");
  for (unsigned q : {2u, 3u, 5u}) CHECK(find_realization(t, gen::subspace_lattice({2, q})));
  const auto F = gen::subspace_lattice({3, 2});
  const auto line = *F.find("<100,010>");
  CHECK(find_realization(t, interval(F, F.bottom(), line)));

  PartialStructure s = principle_I(2);
  const auto x = s.add_constant("x", 1), y = s.add_constant("y", 1);
  CHECK(code_of([&] { principle_IIa(s, s.one(), x, y); }) == ErrorCode::MissingSplit);
}

TEST_CASE("tree with n leaves") {
  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto tree = build_tree(n);
    CHECK(tree.leaves.size() == n);
    CHECK(tree.splits.size() == n - 1);
    for (ConstId leaf : tree.leaves) CHECK(tree.structure.height_of(leaf) == 1u);
    CHECK(tree.leaves_under(tree.structure.one()).size() == n);
  }
  CHECK(build_tree(1).leaves == std::vector{ConstId{1}});
  CHECK(code_of([] { build_tree(0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_tree(7); }) == ErrorCode::SizeBound);
  const auto t3 = build_tree(3);
  CHECK(find_realization(t3.structure, gen::boolean_lattice(3)));
  CHECK_FALSE(find_realization(t3.structure, gen::boolean_lattice(2)));
}

TEST_CASE("perfect binary tree") {
  const auto t2 = build_binary_tree(2);
  CHECK(t2.leaves.size() == 4);
  CHECK(t2.structure.constant_count() == 2 + 2 + 4);
  CHECK_FALSE(find_realization(t2.structure, gen::boolean_lattice(2)));
  CHECK(find_realization(t2.structure, gen::boolean_lattice(4)));
  const auto t3 = build_binary_tree(3);
  CHECK(t3.leaves.size() == 8);
  CHECK(t3.structure.constant_count() - 2 == 14);
  CHECK(t3.splits.size() == 7);
  CHECK(t3.structure.splits().size() == 7);
  CHECK(build_binary_tree(0).leaves.size() == 1);
  CHECK(code_of([] { build_binary_tree(7); }) == ErrorCode::SizeBound);
}

TEST_CASE("realizations are sound, injective and lexicographically first") {
  const auto tree = build_tree(3);
  const auto F = gen::subspace_lattice({3, 2});
  std::vector<Realization> all;
  for_each_realization(tree.structure, F, [&](const Realization& r) {
    all.push_back(r);
    return true;
  });
  REQUIRE_FALSE(all.empty());
  CHECK(std::is_sorted(all.begin(), all.end(), [](const Realization& a, const Realization& b) { return a.image < b.image; }));
  CHECK(find_realization(tree.structure, F) == all.front());
  for (const auto& r : all) CHECK(satisfies(tree.structure, F, r));
  // A line for the height-2 node (7), a point off it (4), an ordered pair of
  // points on the line (3 * 2).
  CHECK(all.size() == 7 * 4 * 6);
  std::size_t limited = for_each_realization(tree.structure, F, [](const Realization&) { return true; }, {}, 5);
  CHECK(limited == 5);
}

TEST_CASE("first_violation explains a bad map") {
  const auto s = iia_triple();
  const auto M = gen::diamond_m3();
  auto f = *find_realization(s, M);
  CHECK_FALSE(first_violation(s, M, f));
  auto moved = f;
  moved.image[0] = M.top();
  CHECK(first_violation(s, M, moved)->kind == Violation::Kind::BoundsMoved);
  auto collide = f;
  collide.image[s.at("b'").value] = collide.image[s.at("b").value];
  CHECK(first_violation(s, M, collide)->kind == Violation::Kind::NotInjective);
  const auto B = gen::boolean_lattice(2);
  PartialStructure t(2);
  const auto x = t.add_constant("x", 2);
  (void)x;
  // x must sit at height 2 but also differ from 1: map it to an atom.
  Realization g{{B.bottom(), B.top(), ElementId{1}}};
  const auto v = first_violation(t, B, g);
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::StatementFails);
  CHECK(v->statement->kind == StatementKind::HeightIs);
  CHECK_THROWS_AS(first_violation(t, B, Realization{{B.bottom()}}), Error);
}

TEST_CASE("fixed assignments steer the search") {
  const auto t = iia_triple();
  const auto F = gen::subspace_lattice({2, 3});
  const auto pts = atoms(F);
  const auto f = find_realization(t, F, {{t.at("b"), pts[3]}});
  REQUIRE(f);
  CHECK((*f)(t.at("b")) == pts[3]);
  CHECK_FALSE(find_realization(t, F, {{t.at("b"), F.top()}}));
  CHECK(code_of([&] { find_realization(t, F, {{ConstId{77}, F.top()}}); }) == ErrorCode::UnknownConstant);
}

TEST_CASE("independent atoms by the induction") {
  const auto B = gen::boolean_lattice(3);
  const auto ia = derive_independent_atoms(build_tree(3), B);
  CHECK(ia.atoms.size() == 3);
  CHECK(ia.stepwise);
  CHECK(ia.join_heights == std::vector<unsigned>{1, 2, 3});
  CHECK(B.join_all(ia.atoms) == B.top());
  for (ElementId a : ia.atoms) CHECK(B.height(a) == 1);

  const auto F = gen::subspace_lattice({3, 2});
  const auto fa = derive_independent_atoms(build_tree(3), F);
  REQUIRE(fa.atoms.size() == 3);
  CHECK(F.height(F.join(fa.atoms[0], fa.atoms[1])) == 2);
  CHECK_FALSE(F.leq(fa.atoms[2], F.join(fa.atoms[0], fa.atoms[1])));
  CHECK(projective::is_independent(F, fa.atoms));

  const auto one = derive_independent_atoms(build_tree(1), gen::boolean_lattice(1));
  CHECK(one.atoms == std::vector{ElementId{1}});

  CHECK(code_of([] { derive_independent_atoms(build_tree(3), gen::boolean_lattice(2)); }) == ErrorCode::RealizationMissing);
}

TEST_CASE("boolean sublattices") {
  CHECK(enumerate_boolean_sublattices(gen::boolean_lattice(3)).size() == 5);
  CHECK(enumerate_boolean_sublattices(gen::chain(2)).size() == 1);
  CHECK(enumerate_boolean_sublattices(build_lattice({"*"}, {})).size() == 1);
  CHECK(enumerate_boolean_sublattices(gen::diamond_m3()).size() == 1 + 3);

  const auto F = gen::subspace_lattice({3, 2});
  const auto pts = atoms(F);
  const std::vector<ElementId> pq{pts[0], pts[1]};
  const auto subs = enumerate_boolean_sublattices(F, pq);
  CHECK(subs.size() == 4);
  for (const auto& b : subs) {
    CHECK(b.contains(F.join(pts[0], pts[1])));
    CHECK(b.height_consistent(F));
  }
  CHECK_THROWS_AS(enumerate_boolean_sublattices(gen::boolean_lattice(9)), Error);
}

TEST_CASE("statement sets") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto B = gen::boolean_lattice(n);
    std::vector<ElementId> all(B.elements().begin(), B.elements().end());
    CHECK(statement_set(B, all).size() == (std::size_t{1} << (2 * n)));
  }
}

TEST_CASE("covers and the closure") {
  const auto B = gen::boolean_lattice(3);
  const auto tree = build_tree(3);
  const auto f = find_realization(tree.structure, B);
  const auto covers = covers_of(tree.structure, tree.leaves, B, f);
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].parts.size() == 1);
  CHECK(covers[0].parts[0].elements.size() == 8);

  const std::vector<ConstId> bounds{ConstId{0}, ConstId{1}};
  CHECK(covers_of(tree.structure, bounds, B, f).size() == 1);

  const auto c = principle_III_closure(tree.structure, tree.leaves, B, f);
  REQUIRE(c);
  std::vector<ElementId> all(B.elements().begin(), B.elements().end());
  CHECK(c->statements == statement_set(B, all));

  const auto ext = apply_principle_III(tree.structure, B, *f, *c);
  CHECK(ext.structure.constant_count() == 8);
  CHECK(satisfies(ext.structure, B, ext.realization));
}

TEST_CASE("closure over two points of the Fano lattice keeps only their line") {
  const auto F = gen::subspace_lattice({3, 2});
  const auto pts = atoms(F);
  PartialStructure s = principle_I(3);
  const auto a = s.add_constant("a", 1), b = s.add_constant("b", 1);
  const auto f = find_realization(s, F, {{a, pts[0]}, {b, pts[1]}});
  REQUIRE(f);
  const std::vector<ConstId> m{a, b};
  const auto c = principle_III_closure(s, m, F, f);
  REQUIRE(c);
  CHECK(c->extensions == 4);
  const auto line = F.join(pts[0], pts[1]);
  CHECK(std::binary_search(c->statements.begin(), c->statements.end(), height_is(line, 2u)));
  CHECK(c->elements == std::vector{F.bottom(), pts[0], pts[1], line, F.top()});
  for (ElementId p : pts)
    if (p != pts[0] && p != pts[1] && F.leq(p, line)) CHECK_FALSE(std::binary_search(c->elements.begin(), c->elements.end(), p));
}

TEST_CASE("closure over two coplanar lines names their meet") {
  const auto F = gen::subspace_lattice({3, 2});
  const projective::GeometryView v(F);
  const auto l1 = v.lines()[0], l2 = v.lines()[1];
  PartialStructure s = principle_I(3);
  const auto c1 = s.add_constant("L1", 2), c2 = s.add_constant("L2", 2);
  s.add_statement(join_eq(c1, c2, s.one()));
  const auto f = find_realization(s, F, {{c1, l1}, {c2, l2}});
  REQUIRE(f);
  const std::vector<ConstId> m{c1, c2, s.one()};
  const auto c = principle_III_closure(s, m, F, f);
  REQUIRE(c);
  const auto p = F.meet(l1, l2);
  CHECK(F.height(p) == 1);
  CHECK(std::binary_search(c->statements.begin(), c->statements.end(), meet_eq(l1, l2, p)));
}

TEST_CASE("closure is absent when no boolean extension hosts M") {
  // Three collinear points never sit in one height-consistent boolean sublattice.
  const auto F = gen::subspace_lattice({3, 2});
  const auto line = *F.find("<100,010>");
  std::vector<ElementId> on;
  for (ElementId p : atoms(F))
    if (F.leq(p, line)) on.push_back(p);
  PartialStructure s = principle_I(3);
  const auto a = s.add_constant("a", 1), b = s.add_constant("b", 1), c = s.add_constant("c", 1);
  const auto f = find_realization(s, F, {{a, on[0]}, {b, on[1]}, {c, on[2]}});
  const std::vector<ConstId> m{a, b, c};
  CHECK(covers_of(s, m, F, f).size() == 3);
  CHECK_FALSE(principle_III_closure(s, m, F, f));
}

TEST_CASE("cover bounds") {
  const auto B = gen::boolean_lattice(3);
  const auto s = build_tree(3).structure;
  std::vector<ConstId> nine(9, ConstId{0});
  CHECK(code_of([&] { covers_of(s, nine, B); }) == ErrorCode::SizeBound);
  const std::vector<ConstId> one{ConstId{1}};
  CHECK(code_of([&] { covers_of(principle_I(4), one, gen::subspace_lattice({4, 2})); }) == ErrorCode::SizeBound);
  CHECK(code_of([&] { covers_of(s, one, gen::boolean_lattice(2)); }) == ErrorCode::RealizationMissing);
  const std::vector<ConstId> foreign{ConstId{40}};
  CHECK(code_of([&] { covers_of(s, foreign, B); }) == ErrorCode::UnknownConstant);
}

TEST_CASE("boolean pipeline") {
  for (unsigned n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto r = verify_section5(n);
    for (const auto& s : r.steps) {
      CAPTURE(s.name);
      CAPTURE(s.detail);
      CHECK(s.passed);
    }
  }
  CHECK(code_of([] { verify_section5(0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { verify_section5(5); }) == ErrorCode::SizeBound);
}

TEST_CASE("projective pipeline") {
  for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(q);
    const auto r = verify_section7(n, q);
    for (const auto& s : r.steps) {
      CAPTURE(s.name);
      CAPTURE(s.detail);
      CHECK(s.passed);
    }
  }
  CHECK(code_of([] { verify_section7(1, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { verify_section7(3, 4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { verify_section7(4, 2); }) == ErrorCode::SizeBound);
}
