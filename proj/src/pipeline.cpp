#include "qlat/pipeline.hpp"

#include <algorithm>

#include "qlat/covers.hpp"
#include "qlat/error.hpp"
#include "qlat/generators.hpp"
#include "qlat/limits.hpp"
#include "qlat/principles.hpp"
#include "qlat/projective.hpp"

namespace qlat::construct {
namespace {

void step(PipelineReport& r, std::string name, bool passed, std::string detail) {
  r.steps.push_back(PipelineStep{std::move(name), passed, std::move(detail)});
}

std::string labels_of(const FiniteLattice& L, const std::vector<ElementId>& xs) {
  std::string out;
  for (ElementId x : xs) out += (out.empty() ? "" : " ") + L.label(x);
  return out;
}

bool declared_heights_within(const PartialStructure& s) {
  return std::all_of(s.statements().begin(), s.statements().end(), [&](const Statement& st) {
    return (st.kind != StatementKind::HeightIs && st.kind != StatementKind::ChainBound) || st.value <= s.depth_bound();
  });
}

Realization restrict(const Realization& f, std::size_t count) {
  return Realization{std::vector<ElementId>(f.image.begin(), f.image.begin() + static_cast<std::ptrdiff_t>(count))};
}

// Atoms step shared by both pipelines.
void check_atoms(PipelineReport& r, const Tree& tree, const FiniteLattice& L, const Realization& f, unsigned n) {
  const auto ia = derive_independent_atoms(tree, L, f);
  std::vector<unsigned> expected(n);
  for (unsigned i = 0; i < n; ++i) expected[i] = i + 1;
  const bool ok = ia.atoms.size() == n && ia.stepwise && ia.join_heights == expected &&
                  projective::is_independent(L, ia.atoms) && L.join_all(ia.atoms) == L.top();
  step(r, "independent-atoms", ok,
       std::to_string(ia.atoms.size()) + " atoms {" + labels_of(L, ia.atoms) + "}, join height " +
           std::to_string(ia.join_heights.empty() ? 0 : ia.join_heights.back()));
}

}  // namespace

bool PipelineReport::passed() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const PipelineStep& s) { return s.passed; });
}

PipelineReport verify_section5(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > 4) throw Error(ErrorCode::SizeBound, "the boolean pipeline is limited to n <= 4");
  PipelineReport r{"s5", n, 0, {}};
  const FiniteLattice B = gen::boolean_lattice(n);

  const auto base = find_realization(principle_I(n), B);
  step(r, "principle-I", base.has_value(), "0 -> " + B.label(B.bottom()) + ", 1 -> " + B.label(B.top()));

  const Tree tree = build_tree(n);
  step(r, "tree", tree.leaves.size() == n,
       std::to_string(tree.leaves.size()) + " leaves, " + std::to_string(tree.splits.size()) + " splits");

  const auto f = find_realization(tree.structure, B);
  step(r, "tree-realization", f.has_value(), f ? "realized in B_" + std::to_string(n) : "no realization");
  if (!f) return r;

  check_atoms(r, tree, B, *f, n);

  const auto closure = principle_III_closure(tree.structure, tree.leaves, B, f);
  std::vector<ElementId> all(B.elements().begin(), B.elements().end());
  const auto full = statement_set(B, all);
  step(r, "principle-III-closure", closure && closure->statements == full,
       closure ? std::to_string(closure->elements.size()) + " elements, " + std::to_string(closure->statements.size()) +
                     " statements from " + std::to_string(closure->extensions) + " extension(s)"
               : "no closure");
  if (!closure) return r;

  const Extended ext = apply_principle_III(tree.structure, B, *f, *closure);
  const bool ext_ok = satisfies(ext.structure, B, ext.realization) && find_realization(ext.structure, B).has_value();
  step(r, "extension-realization", ext_ok,
       std::to_string(ext.structure.constant_count()) + " constants, " + std::to_string(ext.added.size()) + " added");

  // Every constant is named, so a split is realizable only by constants already present.
  std::size_t splits_checked = 0, splits_missing = 0;
  const auto& S = ext.structure;
  const auto& g = ext.realization;
  for (ConstId a : S.constants()) {
    const unsigned h = S.height_of(a).value_or(0);
    for (unsigned k = 1; k < h; ++k) {
      ++splits_checked;
      bool found = false;
      for (ConstId b : S.constants()) {
        if (S.height_of(b) != k || !B.leq(g(b), g(a))) continue;
        for (ConstId c : S.constants()) {
          if (S.height_of(c) == h - k && B.join(g(b), g(c)) == g(a) && B.meet(g(b), g(c)) == B.bottom()) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) ++splits_missing;
    }
  }
  step(r, "principle-II-closed", splits_missing == 0,
       std::to_string(splits_checked) + " splits, " + std::to_string(splits_missing) + " unwitnessed");

  std::size_t pairs = 0, growing = 0;
  for (std::size_t i = 0; i < tree.leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < tree.leaves.size(); ++j) {
      ++pairs;
      const std::vector<ConstId> m{tree.leaves[i], tree.leaves[j]};
      const auto c = principle_III_closure(S, m, B, g);
      if (!c) {
        ++growing;
        continue;
      }
      const auto again = apply_principle_III(S, B, g, *c);
      if (!again.added.empty() || again.structure.statements().size() != S.statements().size()) ++growing;
    }
  }
  step(r, "principle-III-closed", growing == 0,
       std::to_string(pairs) + " leaf pairs, " + std::to_string(growing) + " adding statements");

  step(r, "principle-IV", declared_heights_within(S), "all heights <= " + std::to_string(n));
  return r;
}

PipelineReport verify_section7(unsigned n, unsigned q) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (n > 4) throw Error(ErrorCode::SizeBound, "the projective pipeline is limited to n <= 4");
  const FiniteLattice V = gen::subspace_lattice({n, q});
  if (V.size() > kMaxCoverAmbient) {
    throw Error(ErrorCode::SizeBound, "subspace lattice has " + std::to_string(V.size()) +
                                          " elements, covers are limited to " + std::to_string(kMaxCoverAmbient));
  }
  const FiniteLattice B = gen::boolean_lattice(n);
  PipelineReport r{"s7", n, q, {}};

  const auto ch = projective::verify_bvn_characterization(V, n);
  std::string failed;
  for (const auto& c : ch.clauses)
    if (!c.holds) failed += (failed.empty() ? "" : ",") + std::string(to_string(c.law));
  step(r, "characterization", ch.holds(), failed.empty() ? "all clauses hold" : "failing: " + failed);

  const Tree tree = build_tree(n);
  PartialStructure with_iia = tree.structure;
  for (const auto& sp : tree.splits) with_iia = principle_IIa(with_iia, sp.whole, sp.left, sp.right).structure;
  const auto f = find_realization(with_iia, V);
  const bool in_boolean = find_realization(with_iia, B).has_value();
  step(r, "tree-with-IIa", f.has_value() && !in_boolean,
       std::string(f ? "realized" : "not realized") + " in the subspace lattice, " +
           (in_boolean ? "realized" : "not realized") + " in B_" + std::to_string(n));
  if (!f) return r;

  check_atoms(r, tree, V, restrict(*f, tree.structure.constant_count()), n);

  const projective::GeometryView view(V);
  const auto& points = view.points();
  std::size_t point_pairs = 0, point_bad = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      ++point_pairs;
      PartialStructure s = principle_I(n);
      const ConstId p = s.add_constant("p", 1), t = s.add_constant("r", 1);
      s.add_statement(disjoint(p, t));
      const auto g = find_realization(s, V, {{p, points[i]}, {t, points[j]}});
      const std::vector<ConstId> m{p, t};
      const auto c = g ? principle_III_closure(s, m, V, g) : std::nullopt;
      const ElementId line = V.join(points[i], points[j]);
      const bool ok = c && std::binary_search(c->elements.begin(), c->elements.end(), line) && V.height(line) == 2;
      if (!ok) ++point_bad;
    }
  }
  step(r, "join-of-points", point_bad == 0,
       std::to_string(point_pairs) + " point pairs, " + std::to_string(point_bad) + " without a height-2 join");

  std::size_t line_bad = 0;
  for (ElementId line : view.lines()) {
    PartialStructure s = principle_I(n);
    const ConstId a = line == V.top() ? s.one() : s.add_constant("a", 2);
    auto split = principle_II(s, a, HeightSplit{1, 1}, SplitNames{"b", "c"});
    auto third = principle_IIa(split.structure, a, split.split.left, split.split.right);
    const auto g = find_realization(third.structure, V, {{a, line}});
    const bool ok = g && V.height((*g)(third.third)) == 1 && V.leq((*g)(third.third), line) &&
                    (*g)(third.third) != (*g)(split.split.left) && (*g)(third.third) != (*g)(split.split.right);
    if (!ok) ++line_bad;
  }
  step(r, "third-point", line_bad == 0,
       std::to_string(view.lines().size()) + " lines, " + std::to_string(line_bad) + " without a third point");

  const auto contrast = projective::check_p3_third_point(projective::GeometryView(B));
  step(r, "boolean-contrast", !contrast.holds, "B_" + std::to_string(n) + ": " + contrast.detail);

  std::size_t coplanar = 0, meet_bad = 0;
  const auto& lines = view.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const ElementId plane = V.join(lines[i], lines[j]);
      if (V.height(plane) != 3) continue;
      ++coplanar;
      PartialStructure s = principle_I(n);
      const ConstId l1 = s.add_constant("L1", 2), l2 = s.add_constant("L2", 2);
      const ConstId p = plane == V.top() ? s.one() : s.add_constant("P", 3);
      s.add_statement(join_eq(l1, l2, p));
      Assignment fixed{{l1, lines[i]}, {l2, lines[j]}};
      if (p != s.one()) fixed.push_back({p, plane});
      const auto g = find_realization(s, V, fixed);
      const std::vector<ConstId> m{l1, l2, p};
      const auto c = g ? principle_III_closure(s, m, V, g) : std::nullopt;
      const ElementId point = V.meet(lines[i], lines[j]);
      const bool ok = c && V.height(point) == 1 &&
                      std::binary_search(c->statements.begin(), c->statements.end(), meet_eq(lines[i], lines[j], point));
      if (!ok) ++meet_bad;
    }
  }
  step(r, "coplanar-meet", meet_bad == 0,
       std::to_string(coplanar) + " coplanar line pairs, " + std::to_string(meet_bad) + " without a height-1 meet");

  step(r, "principle-IV", declared_heights_within(with_iia), "all heights <= " + std::to_string(n));
  return r;
}

}  // namespace qlat::construct
