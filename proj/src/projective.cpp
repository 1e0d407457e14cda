#include "qlat/projective.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "qlat/error.hpp"
#include "qlat/limits.hpp"
#include "row_scan.hpp"

namespace qlat::projective {
namespace {

using Witness = std::optional<std::vector<ElementId>>;

LawReport verdict(Law law, Witness witness, std::string detail = {}) {
  if (!witness) return LawReport{law, true, {}, std::move(detail)};
  return LawReport{law, false, std::move(*witness), std::move(detail)};
}

void require_atomic(const FiniteLattice& L) {
  if (auto r = props::is_atomic(L); !r.holds) {
    throw Error(ErrorCode::NotAtomic, "'" + L.label(r.witness.front()) + "' is not a join of atoms",
                {r.witness.front().value});
  }
}

}  // namespace

bool is_graded(const FiniteLattice& L) {
  for (ElementId x : L.elements())
    for (ElementId y : L.upper_neighbors(x))
      if (L.height(y) != L.height(x) + 1) return false;
  return true;
}

GeometryView::GeometryView(const FiniteLattice& lattice) : lattice_(&lattice) {
  if (!is_graded(lattice)) throw Error(ErrorCode::NotGraded, "heights do not grade the lattice");
  for (ElementId x : lattice.elements()) {
    switch (lattice.height(x)) {
      case 1: points_.push_back(x); break;
      case 2: lines_.push_back(x); break;
      case 3: planes_.push_back(x); break;
      default: break;
    }
  }
}

std::vector<ElementId> GeometryView::points_on(ElementId x) const {
  std::vector<ElementId> out;
  for (ElementId p : points_)
    if (lattice_->leq(p, x)) out.push_back(p);
  return out;
}

LawReport check_p1(const GeometryView& view) {
  const auto& L = view.lattice();
  const auto& pts = view.points();
  std::size_t bad_count = 0;
  auto w = detail::first_failing_row(pts.size(), [&](std::size_t i) -> Witness {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::size_t through = 0;
      for (ElementId line : view.lines())
        if (L.leq(pts[i], line) && L.leq(pts[j], line)) ++through;
      if (through != 1) return std::vector{pts[i], pts[j], ElementId{static_cast<std::uint32_t>(through)}};
    }
    return std::nullopt;
  });
  if (!w) return verdict(Law::P1, std::nullopt);
  bad_count = w->back().value;
  w->pop_back();
  return verdict(Law::P1, std::move(w), std::to_string(bad_count) + " lines through the pair");
}

LawReport check_p2(const GeometryView& view) {
  const auto& L = view.lattice();
  const auto& lines = view.lines();
  unsigned lo = std::numeric_limits<unsigned>::max(), hi = 0;
  std::size_t coplanar = 0;
  Witness w;
  std::string detail;
  for (std::size_t i = 0; i < lines.size() && !w; ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (L.height(L.join(lines[i], lines[j])) > 3) continue;
      ++coplanar;
      const unsigned h = L.height(L.meet(lines[i], lines[j]));
      lo = std::min(lo, h);
      hi = std::max(hi, h);
      if (h < 1) {
        w = std::vector{lines[i], lines[j]};
        detail = "coplanar lines meet at height 0";
        break;
      }
    }
  }
  if (!w) {
    detail = std::to_string(coplanar) + " coplanar line pairs";
    if (coplanar) detail += ", meet height " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi));
  }
  return verdict(Law::P2, std::move(w), detail);
}

LawReport check_p3_third_point(const GeometryView& view) {
  for (ElementId line : view.lines()) {
    const auto on = view.points_on(line);
    if (on.size() < 3) return verdict(Law::P3ThirdPoint, std::vector{line}, std::to_string(on.size()) + " points on the line");
  }
  return verdict(Law::P3ThirdPoint, std::nullopt);
}

bool is_independent(const FiniteLattice& L, std::span<const ElementId> atom_set) {
  for (ElementId q : atom_set) {
    if (q.value >= L.size() || L.height(q) != 1 || !L.less(L.bottom(), q)) {
      throw Error(ErrorCode::NotAtoms, "element is not an atom", {q.value});
    }
  }
  std::set<ElementId> distinct(atom_set.begin(), atom_set.end());
  if (distinct.size() != atom_set.size()) throw Error(ErrorCode::InvalidArgument, "atoms must be pairwise distinct");
  // Join is monotone, so the join of all the others bounds every subset join.
  for (std::size_t i = 0; i < atom_set.size(); ++i) {
    ElementId rest = L.bottom();
    for (std::size_t j = 0; j < atom_set.size(); ++j)
      if (j != i) rest = L.join(rest, atom_set[j]);
    if (L.leq(atom_set[i], rest)) return false;
  }
  return true;
}

std::vector<ElementId> max_independent_set(const FiniteLattice& L) {
  require_atomic(L);
  const auto pool = atoms(L);
  if (pool.size() > kMaxIndependentSearchAtoms) {
    throw Error(ErrorCode::SizeBound, std::to_string(pool.size()) + " atoms exceeds the search cutoff of " +
                                          std::to_string(kMaxIndependentSearchAtoms));
  }
  std::vector<ElementId> best, current;
  // Independence is inherited by subsets, so only independent prefixes are extended.
  auto search = [&](auto&& self, std::size_t from) -> void {
    if (current.size() > best.size()) best = current;
    if (current.size() + (pool.size() - from) <= best.size()) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      if (is_independent(L, current)) self(self, i + 1);
      current.pop_back();
    }
  };
  search(search, 0);
  return best;
}

LawReport check_spanning(const FiniteLattice& L, unsigned n) {
  require_atomic(L);
  const auto pool = atoms(L);
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  // First-reach tree over joins of k atoms: via[x] = (previous join, atom added).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> via(L.size(), {kUnseen, kUnseen});
  std::vector<bool> seen(L.size(), false);
  seen[L.bottom().value] = true;
  std::vector<ElementId> frontier{L.bottom()};
  unsigned needed = 0;
  while (!seen[L.top().value] && !frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId e : frontier) {
      for (ElementId a : pool) {
        const ElementId j = L.join(e, a);
        if (seen[j.value]) continue;
        seen[j.value] = true;
        via[j.value] = {e.value, a.value};
        next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    ++needed;
  }
  std::vector<ElementId> spanning;
  for (std::uint32_t x = L.top().value; x != L.bottom().value; x = via[x].first) spanning.push_back(ElementId{via[x].second});
  std::reverse(spanning.begin(), spanning.end());

  std::string detail = "smallest spanning set has " + std::to_string(needed) + " points";
  if (needed == n) return LawReport{Law::Spanning, true, std::move(spanning), std::move(detail)};
  return LawReport{Law::Spanning, false, std::move(spanning), std::move(detail)};
}

bool CharacterizationReport::holds() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const LawReport& r) { return r.holds; });
}

const LawReport* CharacterizationReport::clause(Law law) const {
  for (const auto& c : clauses)
    if (c.law == law) return &c;
  return nullptr;
}

CharacterizationReport verify_bvn_characterization(const FiniteLattice& L, unsigned n) {
  CharacterizationReport out;
  out.depth = n;
  out.clauses.push_back(props::is_modular(L));
  out.clauses.push_back(props::is_atomic(L));
  out.clauses.push_back(props::is_perspective_lattice(L, PerspectiveMode::AtomsOnly));
  const unsigned top_height = L.height(L.top());
  out.clauses.push_back(LawReport{Law::TopHeight, top_height == n, top_height == n ? std::vector<ElementId>{} : std::vector{L.top()},
                                  "top has height " + std::to_string(top_height)});
  if (is_graded(L)) {
    const GeometryView view(L);
    out.clauses.push_back(check_p1(view));
    out.clauses.push_back(check_p2(view));
    out.clauses.push_back(check_p3_third_point(view));
  } else {
    for (Law law : {Law::P1, Law::P2, Law::P3ThirdPoint}) out.clauses.push_back(LawReport{law, false, {}, "lattice is not graded"});
  }
  if (out.clauses[1].holds) {
    out.clauses.push_back(check_spanning(L, n));
  } else {
    out.clauses.push_back(LawReport{Law::Spanning, false, {}, "lattice is not atomic"});
  }
  return out;
}

}  // namespace qlat::projective
