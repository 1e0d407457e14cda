#include "qlat/covers.hpp"

#include <algorithm>
#include <map>

#include "qlat/error.hpp"
#include "qlat/limits.hpp"

namespace qlat::construct {
namespace {

bool is_subset(const std::vector<ConstId>& a, const std::vector<ConstId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// The 2^k joins of subsets of `gens`, indexed by subset mask, or empty when the
// map from subsets is not a lattice embedding.
std::vector<ElementId> subset_joins(const FiniteLattice& L, const std::vector<ElementId>& gens) {
  const std::size_t k = gens.size();
  std::vector<ElementId> joins(std::size_t{1} << k, L.bottom());
  for (std::size_t mask = 1; mask < joins.size(); ++mask) {
    const std::size_t low = mask & (~mask + 1);
    joins[mask] = L.join(joins[mask ^ low], gens[static_cast<std::size_t>(__builtin_ctzll(low))]);
  }
  for (std::size_t s = 0; s < joins.size(); ++s) {
    for (std::size_t t = s + 1; t < joins.size(); ++t) {
      if (joins[s] == joins[t] || L.meet(joins[s], joins[t]) != joins[s & t]) return {};
    }
  }
  return joins;
}

}  // namespace

bool BooleanSublattice::height_consistent(const FiniteLattice& ambient) const {
  // h_B is the number of generators below; a height-consistent B is generated by atoms.
  return std::all_of(generators.begin(), generators.end(), [&](ElementId g) { return ambient.height(g) == 1; }) &&
         ambient.height(ambient.top()) == generators.size();
}

bool BooleanSublattice::contains(ElementId x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::vector<BooleanSublattice> enumerate_boolean_sublattices(const FiniteLattice& L,
                                                             std::span<const ElementId> must_contain) {
  if (L.size() > kMaxChainEnumerationElements) {
    throw Error(ErrorCode::SizeBound, "boolean sublattice enumeration is limited to " +
                                          std::to_string(kMaxChainEnumerationElements) + " elements");
  }
  for (ElementId x : must_contain)
    if (x.value >= L.size()) throw Error(ErrorCode::InvalidArgument, "element out of range");

  std::vector<BooleanSublattice> out;
  auto keep = [&](BooleanSublattice b) {
    std::sort(b.elements.begin(), b.elements.end());
    if (std::all_of(must_contain.begin(), must_contain.end(), [&](ElementId x) { return b.contains(x); })) {
      out.push_back(std::move(b));
    }
  };
  if (L.size() == 1) {
    keep(BooleanSublattice{{}, {L.bottom()}});
    return out;
  }

  std::vector<ElementId> gens;
  auto extend = [&](auto&& self, ElementId running, std::uint32_t from) -> void {
    if (running == L.top()) {
      auto joins = subset_joins(L, gens);
      if (!joins.empty()) keep(BooleanSublattice{gens, std::move(joins)});
      return;
    }
    for (std::uint32_t e = from; e < L.size(); ++e) {
      const ElementId x{e};
      if (x == L.bottom() || L.meet(running, x) != L.bottom()) continue;
      gens.push_back(x);
      self(self, L.join(running, x), e + 1);
      gens.pop_back();
    }
  };
  extend(extend, L.bottom(), 0);
  return out;
}

std::vector<ElementStatement> statement_set(const FiniteLattice& L, std::span<const ElementId> elements) {
  std::vector<ElementStatement> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out.push_back(height_is(elements[i], L.height(elements[i])));
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      out.push_back(join_eq(elements[i], elements[j], L.join(elements[i], elements[j])));
      out.push_back(meet_eq(elements[i], elements[j], L.meet(elements[i], elements[j])));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cover> covers_of(const PartialStructure& s, std::span<const ConstId> m, const FiniteLattice& ambient,
                             const std::optional<Realization>& f) {
  if (m.size() > kMaxCoverConstants) {
    throw Error(ErrorCode::SizeBound, std::to_string(m.size()) + " constants exceeds the cover bound of " +
                                          std::to_string(kMaxCoverConstants));
  }
  if (ambient.size() > kMaxCoverAmbient) {
    throw Error(ErrorCode::SizeBound, std::to_string(ambient.size()) + " ambient elements exceeds the cover bound of " +
                                          std::to_string(kMaxCoverAmbient));
  }
  for (ConstId c : m)
    if (c.value >= s.constant_count()) throw Error(ErrorCode::UnknownConstant, "constant #" + std::to_string(c.value));
  const auto realization = f ? f : find_realization(s, ambient);
  if (!realization || !satisfies(s, ambient, *realization)) {
    throw Error(ErrorCode::RealizationMissing, "the structure has no realization in the ambient lattice");
  }

  std::vector<ConstId> members(m.begin(), m.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::map<std::vector<ConstId>, std::vector<BooleanSublattice>> by_covered;
  for (auto& b : enumerate_boolean_sublattices(ambient)) {
    if (!b.height_consistent(ambient)) continue;
    std::vector<ConstId> covered;
    for (ConstId c : members)
      if (b.contains((*realization)(c))) covered.push_back(c);
    by_covered[covered].push_back(std::move(b));
  }
  std::vector<Cover> out;
  for (auto& [covered, parts] : by_covered) {
    const bool maximal = std::none_of(by_covered.begin(), by_covered.end(), [&](const auto& other) {
      return other.first != covered && is_subset(covered, other.first);
    });
    if (maximal) out.push_back(Cover{covered, std::move(parts)});
  }
  return out;
}

std::optional<Closure> principle_III_closure(const PartialStructure& s, std::span<const ConstId> m,
                                             const FiniteLattice& ambient, const std::optional<Realization>& f) {
  const auto covers = covers_of(s, m, ambient, f);
  std::vector<ConstId> members(m.begin(), m.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (covers.empty()) return std::nullopt;
  for (const auto& cover : covers)
    if (cover.covered != members) return std::nullopt;

  // All of M fits in one B_M, so that set is the unique maximal one.
  Closure out;
  out.extensions = covers.front().parts.size();
  out.elements = covers.front().parts.front().elements;
  for (const auto& part : covers.front().parts) {
    std::vector<ElementId> common;
    std::set_intersection(out.elements.begin(), out.elements.end(), part.elements.begin(), part.elements.end(),
                          std::back_inserter(common));
    out.elements = std::move(common);
  }
  out.statements = statement_set(ambient, out.elements);
  return out;
}

Extended apply_principle_III(const PartialStructure& s, const FiniteLattice& ambient, const Realization& f,
                             const Closure& closure) {
  if (!satisfies(s, ambient, f)) throw Error(ErrorCode::RealizationMissing, "map is not a realization of the structure");
  Extended out{s, f, {}};
  std::map<ElementId, ConstId> named;
  for (ConstId c : s.constants()) named.emplace(f(c), c);
  for (ElementId x : closure.elements) {
    if (named.contains(x)) continue;
    const ConstId c = out.structure.fresh_constant("e", ambient.height(x));
    named.emplace(x, c);
    out.realization.image.push_back(x);
    out.added.push_back(c);
  }
  for (const auto& st : closure.statements) {
    const auto& o = st.operands;
    switch (st.kind) {
      case StatementKind::JoinEq: out.structure.add_statement(join_eq(named.at(o[0]), named.at(o[1]), named.at(o[2]))); break;
      case StatementKind::MeetEq: out.structure.add_statement(meet_eq(named.at(o[0]), named.at(o[1]), named.at(o[2]))); break;
      case StatementKind::Disjoint: out.structure.add_statement(disjoint(named.at(o[0]), named.at(o[1]))); break;
      case StatementKind::HeightIs: out.structure.add_statement(height_is(named.at(o[0]), st.value)); break;
      case StatementKind::ChainBound: out.structure.add_statement(chain_bound(named.at(o[0]), named.at(o[1]), st.value)); break;
    }
  }
  return out;
}

}  // namespace qlat::construct
