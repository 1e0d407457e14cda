#include "qlat/realization.hpp"

#include <set>

#include "bitrow.hpp"
#include "qlat/error.hpp"

namespace qlat::construct {
namespace {

constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);

bool enforced(const Statement& s, ConstId zero) {
  return s.kind != StatementKind::ChainBound || s.operands[0] == zero;
}

// Depth-first search over constants in id order with forward checking on the
// statements touching the constant just assigned.
class Search {
 public:
  Search(const PartialStructure& s, const FiniteLattice& lattice, const Assignment& fixed)
      : s_(s), L_(lattice), n_(s.constant_count()), m_(lattice.size()), words_(detail::words_for(m_)) {
    touching_.resize(n_);
    for (const auto& st : s.statements()) {
      if (!enforced(st, s.zero())) continue;
      const std::size_t idx = stmts_.size();
      stmts_.push_back(st);
      std::set<std::uint32_t> ops;
      for (std::size_t k = 0; k < st.arity(); ++k) ops.insert(st.operands[k].value);
      for (auto c : ops) touching_[c].push_back(idx);
    }
    domains_.assign(n_ * words_, 0);
    feasible_ = n_ <= m_;
    for (std::size_t c = 0; c < n_ && feasible_; ++c) {
      for (std::size_t e = 0; e < m_; ++e) detail::set_bit(dom(domains_, c), e);
    }
    restrict_to(domains_, s.zero().value, [&](ElementId e) { return e == L_.bottom(); });
    restrict_to(domains_, s.one().value, [&](ElementId e) { return e == L_.top(); });
    for (const auto& st : stmts_) {
      if (st.kind == StatementKind::HeightIs) {
        restrict_to(domains_, st.operands[0].value, [&](ElementId e) { return L_.height(e) == st.value; });
      } else if (st.kind == StatementKind::ChainBound) {
        restrict_to(domains_, st.operands[1].value, [&](ElementId e) { return L_.height(e) == st.value; });
      }
    }
    for (const auto& [c, e] : fixed) {
      if (c.value >= n_) throw Error(ErrorCode::UnknownConstant, "fixed constant #" + std::to_string(c.value));
      if (e.value >= m_) throw Error(ErrorCode::InvalidArgument, "fixed element out of range");
      restrict_to(domains_, c.value, [e](ElementId x) { return x == e; });
    }
    for (std::size_t c = 0; c < n_; ++c) feasible_ = feasible_ && !empty(dom(domains_, c));
    assigned_.assign(n_, kUnassigned);
    used_.assign(m_, false);
  }

  std::size_t run(const std::function<bool(const Realization&)>& visit, std::size_t limit) {
    visit_ = &visit;
    limit_ = limit;
    if (feasible_ && limit_ > 0) descend(0, domains_);
    return found_;
  }

 private:
  std::span<std::uint64_t> dom(std::vector<std::uint64_t>& d, std::size_t c) const {
    return {d.data() + c * words_, words_};
  }

  static bool empty(std::span<const std::uint64_t> row) {
    for (auto w : row)
      if (w) return false;
    return true;
  }

  template <class Pred>
  void restrict_to(std::vector<std::uint64_t>& d, std::size_t c, Pred&& keep) {
    auto row = dom(d, c);
    for (std::size_t e = 0; e < m_; ++e)
      if (detail::test_bit(row, e) && !keep(ElementId{static_cast<std::uint32_t>(e)})) row[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }

  bool is_set(ConstId c) const { return assigned_[c.value] != kUnassigned; }
  ElementId val(ConstId c) const { return ElementId{assigned_[c.value]}; }

  // Narrows domains of unassigned operands of one statement; false on conflict.
  bool narrow(const Statement& st, std::vector<std::uint64_t>& d) {
    const auto [a, b, c] = st.operands;
    switch (st.kind) {
      case StatementKind::JoinEq:
      case StatementKind::MeetEq: {
        const bool is_join = st.kind == StatementKind::JoinEq;
        auto op = [&](ElementId x, ElementId y) { return is_join ? L_.join(x, y) : L_.meet(x, y); };
        auto bound_ok = [&](ElementId part, ElementId whole) { return is_join ? L_.leq(part, whole) : L_.leq(whole, part); };
        const bool sa = is_set(a), sb = is_set(b), sc = is_set(c);
        if (sa && sb && sc) return op(val(a), val(b)) == val(c);
        if (sa && sb) {
          const ElementId r = op(val(a), val(b));
          restrict_to(d, c.value, [r](ElementId e) { return e == r; });
          return !empty(dom(d, c.value));
        }
        if (sc && (sa || sb)) {
          const ConstId known = sa ? a : b;
          const ConstId other = sa ? b : a;
          const ElementId k = val(known), r = val(c);
          restrict_to(d, other.value, [&](ElementId e) { return op(k, e) == r; });
          return !empty(dom(d, other.value));
        }
        if (sc) {
          const ElementId r = val(c);
          restrict_to(d, a.value, [&](ElementId e) { return bound_ok(e, r); });
          restrict_to(d, b.value, [&](ElementId e) { return bound_ok(e, r); });
          return !empty(dom(d, a.value)) && !empty(dom(d, b.value));
        }
        if (sa || sb) {
          const ElementId k = sa ? val(a) : val(b);
          restrict_to(d, c.value, [&](ElementId e) { return bound_ok(k, e); });
          return !empty(dom(d, c.value));
        }
        return true;
      }
      case StatementKind::Disjoint: {
        const bool sa = is_set(a), sb = is_set(b);
        if (sa && sb) return L_.meet(val(a), val(b)) == L_.bottom();
        if (sa || sb) {
          const ElementId k = sa ? val(a) : val(b);
          const ConstId other = sa ? b : a;
          restrict_to(d, other.value, [&](ElementId e) { return L_.meet(k, e) == L_.bottom(); });
          return !empty(dom(d, other.value));
        }
        return true;
      }
      case StatementKind::HeightIs:
      case StatementKind::ChainBound: return true;  // applied to the initial domains
    }
    return true;
  }

  void descend(std::size_t c, const std::vector<std::uint64_t>& d) {
    if (found_ >= limit_ || stop_) return;
    if (c == n_) {
      Realization r;
      r.image.reserve(n_);
      for (auto v : assigned_) r.image.push_back(ElementId{v});
      ++found_;
      if (!(*visit_)(r)) stop_ = true;
      return;
    }
    const std::span<const std::uint64_t> row(d.data() + c * words_, words_);
    for (std::size_t e = 0; e < m_; ++e) {
      if (!detail::test_bit(row, e) || used_[e]) continue;
      assigned_[c] = static_cast<std::uint32_t>(e);
      used_[e] = true;
      std::vector<std::uint64_t> next = d;
      bool ok = true;
      for (std::size_t idx : touching_[c]) {
        if (!narrow(stmts_[idx], next)) {
          ok = false;
          break;
        }
      }
      if (ok) descend(c + 1, next);
      used_[e] = false;
      assigned_[c] = kUnassigned;
      if (found_ >= limit_ || stop_) return;
    }
  }

  const PartialStructure& s_;
  const FiniteLattice& L_;
  std::size_t n_, m_, words_;
  std::vector<Statement> stmts_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::uint64_t> domains_;
  std::vector<std::uint32_t> assigned_;
  std::vector<bool> used_;
  bool feasible_ = true;
  bool stop_ = false;
  std::size_t found_ = 0;
  std::size_t limit_ = 0;
  const std::function<bool(const Realization&)>* visit_ = nullptr;
};

}  // namespace

std::optional<Violation> first_violation(const PartialStructure& s, const FiniteLattice& L, const Realization& f) {
  if (f.image.size() != s.constant_count()) {
    throw Error(ErrorCode::InvalidArgument, "realization covers " + std::to_string(f.image.size()) + " of " +
                                                std::to_string(s.constant_count()) + " constants");
  }
  if (f(s.zero()) != L.bottom() || f(s.one()) != L.top()) return Violation{Violation::Kind::BoundsMoved, std::nullopt};
  std::set<ElementId> seen;
  for (ConstId c : s.constants()) {
    if (f(c).value >= L.size()) throw Error(ErrorCode::InvalidArgument, "realization element out of range");
    if (!seen.insert(f(c)).second) return Violation{Violation::Kind::NotInjective, std::nullopt};
  }
  for (const auto& st : s.statements()) {
    const auto [a, b, c] = st.operands;
    bool ok = true;
    switch (st.kind) {
      case StatementKind::JoinEq: ok = L.join(f(a), f(b)) == f(c); break;
      case StatementKind::MeetEq: ok = L.meet(f(a), f(b)) == f(c); break;
      case StatementKind::Disjoint: ok = L.meet(f(a), f(b)) == L.bottom(); break;
      case StatementKind::HeightIs: ok = L.height(f(a)) == st.value; break;
      case StatementKind::ChainBound: ok = a != s.zero() || L.height(f(b)) == st.value; break;
    }
    if (!ok) return Violation{Violation::Kind::StatementFails, st};
  }
  return std::nullopt;
}

std::optional<Realization> find_realization(const PartialStructure& s, const FiniteLattice& lattice,
                                            const Assignment& fixed) {
  std::optional<Realization> out;
  Search(s, lattice, fixed).run(
      [&](const Realization& r) {
        out = r;
        return false;
      },
      1);
  return out;
}

std::size_t for_each_realization(const PartialStructure& s, const FiniteLattice& lattice,
                                 const std::function<bool(const Realization&)>& visit, const Assignment& fixed,
                                 std::size_t limit) {
  return Search(s, lattice, fixed).run(visit, limit);
}

}  // namespace qlat::construct
