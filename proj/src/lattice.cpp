#include "qlat/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "bitrow.hpp"
#include "qlat/error.hpp"
#include "qlat/limits.hpp"

namespace qlat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBoundingElements: return "NoBoundingElements";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotAtoms: return "NotAtoms";
    case ErrorCode::NotAtomic: return "NotAtomic";
    case ErrorCode::DepthExhausted: return "DepthExhausted";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::MissingSplit: return "MissingSplit";
    case ErrorCode::RealizationMissing: return "RealizationMissing";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::size_t max_elements() {
  const char* raw = std::getenv("LATTICE_MAX_ELEMENTS");
  if (raw == nullptr || *raw == '\0') return kMaxElements;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return kMaxElements;
  return std::min<std::size_t>(kMaxElements, value);
}

namespace {

using detail::npos;

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Error path of build: the first pair x <= y by index whose common upper
// bounds have no least element, or whose lower bounds have no greatest.
[[noreturn]] void locate_missing_bound(std::size_t n, const std::vector<std::uint32_t>& pos, const std::vector<std::uint64_t>& pos_up,
                                       const std::vector<std::uint64_t>& pos_down, std::size_t words,
                                       const std::vector<std::string>& labels) {
  auto crow = [words](const std::vector<std::uint64_t>& v, std::size_t r) {
    return std::span<const std::uint64_t>(v.data() + r * words, words);
  };
  for (std::size_t x = 0; x < n; ++x) {
    const auto ux = crow(pos_up, pos[x]);
    const auto dx = crow(pos_down, pos[x]);
    for (std::size_t y = x; y < n; ++y) {
      const auto uy = crow(pos_up, pos[y]);
      const auto dy = crow(pos_down, pos[y]);
      const std::size_t j = detail::first_common(ux, uy);
      const std::size_t m = detail::last_common(dx, dy);
      const bool join_ok = j != npos && detail::common_within(ux, uy, crow(pos_up, j));
      const bool meet_ok = m != npos && detail::common_within(dx, dy, crow(pos_down, m));
      if (join_ok && meet_ok) continue;
      throw Error(ErrorCode::NotALattice,
                  quote(labels[x]) + " and " + quote(labels[y]) + " have no " +
                      (join_ok ? "greatest lower bound" : "least upper bound"),
                  {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
    }
  }
  throw Error(ErrorCode::NotALattice, "inconsistent bound tables");
}

// Follows child edges inside the unsorted remainder of Kahn's algorithm until an
// element repeats; every element of the remainder has a child in it.
std::vector<std::uint32_t> find_cycle(const std::vector<std::vector<std::uint32_t>>& children,
                                      const std::vector<bool>& remaining) {
  std::uint32_t start = 0;
  while (!remaining[start]) ++start;
  std::vector<std::uint32_t> path;
  std::vector<std::size_t> seen_at(remaining.size(), npos);
  std::uint32_t cur = start;
  while (seen_at[cur] == npos) {
    seen_at[cur] = path.size();
    path.push_back(cur);
    for (std::uint32_t c : children[cur]) {
      if (remaining[c]) {
        cur = c;
        break;
      }
    }
  }
  return {path.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), path.end()};
}

}  // namespace

FiniteLattice FiniteLattice::build(std::vector<std::string> labels, std::span<const OrderPair> leq_pairs) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::NoBoundingElements, "lattice has no elements");
  if (n > max_elements()) {
    throw Error(ErrorCode::SizeBound,
                std::to_string(n) + " elements exceeds the bound of " + std::to_string(max_elements()));
  }

  FiniteLattice out;
  out.size_ = n;
  out.words_ = detail::words_for(n);
  out.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.index_.emplace(labels[i], static_cast<std::uint32_t>(i)).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate label " + quote(labels[i]));
    }
  }

  std::vector<std::vector<std::uint32_t>> parents(n), children(n);
  for (const auto& [child, parent] : leq_pairs) {
    if (child >= n || parent >= n) {
      throw Error(ErrorCode::InvalidArgument, "order pair (" + std::to_string(child) + ", " +
                                                  std::to_string(parent) + ") out of range");
    }
    if (child == parent) continue;
    parents[child].push_back(static_cast<std::uint32_t>(parent));
    children[parent].push_back(static_cast<std::uint32_t>(child));
  }

  // Kahn's algorithm, smallest index first, so positions form a deterministic
  // linear extension (lower elements get smaller positions).
  std::vector<std::size_t> pending(n);
  for (std::size_t i = 0; i < n; ++i) pending[i] = children[i].size();
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t i = 0; i < n; ++i)
    if (pending[i] == 0) ready.push(i);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::uint32_t x = ready.top();
    ready.pop();
    order.push_back(x);
    for (std::uint32_t p : parents[x])
      if (--pending[p] == 0) ready.push(p);
  }
  if (order.size() != n) {
    std::vector<bool> remaining(n, true);
    for (std::uint32_t x : order) remaining[x] = false;
    auto cycle = find_cycle(children, remaining);
    std::ostringstream msg;
    msg << "order contains a cycle:";
    for (std::uint32_t x : cycle) msg << ' ' << quote(labels[x]) << " >=";
    msg << ' ' << quote(labels[cycle.front()]);
    throw Error(ErrorCode::NotAPartialOrder, msg.str(), std::move(cycle));
  }

  std::vector<std::uint32_t> minimal, maximal;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (children[i].empty()) minimal.push_back(i);
    if (parents[i].empty()) maximal.push_back(i);
  }
  if (minimal.size() != 1 || maximal.size() != 1) {
    std::ostringstream msg;
    msg << minimal.size() << " minimal and " << maximal.size() << " maximal elements";
    auto& offenders = minimal.size() != 1 ? minimal : maximal;
    throw Error(ErrorCode::NoBoundingElements, msg.str(), offenders);
  }
  out.bottom_ = ElementId{minimal.front()};
  out.top_ = ElementId{maximal.front()};

  // Work in position space: pos_up row p holds the positions above position p.
  const std::size_t words = out.words_;
  std::vector<std::uint32_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[order[p]] = static_cast<std::uint32_t>(p);
  std::vector<std::uint64_t> pos_up(n * words, 0), pos_down(n * words, 0);
  auto row = [words](std::vector<std::uint64_t>& v, std::size_t r) {
    return std::span<std::uint64_t>(v.data() + r * words, words);
  };
  auto crow = [words](const std::vector<std::uint64_t>& v, std::size_t r) {
    return std::span<const std::uint64_t>(v.data() + r * words, words);
  };
  for (std::size_t p = n; p-- > 0;) {
    auto r = row(pos_up, p);
    detail::set_bit(r, p);
    for (std::uint32_t parent : parents[order[p]]) detail::or_into(r, crow(pos_up, pos[parent]));
  }
  for (std::size_t p = 0; p < n; ++p) {
    auto r = row(pos_down, p);
    detail::set_bit(r, p);
    for (std::uint32_t child : children[order[p]]) detail::or_into(r, crow(pos_down, pos[child]));
  }

  out.up_.assign(n * words, 0);
  for (std::size_t x = 0; x < n; ++x) {
    auto src = crow(pos_up, pos[x]);
    auto dst = row(out.up_, x);
    for (std::size_t p = 0; p < n; ++p)
      if (detail::test_bit(src, p)) detail::set_bit(dst, order[p]);
  }

  // Upper bounds of an incomparable pair x, y are the union over parents p of
  // x of the upper bounds of p, y. So join(x, y) is the least of the join(p, y)
  // when one of them lies below all others; meet is the dual over children.
  // Rows are filled in reverse linear order for joins and forward for meets.
  out.meet_.assign(n * n, 0);
  out.join_.assign(n * n, 0);
  auto below = [&](std::uint32_t a, std::uint32_t b) { return detail::test_bit(crow(pos_up, pos[a]), pos[b]); };
  bool consistent = true;
  for (std::size_t p = n; p-- > 0 && consistent;) {
    const std::uint32_t x = order[p];
    for (std::uint32_t y = 0; y < n && consistent; ++y) {
      std::uint32_t j;
      if (below(x, y)) {
        j = y;
      } else if (below(y, x)) {
        j = x;
      } else {
        j = out.join_[std::size_t{parents[x].front()} * n + y];
        for (std::uint32_t par : parents[x]) {
          const std::uint32_t c = out.join_[std::size_t{par} * n + y];
          if (pos[c] < pos[j]) j = c;
        }
        for (std::uint32_t par : parents[x]) consistent = consistent && below(j, out.join_[std::size_t{par} * n + y]);
      }
      out.join_[std::size_t{x} * n + y] = static_cast<std::uint16_t>(j);
    }
  }
  for (std::size_t p = 0; p < n && consistent; ++p) {
    const std::uint32_t x = order[p];
    for (std::uint32_t y = 0; y < n && consistent; ++y) {
      std::uint32_t m;
      if (below(x, y)) {
        m = x;
      } else if (below(y, x)) {
        m = y;
      } else {
        m = out.meet_[std::size_t{children[x].front()} * n + y];
        for (std::uint32_t ch : children[x]) {
          const std::uint32_t c = out.meet_[std::size_t{ch} * n + y];
          if (pos[c] > pos[m]) m = c;
        }
        for (std::uint32_t ch : children[x]) consistent = consistent && below(out.meet_[std::size_t{ch} * n + y], m);
      }
      out.meet_[std::size_t{x} * n + y] = static_cast<std::uint16_t>(m);
    }
  }
  if (!consistent) locate_missing_bound(n, pos, pos_up, pos_down, words, labels);

  out.upper_.assign(n, {});
  std::vector<std::uint64_t> covered(words);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(covered.begin(), covered.end(), 0);
    const auto ux = crow(pos_up, pos[x]);
    for (std::size_t p = pos[x] + 1; p < n; ++p) {
      if (!detail::test_bit(ux, p) || detail::test_bit(covered, p)) continue;
      out.upper_[x].push_back(ElementId{order[p]});
      detail::or_into(covered, crow(pos_up, p));
    }
    std::sort(out.upper_[x].begin(), out.upper_[x].end());
  }

  out.heights_.assign(n, 0);
  for (std::uint32_t x : order)
    for (ElementId u : out.upper_[x]) out.heights_[u.value] = std::max(out.heights_[u.value], out.heights_[x] + 1);

  out.labels_ = std::move(labels);
  return out;
}

std::optional<ElementId> FiniteLattice::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return ElementId{it->second};
}

ElementId FiniteLattice::join_all(std::span<const ElementId> xs) const noexcept {
  ElementId acc = bottom_;
  for (ElementId x : xs) acc = join(acc, x);
  return acc;
}

ElementId FiniteLattice::meet_all(std::span<const ElementId> xs) const noexcept {
  ElementId acc = top_;
  for (ElementId x : xs) acc = meet(acc, x);
  return acc;
}

FiniteLattice FiniteLattice::with_meet_entry(ElementId x, ElementId y, ElementId value) const {
  FiniteLattice copy = *this;
  copy.meet_[std::size_t{x.value} * size_ + y.value] = static_cast<std::uint16_t>(value.value);
  return copy;
}

std::vector<ElementId> atoms(const FiniteLattice& lattice) {
  if (lattice.size() == 1) return {};
  return lattice.upper_neighbors(lattice.bottom());
}

std::vector<ElementId> complements_of(const FiniteLattice& lattice, ElementId x) {
  std::vector<ElementId> out;
  for (ElementId y : lattice.elements()) {
    if (lattice.meet(x, y) == lattice.bottom() && lattice.join(x, y) == lattice.top()) out.push_back(y);
  }
  return out;
}

Chain Chain::make(const FiniteLattice& lattice, std::vector<ElementId> descending) {
  if (descending.empty()) throw Error(ErrorCode::InvalidArgument, "a chain needs at least one element");
  for (ElementId x : descending) {
    if (x.value >= lattice.size()) throw Error(ErrorCode::InvalidArgument, "chain element out of range");
  }
  for (std::size_t i = 0; i + 1 < descending.size(); ++i) {
    if (!lattice.less(descending[i + 1], descending[i])) {
      throw Error(ErrorCode::InvalidArgument, "chain is not strictly descending at " +
                                                  quote(lattice.label(descending[i])) + ", " +
                                                  quote(lattice.label(descending[i + 1])));
    }
  }
  return Chain(std::move(descending));
}

FiniteLattice interval(const FiniteLattice& lattice, ElementId lo, ElementId hi) {
  if (!lattice.leq(lo, hi)) {
    throw Error(ErrorCode::NotComparable, quote(lattice.label(lo)) + " is not below " + quote(lattice.label(hi)),
                {lo.value, hi.value});
  }
  std::vector<std::uint32_t> local(lattice.size(), static_cast<std::uint32_t>(-1));
  std::vector<std::string> labels;
  for (ElementId x : lattice.elements()) {
    if (lattice.leq(lo, x) && lattice.leq(x, hi)) {
      local[x.value] = static_cast<std::uint32_t>(labels.size());
      labels.push_back(lattice.label(x));
    }
  }
  std::vector<OrderPair> pairs;
  for (ElementId x : lattice.elements()) {
    if (local[x.value] == static_cast<std::uint32_t>(-1)) continue;
    for (ElementId y : lattice.upper_neighbors(x))
      if (local[y.value] != static_cast<std::uint32_t>(-1)) pairs.emplace_back(local[x.value], local[y.value]);
  }
  return FiniteLattice::build(std::move(labels), pairs);
}

std::vector<Chain> chains_between(const FiniteLattice& lattice, ElementId a, ElementId b, std::size_t max_chains) {
  if (lattice.size() > kMaxChainEnumerationElements) {
    throw Error(ErrorCode::SizeBound, "chain enumeration is limited to " +
                                          std::to_string(kMaxChainEnumerationElements) + " elements");
  }
  if (!lattice.comparable(a, b)) {
    throw Error(ErrorCode::NotComparable, quote(lattice.label(a)) + " and " + quote(lattice.label(b)),
                {a.value, b.value});
  }
  const ElementId high = lattice.leq(b, a) ? a : b;
  const ElementId low = high == a ? b : a;

  std::vector<Chain> out;
  std::vector<ElementId> path{high};
  // Depth-first over strictly descending steps that stay above `low`.
  auto extend = [&](auto&& self) -> void {
    const ElementId cur = path.back();
    if (cur == low) {
      if (out.size() == max_chains) {
        throw Error(ErrorCode::SizeBound, "more than " + std::to_string(max_chains) + " chains");
      }
      out.push_back(Chain::make(lattice, path));
      return;
    }
    for (ElementId z : lattice.elements()) {
      if (lattice.less(z, cur) && lattice.leq(low, z)) {
        path.push_back(z);
        self(self);
        path.pop_back();
      }
    }
  };
  extend(extend);
  return out;
}

bool is_refinement(const Chain& coarser, const Chain& finer) {
  if (coarser.upper_end() != finer.upper_end() || coarser.lower_end() != finer.lower_end()) return false;
  if (finer.elements().size() <= coarser.elements().size()) return false;
  const auto& fe = finer.elements();
  return std::all_of(coarser.elements().begin(), coarser.elements().end(),
                     [&](ElementId x) { return std::find(fe.begin(), fe.end(), x) != fe.end(); });
}

}  // namespace qlat
