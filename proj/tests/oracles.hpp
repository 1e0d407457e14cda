#pragma once

// Brute-force evaluators used as ground truth by the tests. Everything here is
// recomputed from the order relation alone (or from first principles for the
// counting oracles) and never reads the library's meet/join/height tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/props.hpp"
#include "qlat/structure.hpp"

namespace oracle {

using qlat::ElementId;

/// Warshall closure of a generating relation (child, parent) on n points.
inline std::vector<std::vector<bool>> closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (auto [c, p] : pairs) le[c][p] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  return le;
}

/// Meets, joins and heights derived from <= by exhaustive search.
class Evaluator {
 public:
  explicit Evaluator(std::vector<std::vector<bool>> le) : n_(le.size()), le_(std::move(le)) {
    meet_.assign(n_ * n_, npos);
    join_.assign(n_ * n_, npos);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        for (std::size_t z = 0; z < n_; ++z) {
          bool greatest = le_[z][x] && le_[z][y], least = le_[x][z] && le_[y][z];
          for (std::size_t w = 0; w < n_; ++w) {
            if (le_[w][x] && le_[w][y] && !le_[w][z]) greatest = false;
            if (le_[x][w] && le_[y][w] && !le_[z][w]) least = false;
          }
          if (greatest) meet_[x * n_ + y] = z;
          if (least) join_[x * n_ + y] = z;
        }
      }
    }
    std::vector<std::size_t> below(n_, 0), above(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t w = 0; w < n_; ++w) {
        below[x] += le_[w][x];
        above[x] += le_[x][w];
      }
    for (std::size_t x = 0; x < n_; ++x) {
      if (above[x] == n_) bottom_ = x;
      if (below[x] == n_) top_ = x;
    }
    // Longest chain from bottom, visiting elements by growing down-set size.
    std::vector<std::size_t> order(n_);
    for (std::size_t i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    height_.assign(n_, 0);
    for (std::size_t x : order)
      for (std::size_t w = 0; w < n_; ++w)
        if (w != x && le_[w][x]) height_[x] = std::max(height_[x], height_[w] + 1);
  }

  /// Reads only leq from a built lattice.
  static Evaluator of(const qlat::FiniteLattice& L) {
    std::vector<std::vector<bool>> le(L.size(), std::vector<bool>(L.size()));
    for (ElementId x : L.elements())
      for (ElementId y : L.elements()) le[x.value][y.value] = L.leq(x, y);
    return Evaluator(std::move(le));
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t size() const { return n_; }
  bool le(std::size_t x, std::size_t y) const { return le_[x][y]; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * n_ + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * n_ + y]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  unsigned height(std::size_t x) const { return height_[x]; }
  bool is_lattice() const {
    return bottom_ != npos && top_ != npos && std::none_of(meet_.begin(), meet_.end(), [](std::size_t v) { return v == npos; }) &&
           std::none_of(join_.begin(), join_.end(), [](std::size_t v) { return v == npos; });
  }

  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n_; ++x)
      if (x != bottom_ && height_[x] == 1) out.push_back(x);
    return out;
  }

  bool complements(std::size_t x, std::size_t z) const { return meet(x, z) == bottom_ && join(x, z) == top_; }

  /// Fewest atoms whose join is top, by trying every subset size.
  std::optional<std::size_t> min_spanning() const {
    const auto a = atoms();
    if (n_ == 1) return 0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
      std::vector<bool> pick(a.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::size_t j = bottom_;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (pick[i]) j = join(j, a[i]);
        if (j == top_) return k;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<bool>> le_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = npos, top_ = npos;
  std::vector<unsigned> height_;
};

/// True iff the witness of a failing report really breaks its law under `ev`.
/// `n` is the depth used for spanning and top-height.
inline bool reviolates(const Evaluator& ev, const qlat::LawReport& r, unsigned n = 0) {
  using qlat::Law;
  std::vector<std::size_t> w;
  for (auto e : r.witness) w.push_back(e.value);
  switch (r.law) {
    case Law::Distributive:
      return w.size() == 3 && ev.meet(w[0], ev.join(w[1], w[2])) != ev.join(ev.meet(w[0], w[1]), ev.meet(w[0], w[2]));
    case Law::Modular:
      return w.size() == 3 && ev.le(w[0], w[2]) &&
             ev.join(w[0], ev.meet(w[1], w[2])) != ev.meet(ev.join(w[0], w[1]), w[2]);
    case Law::HeightLaw:
      return w.size() == 2 &&
             ev.height(ev.meet(w[0], w[1])) + ev.height(ev.join(w[0], w[1])) != ev.height(w[0]) + ev.height(w[1]);
    case Law::Complemented: {
      if (w.size() != 1) return false;
      for (std::size_t z = 0; z < ev.size(); ++z)
        if (ev.complements(w[0], z)) return false;
      return true;
    }
    case Law::Atomic: {
      if (w.size() != 1) return false;
      std::size_t acc = ev.bottom();
      for (std::size_t a : ev.atoms())
        if (ev.le(a, w[0])) acc = ev.join(acc, a);
      return acc != w[0];
    }
    case Law::Perspective: {
      if (w.size() != 2) return false;
      for (std::size_t z = 0; z < ev.size(); ++z)
        if (ev.complements(w[0], z) && ev.complements(w[1], z)) return false;
      return true;
    }
    case Law::P1: {
      if (w.size() != 2 || w[0] == w[1] || ev.height(w[0]) != 1 || ev.height(w[1]) != 1) return false;
      std::size_t lines = 0;
      for (std::size_t l = 0; l < ev.size(); ++l)
        if (ev.height(l) == 2 && ev.le(w[0], l) && ev.le(w[1], l)) ++lines;
      return lines != 1;
    }
    case Law::P2:
      return w.size() == 2 && ev.height(w[0]) == 2 && ev.height(w[1]) == 2 && w[0] != w[1] &&
             ev.height(ev.join(w[0], w[1])) <= 3 && ev.height(ev.meet(w[0], w[1])) < 1;
    case Law::P3ThirdPoint: {
      if (w.size() != 1 || ev.height(w[0]) != 2) return false;
      std::size_t points = 0;
      for (std::size_t p : ev.atoms())
        if (ev.le(p, w[0])) ++points;
      return points < 3;
    }
    case Law::Spanning: {
      const auto k = ev.min_spanning();
      return !k || *k != n;
    }
    case Law::TopHeight:
      return ev.height(ev.top()) != n;
    case Law::LatticeAxioms:
      return !ev.is_lattice();
  }
  return false;
}

/// Subspaces of F_q^n found as subsets of vectors containing 0 and closed under
/// addition and scalar multiples, counted by size. Feasible up to 16 vectors.
inline std::map<std::size_t, std::size_t> brute_subspace_profile(unsigned n, unsigned q) {
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= q;
  auto digits = [&](std::size_t v) {
    std::vector<unsigned> d(n);
    for (unsigned i = 0; i < n; ++i, v /= q) d[i] = static_cast<unsigned>(v % q);
    return d;
  };
  auto code = [&](const std::vector<unsigned>& d) {
    std::size_t v = 0;
    for (unsigned i = n; i-- > 0;) v = v * q + d[i];
    return v;
  };
  std::map<std::size_t, std::size_t> by_size;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); mask += 2) {  // vector 0 is bit 0
    bool closed = true;
    for (std::size_t a = 0; a < count && closed; ++a) {
      if (!(mask >> a & 1U)) continue;
      const auto da = digits(a);
      for (unsigned s = 1; s < q && closed; ++s) {
        auto m = da;
        for (auto& x : m) x = x * s % q;
        closed = mask >> code(m) & 1U;
      }
      for (std::size_t b = 0; b < count && closed; ++b) {
        if (!(mask >> b & 1U)) continue;
        auto db = digits(b);
        for (unsigned i = 0; i < n; ++i) db[i] = (db[i] + da[i]) % q;
        closed = mask >> code(db) & 1U;
      }
    }
    if (closed) ++by_size[static_cast<std::size_t>(__builtin_popcountll(mask))];
  }
  return by_size;
}

/// Gaussian binomial [n choose k]_q.
inline std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (unsigned j = 0; j < n - i; ++j) a *= q;
    for (unsigned j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Tries every injective map of the constants into the lattice that sends 0 to
/// bottom and 1 to top, checking every statement only at the leaves.
inline bool realizable(const qlat::construct::PartialStructure& s, const Evaluator& ev) {
  using qlat::construct::StatementKind;
  const std::size_t k = s.constant_count();
  if (k > ev.size()) return false;
  std::vector<std::size_t> f(k);
  std::vector<bool> used(ev.size(), false);
  auto holds = [&] {
    if (f[0] != ev.bottom() || f[1] != ev.top()) return false;
    for (const auto& st : s.statements()) {
      const auto a = f[st.operands[0].value];
      const auto b = st.arity() > 1 ? f[st.operands[1].value] : 0;
      switch (st.kind) {
        case StatementKind::JoinEq:
          if (ev.join(a, b) != f[st.operands[2].value]) return false;
          break;
        case StatementKind::MeetEq:
          if (ev.meet(a, b) != f[st.operands[2].value]) return false;
          break;
        case StatementKind::Disjoint:
          if (ev.meet(a, b) != ev.bottom()) return false;
          break;
        case StatementKind::HeightIs:
          if (ev.height(a) != st.value) return false;
          break;
        case StatementKind::ChainBound:
          if (st.operands[0] == s.zero() && ev.height(b) != st.value) return false;
          break;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t c) {
    if (c == k) return holds();
    for (std::size_t e = 0; e < ev.size(); ++e) {
      if (used[e] || (c == 0 && e != ev.bottom()) || (c == 1 && e != ev.top())) continue;
      used[e] = true;
      f[c] = e;
      const bool found = go(c + 1);
      used[e] = false;
      if (found) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace oracle
