#include "qlat/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bitrow.hpp"
#include "qlat/error.hpp"
#include "qlat/limits.hpp"

namespace qlat::gen {
namespace {

using Row = std::vector<unsigned>;

// Saturating arithmetic for the size pre-checks; anything past the cap is "too big".
constexpr std::uint64_t kCap = std::uint64_t{1} << 40;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kCap / b) ? kCap : a * b; }

std::uint64_t subspace_total(unsigned n, unsigned q) {
  // Gaussian binomials via the recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::uint64_t> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 1);
    std::uint64_t qk = 1;
    for (unsigned k = 1; k < m; ++k) {
      qk = sat_mul(qk, q);
      next[k] = std::min(kCap, row[k - 1] + sat_mul(qk, row[k]));
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) total = std::min(kCap, total + v);
  return total;
}

unsigned inverse_mod(unsigned a, unsigned q) {
  // q is prime, so a^(q-2) is the inverse.
  std::uint64_t result = 1, base = a % q;
  for (unsigned e = q - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<unsigned>(result);
}

std::vector<Row> reduced_echelon(std::vector<Row> rows, unsigned q) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const unsigned inv = inverse_mod(rows[rank][col], q);
    for (auto& v : rows[rank]) v = static_cast<unsigned>(std::uint64_t{v} * inv % q);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const unsigned factor = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        rows[r][c] = static_cast<unsigned>((rows[r][c] + std::uint64_t{q - factor} * rows[rank][c]) % q);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::size_t encode(const Row& v, unsigned q) {
  std::size_t code = 0;
  for (unsigned d : v) code = code * q + d;
  return code;
}

Row decode(std::size_t code, unsigned n, unsigned q) {
  Row v(n);
  for (unsigned i = n; i-- > 0;) {
    v[i] = static_cast<unsigned>(code % q);
    code /= q;
  }
  return v;
}

struct Subspace {
  std::vector<Row> basis;
  std::vector<std::uint64_t> members;  // bitset over vector codes
};

std::vector<std::uint64_t> span_members(const std::vector<Row>& basis, unsigned n, unsigned q, std::size_t vectors) {
  std::vector<std::uint64_t> bits(detail::words_for(vectors), 0);
  std::vector<unsigned> coeff(basis.size(), 0);
  while (true) {
    Row v(n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (unsigned c = 0; c < n; ++c) v[c] = (v[c] + coeff[b] * basis[b][c]) % q;
    detail::set_bit(bits, encode(v, q));
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return bits;
}

std::string subspace_label(const std::vector<Row>& basis, unsigned q) {
  if (basis.empty()) return "0";
  std::string out = "<";
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (r) out += ',';
    for (std::size_t c = 0; c < basis[r].size(); ++c) {
      if (q > 10 && c) out += '.';
      out += std::to_string(basis[r][c]);
    }
  }
  return out + ">";
}

}  // namespace

bool is_prime(unsigned q) noexcept {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

FiniteLattice boolean_lattice(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "boolean lattice needs n >= 1");
  if (n > kMaxBooleanRank) {
    throw Error(ErrorCode::SizeBound, "boolean lattice rank " + std::to_string(n) + " exceeds " +
                                          std::to_string(kMaxBooleanRank));
  }
  const std::size_t size = std::size_t{1} << n;
  if (size > max_elements()) {
    throw Error(ErrorCode::SizeBound, std::to_string(size) + " elements exceeds the bound of " +
                                          std::to_string(max_elements()));
  }
  std::vector<std::string> labels(size);
  std::vector<OrderPair> pairs;
  for (std::size_t mask = 0; mask < size; ++mask) {
    std::string label = "{";
    for (unsigned b = 0; b < n; ++b) {
      if (!(mask >> b & 1U)) {
        pairs.emplace_back(mask, mask | (std::size_t{1} << b));
        continue;
      }
      if (label.size() > 1) label += ',';
      label += static_cast<char>('a' + b);
    }
    labels[mask] = label + "}";
  }
  return build_lattice(std::move(labels), pairs);
}

FiniteLattice subspace_lattice(SubspaceLatticeSpec spec) {
  const unsigned n = spec.dimension;
  const unsigned q = spec.field_order;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, "field order " + std::to_string(q) + " is not prime");
  std::uint64_t vectors = 1;
  for (unsigned i = 0; i < n; ++i) vectors = sat_mul(vectors, q);
  if (vectors > kMaxElements) {
    throw Error(ErrorCode::SizeBound, "q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                                          " vectors exceeds the bound of " + std::to_string(kMaxElements));
  }
  const std::uint64_t total = subspace_total(n, q);
  if (total > max_elements()) {
    throw Error(ErrorCode::SizeBound, "subspace lattice would have " + std::to_string(total) +
                                          " elements, bound is " + std::to_string(max_elements()));
  }
  const auto nvec = static_cast<std::size_t>(vectors);

  // Breadth-first over dimension: each space is extended by every vector outside it.
  std::vector<Subspace> spaces;
  std::map<std::vector<Row>, std::size_t> index;
  std::vector<OrderPair> edges;
  spaces.push_back({{}, span_members({}, n, q, nvec)});
  index.emplace(std::vector<Row>{}, 0);
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    // Vectors inside an extension already found give that same extension.
    auto handled = spaces[s].members;
    for (std::size_t code = 1; code < nvec; ++code) {
      if (detail::test_bit(handled, code)) continue;
      auto rows = spaces[s].basis;
      rows.push_back(decode(code, n, q));
      auto basis = reduced_echelon(std::move(rows), q);
      auto [it, inserted] = index.emplace(basis, spaces.size());
      if (inserted) {
        auto members = span_members(basis, n, q, nvec);
        spaces.push_back({std::move(basis), std::move(members)});
      }
      detail::or_into(handled, spaces[it->second].members);
      edges.emplace_back(s, it->second);
    }
  }

  std::vector<std::size_t> order(spaces.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (spaces[a].basis.size() != spaces[b].basis.size()) return spaces[a].basis.size() < spaces[b].basis.size();
    return spaces[a].basis < spaces[b].basis;
  });
  std::vector<std::size_t> rank_of(spaces.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = i;

  std::vector<std::string> labels;
  labels.reserve(spaces.size());
  for (std::size_t i : order) labels.push_back(subspace_label(spaces[i].basis, q));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& [child, parent] : edges) {
    child = rank_of[child];
    parent = rank_of[parent];
  }
  return build_lattice(std::move(labels), edges);
}

FiniteLattice diamond_m3() {
  const std::vector<OrderPair> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return build_lattice({"0", "a", "b", "c", "1"}, pairs);
}

FiniteLattice pentagon_n5() {
  const std::vector<OrderPair> pairs{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return build_lattice({"0", "a", "b", "c", "1"}, pairs);
}

FiniteLattice chain(unsigned k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "a chain needs at least 2 elements");
  if (k > max_elements()) {
    throw Error(ErrorCode::SizeBound, std::to_string(k) + " elements exceeds the bound of " +
                                          std::to_string(max_elements()));
  }
  std::vector<std::string> labels;
  std::vector<OrderPair> pairs;
  for (unsigned i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < k) pairs.emplace_back(i, i + 1);
  }
  return build_lattice(std::move(labels), pairs);
}

}  // namespace qlat::gen
