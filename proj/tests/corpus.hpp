#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "qlat/error.hpp"
#include "qlat/generators.hpp"
#include "qlat/lattice.hpp"
#include "qlat/limits.hpp"

namespace corpus {

using qlat::FiniteLattice;

struct Named {
  std::string name;
  FiniteLattice lattice;
};

/// Builds from (child, parent) label pairs.
inline FiniteLattice from_labels(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::string, std::string>>& order) {
  std::vector<qlat::OrderPair> pairs;
  auto at = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  for (const auto& [c, p] : order) pairs.emplace_back(at(c), at(p));
  return qlat::build_lattice(std::move(labels), pairs);
}

/// Cartesian product ordered componentwise.
inline FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  std::vector<std::string> labels;
  std::vector<qlat::OrderPair> pairs;
  const std::size_t nb = b.size();
  for (auto x : a.elements())
    for (auto y : b.elements()) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  for (auto x : a.elements()) {
    for (auto y : b.elements()) {
      for (auto u : a.upper_neighbors(x)) pairs.emplace_back(x.value * nb + y.value, u.value * nb + y.value);
      for (auto v : b.upper_neighbors(y)) pairs.emplace_back(x.value * nb + y.value, x.value * nb + v.value);
    }
  }
  return qlat::build_lattice(std::move(labels), pairs);
}

/// Hand-built shapes that the generators do not produce.
inline std::vector<Named> extras() {
  std::vector<Named> out;
  out.push_back({"hexagon", from_labels({"0", "a", "b", "c", "d", "1"},
                                        {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "d"}, {"d", "1"}})});
  out.push_back({"m4", from_labels({"0", "a", "b", "c", "d", "1"},
                                   {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"}, {"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}})});
  // N5 sitting on top of a diamond: graded-looking at the bottom, not modular.
  out.push_back({"n5-over-m3", from_labels({"0", "a", "b", "c", "m", "x", "y", "z", "1"},
                                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "m"}, {"b", "m"}, {"c", "m"},
                                            {"m", "x"}, {"x", "y"}, {"y", "1"}, {"m", "z"}, {"z", "1"}})});
  out.push_back({"m3xb1", product(qlat::gen::diamond_m3(), qlat::gen::boolean_lattice(1))});
  out.push_back({"n5xb1", product(qlat::gen::pentagon_n5(), qlat::gen::boolean_lattice(1))});
  out.push_back({"chain3xchain3", product(qlat::gen::chain(3), qlat::gen::chain(3))});
  out.push_back({"singleton", qlat::build_lattice({"*"}, {})});
  return out;
}

/// Generator output up to 64 elements plus the hand-built shapes.
inline std::vector<Named> small() {
  using namespace qlat::gen;
  std::vector<Named> out;
  for (unsigned n = 1; n <= 6; ++n) out.push_back({"boolean-" + std::to_string(n), boolean_lattice(n)});
  for (unsigned k = 2; k <= 8; ++k) out.push_back({"chain-" + std::to_string(k), chain(k)});
  out.push_back({"m3", diamond_m3()});
  out.push_back({"n5", pentagon_n5()});
  for (unsigned q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    out.push_back({"subspace-1-" + std::to_string(q), subspace_lattice({1, q})});
    out.push_back({"subspace-2-" + std::to_string(q), subspace_lattice({2, q})});
  }
  out.push_back({"subspace-3-2", subspace_lattice({3, 2})});
  out.push_back({"subspace-3-3", subspace_lattice({3, 3})});
  out.push_back({"subspace-3-5", subspace_lattice({3, 5})});
  for (auto& e : extras()) out.push_back(std::move(e));
  return out;
}

/// Every generator and every parameter combination accepted by its bounds,
/// except that chains are sampled (all lengths to 32, then powers of two).
/// Visits one lattice at a time so the large ones are not held together.
inline void for_each_generated(const std::function<void(const std::string&, const FiniteLattice&)>& visit) {
  using namespace qlat::gen;
  for (unsigned n = 1; n <= qlat::kMaxBooleanRank; ++n) visit("boolean-" + std::to_string(n), boolean_lattice(n));
  for (unsigned k = 2; k <= qlat::kMaxElements; k = k < 32 ? k + 1 : k * 2) visit("chain-" + std::to_string(k), chain(k));
  visit("m3", diamond_m3());
  visit("n5", pentagon_n5());
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned q = 2; q <= qlat::kMaxElements; ++q) {
      if (!is_prime(q)) continue;
      std::size_t vectors = 1;
      bool over = false;
      for (unsigned i = 0; i < n && !over; ++i) over = (vectors *= q) > qlat::kMaxElements;
      if (over) break;
      try {
        visit("subspace-" + std::to_string(n) + "-" + std::to_string(q), subspace_lattice({n, q}));
      } catch (const qlat::Error& e) {
        if (e.code() != qlat::ErrorCode::SizeBound) throw;
      }
    }
  }
}

}  // namespace corpus
