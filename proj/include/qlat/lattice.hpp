#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qlat {

/// Index of an element inside one FiniteLattice.
struct ElementId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const ElementId&) const = default;
};

using OrderPair = std::pair<std::size_t, std::size_t>;

/// Explicit finite bounded lattice. Immutable once built; the order relation,
/// meet/join tables, heights and upper-neighbor lists are all computed up front
/// so every query below is a table lookup.
class FiniteLattice {
 public:
  /// Closes `leq_pairs` (child, parent) reflexively and transitively, checks the
  /// result is a bounded lattice and fills the tables.
  ///
  /// Throws Error with NotAPartialOrder, NoBoundingElements, NotALattice,
  /// SizeBound or InvalidArgument.
  static FiniteLattice build(std::vector<std::string> labels, std::span<const OrderPair> leq_pairs);

  std::size_t size() const noexcept { return size_; }
  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  const std::string& label(ElementId x) const { return labels_[x.value]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;

  bool leq(ElementId x, ElementId y) const noexcept {
    const std::size_t bit = y.value;
    return (up_[x.value * words_ + bit / 64] >> (bit % 64)) & 1U;
  }
  bool less(ElementId x, ElementId y) const noexcept { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const noexcept { return leq(x, y) || leq(y, x); }

  ElementId meet(ElementId x, ElementId y) const noexcept {
    return ElementId{meet_[std::size_t{x.value} * size_ + y.value]};
  }
  ElementId join(ElementId x, ElementId y) const noexcept {
    return ElementId{join_[std::size_t{x.value} * size_ + y.value]};
  }

  /// Longest chain from bottom to x, counted in strict steps.
  unsigned height(ElementId x) const noexcept { return heights_[x.value]; }

  /// Elements y with x < y and nothing strictly between them (the Hasse edges).
  const std::vector<ElementId>& upper_neighbors(ElementId x) const { return upper_[x.value]; }

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(size_)) |
           std::views::transform([](std::uint32_t i) { return ElementId{i}; });
  }

  /// Join over a set of elements; the empty join is bottom.
  ElementId join_all(std::span<const ElementId> xs) const noexcept;
  ElementId meet_all(std::span<const ElementId> xs) const noexcept;

  /// Copy with one meet-table entry overwritten and nothing re-validated. Only
  /// meant for fault-injection tests of the law checkers.
  FiniteLattice with_meet_entry(ElementId x, ElementId y, ElementId value) const;

 private:
  FiniteLattice() = default;

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint64_t> up_;  // row x: bit y set iff x <= y
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<unsigned> heights_;
  std::vector<std::vector<ElementId>> upper_;
  ElementId bottom_;
  ElementId top_;
};

/// Convenience over FiniteLattice::build.
inline FiniteLattice build_lattice(std::vector<std::string> labels, std::span<const OrderPair> leq_pairs) {
  return FiniteLattice::build(std::move(labels), leq_pairs);
}

/// Elements whose only strict lower bound is bottom.
std::vector<ElementId> atoms(const FiniteLattice& lattice);

/// All y with x meet y = bottom and x join y = top.
std::vector<ElementId> complements_of(const FiniteLattice& lattice, ElementId x);

/// The sublattice [lo, hi] with the original labels. Throws NotComparable
/// unless lo <= hi.
FiniteLattice interval(const FiniteLattice& lattice, ElementId lo, ElementId hi);

/// A strictly descending sequence of elements.
class Chain {
 public:
  /// Validates that `descending` is strictly decreasing in `lattice`.
  static Chain make(const FiniteLattice& lattice, std::vector<ElementId> descending);

  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  std::size_t length() const noexcept { return elements_.empty() ? 0 : elements_.size() - 1; }
  ElementId upper_end() const { return elements_.front(); }
  ElementId lower_end() const { return elements_.back(); }

  /// Same chain read from the lower end upward.
  std::vector<ElementId> ascending() const { return {elements_.rbegin(), elements_.rend()}; }

  bool operator==(const Chain&) const = default;

 private:
  explicit Chain(std::vector<ElementId> elements) : elements_(std::move(elements)) {}
  std::vector<ElementId> elements_;
};

/// Every chain whose endpoints are a and b, listed from the larger endpoint
/// down. Refuses lattices above the chain-enumeration bound and stops with
/// SizeBound once more than `max_chains` chains have been produced.
std::vector<Chain> chains_between(const FiniteLattice& lattice, ElementId a, ElementId b,
                                  std::size_t max_chains = 1'000'000);

/// True iff `finer` has the same endpoints as `coarser` and strictly more elements,
/// including all of coarser's.
bool is_refinement(const Chain& coarser, const Chain& finer);

}  // namespace qlat
