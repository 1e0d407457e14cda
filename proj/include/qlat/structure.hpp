#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ranges>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat::construct {

/// Handle of a named constant inside one PartialStructure.
struct ConstId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const ConstId&) const = default;
};

enum class StatementKind {
  JoinEq,      // a join b = c
  MeetEq,      // a meet b = c
  Disjoint,    // a meet b = 0
  HeightIs,    // h(a) = value
  ChainBound,  // d(a, b) = value
};

std::string_view to_string(StatementKind kind) noexcept;

/// One statement over operands of type T (constants, or lattice elements for
/// statements read off a concrete lattice). Symmetric statements keep their two
/// arguments sorted so equal statements compare equal.
template <class T>
struct BasicStatement {
  StatementKind kind = StatementKind::HeightIs;
  std::array<T, 3> operands{};
  unsigned value = 0;

  std::size_t arity() const noexcept {
    switch (kind) {
      case StatementKind::JoinEq:
      case StatementKind::MeetEq: return 3;
      case StatementKind::Disjoint:
      case StatementKind::ChainBound: return 2;
      case StatementKind::HeightIs: return 1;
    }
    return 0;
  }

  auto operator<=>(const BasicStatement&) const = default;
};

template <class T>
BasicStatement<T> join_eq(T a, T b, T c) {
  if (b < a) std::swap(a, b);
  return {StatementKind::JoinEq, {a, b, c}, 0};
}

template <class T>
BasicStatement<T> meet_eq(T a, T b, T c) {
  if (b < a) std::swap(a, b);
  return {StatementKind::MeetEq, {a, b, c}, 0};
}

template <class T>
BasicStatement<T> disjoint(T a, T b) {
  if (b < a) std::swap(a, b);
  return {StatementKind::Disjoint, {a, b, T{}}, 0};
}

template <class T>
BasicStatement<T> height_is(T a, unsigned h) {
  return {StatementKind::HeightIs, {a, T{}, T{}}, h};
}

template <class T>
BasicStatement<T> chain_bound(T a, T b, unsigned d) {
  return {StatementKind::ChainBound, {a, b, T{}}, d};
}

using Statement = BasicStatement<ConstId>;
using ElementStatement = BasicStatement<ElementId>;

/// A principle II split recorded in a structure: b join c = a with b meet c = 0.
struct Split {
  ConstId whole, left, right;

  auto operator<=>(const Split&) const = default;
};

/// Named constants plus the statements made about them so far. Value type:
/// the construction principles copy and extend, never mutate their input.
///
/// Invariants kept by every mutator:
///  - 0 and 1 exist, with 0 join 1 = 1, h(0) = 0 and h(1) = depth bound;
///  - each new constant x gets 0 join x = x and x join 1 = 1;
///  - no height or chain bound exceeds the depth bound;
///  - a constant has at most one declared height.
class PartialStructure {
 public:
  /// Structure holding just 0 and 1 with h(1) = depth_bound (>= 1).
  explicit PartialStructure(unsigned depth_bound);

  ConstId zero() const noexcept { return ConstId{0}; }
  ConstId one() const noexcept { return ConstId{1}; }
  unsigned depth_bound() const noexcept { return depth_bound_; }

  std::size_t constant_count() const noexcept { return symbols_.size(); }
  auto constants() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(symbols_.size())) |
           std::views::transform([](std::uint32_t i) { return ConstId{i}; });
  }
  const std::string& symbol(ConstId c) const;
  std::optional<ConstId> find(std::string_view symbol) const;
  /// Like find, but throws UnknownConstant.
  ConstId at(std::string_view symbol) const;

  const std::vector<Statement>& statements() const noexcept { return statements_; }
  bool contains(const Statement& s) const { return index_.contains(s); }
  std::optional<unsigned> height_of(ConstId c) const;

  /// Recorded b join c = a splits (JoinEq together with Disjoint, neither part 0 or 1).
  std::vector<Split> splits() const;

  /// Adds a constant named `symbol`; throws InvalidArgument if the name is taken.
  ConstId add_constant(std::string symbol, std::optional<unsigned> height = std::nullopt);

  /// Adds a constant named prefix + counter, skipping names already in use.
  ConstId fresh_constant(std::string_view prefix, std::optional<unsigned> height = std::nullopt);

  /// Inserts a statement unless already present. Throws UnknownConstant for
  /// foreign operands, DepthExhausted past the depth bound and InvalidArgument
  /// for a second, different height of the same constant.
  void add_statement(const Statement& s);

  std::string describe(const Statement& s) const;

 private:
  unsigned depth_bound_;
  unsigned fresh_counter_ = 0;
  std::vector<std::string> symbols_;
  std::vector<std::optional<unsigned>> heights_;
  std::vector<Statement> statements_;
  std::set<Statement> index_;
};

}  // namespace qlat::construct
