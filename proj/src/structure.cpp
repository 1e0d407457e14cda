#include "qlat/structure.hpp"

#include <algorithm>

#include "qlat/error.hpp"

namespace qlat::construct {

std::string_view to_string(StatementKind kind) noexcept {
  switch (kind) {
    case StatementKind::JoinEq: return "join";
    case StatementKind::MeetEq: return "meet";
    case StatementKind::Disjoint: return "disjoint";
    case StatementKind::HeightIs: return "height";
    case StatementKind::ChainBound: return "chain-bound";
  }
  return "unknown";
}

PartialStructure::PartialStructure(unsigned depth_bound) : depth_bound_(depth_bound) {
  if (depth_bound == 0) throw Error(ErrorCode::InvalidArgument, "depth bound must be at least 1 (0 < 1 needs h(1) >= 1)");
  symbols_ = {"0", "1"};
  heights_ = {std::nullopt, std::nullopt};
  add_statement(join_eq(zero(), one(), one()));
  add_statement(height_is(zero(), 0));
  add_statement(height_is(one(), depth_bound));
}

const std::string& PartialStructure::symbol(ConstId c) const {
  if (c.value >= symbols_.size()) throw Error(ErrorCode::UnknownConstant, "constant #" + std::to_string(c.value));
  return symbols_[c.value];
}

std::optional<ConstId> PartialStructure::find(std::string_view symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return ConstId{static_cast<std::uint32_t>(it - symbols_.begin())};
}

ConstId PartialStructure::at(std::string_view symbol) const {
  if (auto c = find(symbol)) return *c;
  throw Error(ErrorCode::UnknownConstant, std::string(symbol));
}

std::optional<unsigned> PartialStructure::height_of(ConstId c) const {
  if (c.value >= heights_.size()) throw Error(ErrorCode::UnknownConstant, "constant #" + std::to_string(c.value));
  return heights_[c.value];
}

std::vector<Split> PartialStructure::splits() const {
  std::vector<Split> out;
  for (const auto& s : statements_) {
    if (s.kind != StatementKind::JoinEq) continue;
    const auto [b, c, a] = s.operands;
    if (b == zero() || b == one() || c == zero() || c == one() || b == a || c == a) continue;
    if (contains(disjoint(b, c))) out.push_back({a, b, c});
  }
  return out;
}

ConstId PartialStructure::add_constant(std::string symbol, std::optional<unsigned> height) {
  if (find(symbol)) throw Error(ErrorCode::InvalidArgument, "constant '" + symbol + "' already exists");
  const ConstId c{static_cast<std::uint32_t>(symbols_.size())};
  symbols_.push_back(std::move(symbol));
  heights_.push_back(std::nullopt);
  try {
    if (height) add_statement(height_is(c, *height));
  } catch (...) {
    symbols_.pop_back();
    heights_.pop_back();
    throw;
  }
  add_statement(join_eq(zero(), c, c));
  add_statement(join_eq(c, one(), one()));
  return c;
}

ConstId PartialStructure::fresh_constant(std::string_view prefix, std::optional<unsigned> height) {
  std::string name;
  do {
    name = std::string(prefix) + std::to_string(++fresh_counter_);
  } while (find(name));
  return add_constant(std::move(name), height);
}

void PartialStructure::add_statement(const Statement& s) {
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (s.operands[i].value >= symbols_.size()) {
      throw Error(ErrorCode::UnknownConstant, "statement operand #" + std::to_string(s.operands[i].value));
    }
  }
  if ((s.kind == StatementKind::HeightIs || s.kind == StatementKind::ChainBound) && s.value > depth_bound_) {
    throw Error(ErrorCode::DepthExhausted, "value " + std::to_string(s.value) + " exceeds depth bound " +
                                               std::to_string(depth_bound_));
  }
  if (index_.contains(s)) return;
  if (s.kind == StatementKind::HeightIs) {
    auto& h = heights_[s.operands[0].value];
    if (h && *h != s.value) {
      throw Error(ErrorCode::InvalidArgument, "constant '" + symbols_[s.operands[0].value] + "' already has height " +
                                                  std::to_string(*h));
    }
    h = s.value;
  }
  index_.insert(s);
  statements_.push_back(s);
}

std::string PartialStructure::describe(const Statement& s) const {
  const auto& o = s.operands;
  switch (s.kind) {
    case StatementKind::JoinEq: return symbol(o[0]) + " v " + symbol(o[1]) + " = " + symbol(o[2]);
    case StatementKind::MeetEq: return symbol(o[0]) + " ^ " + symbol(o[1]) + " = " + symbol(o[2]);
    case StatementKind::Disjoint: return symbol(o[0]) + " ^ " + symbol(o[1]) + " = 0";
    case StatementKind::HeightIs: return "h(" + symbol(o[0]) + ") = " + std::to_string(s.value);
    case StatementKind::ChainBound:
      return "d(" + symbol(o[0]) + ", " + symbol(o[1]) + ") = " + std::to_string(s.value);
  }
  return {};
}

}  // namespace qlat::construct
