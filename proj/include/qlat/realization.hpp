#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/structure.hpp"

namespace qlat::construct {

/// Injective map from the constants of a structure into a lattice.
struct Realization {
  std::vector<ElementId> image;  // indexed by ConstId

  ElementId operator()(ConstId c) const { return image.at(c.value); }
  bool operator==(const Realization&) const = default;
};

using Assignment = std::vector<std::pair<ConstId, ElementId>>;

struct Violation {
  enum class Kind { BoundsMoved, NotInjective, StatementFails };
  Kind kind = Kind::StatementFails;
  std::optional<Statement> statement;  // set for StatementFails
};

/// First reason `f` is not a realization of `s`: 0 or 1 not sent to bottom or
/// top, two constants sharing an element, or the first statement (insertion
/// order) that fails. Chain bounds d(0, a) are checked as heights; other chain
/// bounds are informational.
std::optional<Violation> first_violation(const PartialStructure& s, const FiniteLattice& lattice, const Realization& f);

inline bool satisfies(const PartialStructure& s, const FiniteLattice& lattice, const Realization& f) {
  return f.image.size() == s.constant_count() && !first_violation(s, lattice, f);
}

/// Lexicographically least realization (constants in id order, elements in
/// id order) extending `fixed`, found by depth-first search with forward
/// checking. Empty when none exists.
std::optional<Realization> find_realization(const PartialStructure& s, const FiniteLattice& lattice,
                                            const Assignment& fixed = {});

/// Visits realizations in lexicographic order until `visit` returns false or
/// `limit` have been produced. Returns the number visited.
std::size_t for_each_realization(const PartialStructure& s, const FiniteLattice& lattice,
                                 const std::function<bool(const Realization&)>& visit,
                                 const Assignment& fixed = {}, std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace qlat::construct
