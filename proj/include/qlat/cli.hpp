#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/props.hpp"

namespace qlat::cli {

/// Label-keyed lattice file. `order` may be any relation whose reflexive and
/// transitive closure is the order.
struct LatticeDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;  // (child, parent)

  bool operator==(const LatticeDocument&) const = default;
};

/// Parses the JSON form. Malformed input raises Error(InvalidArgument) whose
/// message starts with "line L, column C" for syntax errors.
LatticeDocument parse_document(std::string_view text);

/// Canonical JSON text: two-space indent, trailing newline.
std::string render_document(const LatticeDocument& doc);

/// Builds and validates the lattice; unknown labels in `order` are InvalidArgument.
FiniteLattice to_lattice(const LatticeDocument& doc);

/// Elements in lattice order, order pairs = upper-neighbor edges.
LatticeDocument to_document(const FiniteLattice& lattice, std::string name);

/// Hasse diagram as a Graphviz digraph, bottom at the bottom, one rank per height.
std::string hasse_dot(const FiniteLattice& lattice, std::string_view name);

Law parse_law(std::string_view name);
std::span<const Law> all_laws();

/// Runs one check. Projective laws on ungraded lattices and spanning on
/// non-atomic ones come back failing with an explanatory detail instead of
/// throwing. `n` is the depth for top-height and spanning.
LawReport run_check(const FiniteLattice& lattice, Law law, unsigned n);

/// Entry point behind the qlat binary. Exit status 0 when every check or step
/// holds, 1 when one fails, 2 for usage and input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlat::cli
