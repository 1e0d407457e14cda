#pragma once

#include <span>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/props.hpp"

namespace qlat::projective {

/// True iff every upper-neighbor step raises the height by exactly one.
bool is_graded(const FiniteLattice& lattice);

/// Points, lines and planes of a graded lattice, classified by height 1, 2, 3.
/// Holds a pointer to the lattice, which must outlive the view.
class GeometryView {
 public:
  /// Throws Error(NotGraded) when heights cannot classify the elements.
  explicit GeometryView(const FiniteLattice& lattice);

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const std::vector<ElementId>& points() const noexcept { return points_; }
  const std::vector<ElementId>& lines() const noexcept { return lines_; }
  const std::vector<ElementId>& planes() const noexcept { return planes_; }

  /// Points p with p <= x.
  std::vector<ElementId> points_on(ElementId x) const;

 private:
  const FiniteLattice* lattice_;
  std::vector<ElementId> points_, lines_, planes_;
};

/// Two distinct points lie on exactly one line. The line is searched among
/// all height-2 elements rather than assumed to be the join.
LawReport check_p1(const GeometryView& view);

/// Two distinct lines whose join has height at most 3 meet in a point. The
/// detail string records the meet heights seen over coplanar pairs.
LawReport check_p2(const GeometryView& view);

/// Every line has at least three points.
LawReport check_p3_third_point(const GeometryView& view);

/// No q_i lies below the join of any subset of the others. Throws NotAtoms when
/// an entry is not an atom and InvalidArgument on repeated entries.
bool is_independent(const FiniteLattice& lattice, std::span<const ElementId> atom_set);

/// Lexicographically first independent atom set of maximum size, by exhaustive
/// search. Throws NotAtomic, or SizeBound above 24 atoms.
std::vector<ElementId> max_independent_set(const FiniteLattice& lattice);

/// Some n points join to top and no n-1 points do. A passing report carries a
/// spanning set of size n as its witness. Throws NotAtomic.
LawReport check_spanning(const FiniteLattice& lattice, unsigned n);

struct CharacterizationReport {
  unsigned depth = 0;
  std::vector<LawReport> clauses;

  bool holds() const;
  const LawReport* clause(Law law) const;
};

/// Modular, atomic, perspective (atoms), top of height n, P1, P2, P3 (third
/// point) and spanning by n points, each with its own witness.
CharacterizationReport verify_bvn_characterization(const FiniteLattice& lattice, unsigned n);

}  // namespace qlat::projective
