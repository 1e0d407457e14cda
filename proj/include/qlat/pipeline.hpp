#pragma once

#include <string>
#include <vector>

namespace qlat::construct {

struct PipelineStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PipelineReport {
  std::string section;  // "s5" or "s7"
  unsigned n = 0;
  unsigned q = 0;  // 0 for s5
  std::vector<PipelineStep> steps;

  bool passed() const;
};

/// Tree, realization in B_n, independent atoms, closure recovering B_n, and
/// closure of the result under principles II, III and IV. 1 <= n <= 4;
/// SizeBound above, InvalidArgument for 0.
PipelineReport verify_section5(unsigned n);

/// The same pipeline with principle IIa, targeting the subspace lattice of
/// dimension n over the field of order q, plus the characterization and the
/// join, third point and coplanar-meet checks. 2 <= n <= 4 and q prime.
/// Covers are limited to 64-element ambients, so (4, 2) raises SizeBound.
PipelineReport verify_section7(unsigned n, unsigned q);

}  // namespace qlat::construct
