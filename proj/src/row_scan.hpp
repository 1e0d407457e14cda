#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat::detail {

// Runs `row(x)` for every x in parallel and returns the witness of the smallest
// failing row. Rows above the best failure found so far are skipped, so the
// result does not depend on the schedule.
template <class RowFn>
std::optional<std::vector<ElementId>> first_failing_row(std::size_t rows, RowFn&& row) {
  std::atomic<std::size_t> best{rows};
  std::vector<std::optional<std::vector<ElementId>>> found(rows);
  const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto x = static_cast<std::size_t>(i);
    if (x > best.load(std::memory_order_relaxed)) continue;
    if (auto w = row(x)) {
      found[x] = std::move(w);
      std::size_t cur = best.load();
      while (x < cur && !best.compare_exchange_weak(cur, x)) {
      }
    }
  }
  const std::size_t b = best.load();
  if (b == rows) return std::nullopt;
  return std::move(found[b]);
}

}  // namespace qlat::detail
