#include "qlat/props.hpp"

#include <string>

#include "row_scan.hpp"

namespace qlat {

std::string_view to_string(Law law) noexcept {
  switch (law) {
    case Law::LatticeAxioms: return "lattice-axioms";
    case Law::Distributive: return "distributive";
    case Law::Modular: return "modular";
    case Law::HeightLaw: return "height-law";
    case Law::Complemented: return "complemented";
    case Law::Atomic: return "atomic";
    case Law::Perspective: return "perspective";
    case Law::P1: return "p1";
    case Law::P2: return "p2";
    case Law::P3ThirdPoint: return "p3-third-point";
    case Law::Spanning: return "spanning";
    case Law::TopHeight: return "top-height";
  }
  return "unknown";
}

}  // namespace qlat

namespace qlat::props {
namespace {

using Witness = std::optional<std::vector<ElementId>>;

ElementId id(std::size_t i) { return ElementId{static_cast<std::uint32_t>(i)}; }

LawReport pass(Law law) { return LawReport{law, true, {}, {}}; }

LawReport fail(Law law, std::vector<ElementId> witness, std::string detail = {}) {
  return LawReport{law, false, std::move(witness), std::move(detail)};
}

// Axiom rows return the witness with a trailing tag element naming the
// identity; the tag is stripped into LawReport::detail.
enum AxiomTag : std::uint32_t { kIdempotency, kCommutativity, kAbsorption, kOrder, kAssociativity };

const char* axiom_name(std::uint32_t tag) {
  switch (tag) {
    case kIdempotency: return "idempotency";
    case kCommutativity: return "commutativity";
    case kAbsorption: return "absorption";
    case kOrder: return "order agreement";
    default: return "associativity";
  }
}

}  // namespace

LawReport check_lattice_axioms(const FiniteLattice& L) {
  const std::size_t n = L.size();
  auto row = [&](std::size_t xi) -> Witness {
    const ElementId x = id(xi);
    if (L.meet(x, x) != x || L.join(x, x) != x) return std::vector{x, ElementId{kIdempotency}};
    for (std::size_t yi = 0; yi < n; ++yi) {
      const ElementId y = id(yi);
      if (L.meet(x, y) != L.meet(y, x) || L.join(x, y) != L.join(y, x)) {
        return std::vector{x, y, ElementId{kCommutativity}};
      }
      if (L.meet(x, L.join(x, y)) != x || L.join(x, L.meet(x, y)) != x) {
        return std::vector{x, y, ElementId{kAbsorption}};
      }
      const bool below = L.leq(x, y);
      if (below != (L.meet(x, y) == x) || below != (L.join(x, y) == y)) {
        return std::vector{x, y, ElementId{kOrder}};
      }
      for (std::size_t zi = 0; zi < n; ++zi) {
        const ElementId z = id(zi);
        if (L.meet(x, L.meet(y, z)) != L.meet(L.meet(x, y), z) ||
            L.join(x, L.join(y, z)) != L.join(L.join(x, y), z)) {
          return std::vector{x, y, z, ElementId{kAssociativity}};
        }
      }
    }
    return std::nullopt;
  };
  auto w = detail::first_failing_row(n, row);
  if (!w) return pass(Law::LatticeAxioms);
  const std::uint32_t tag = w->back().value;
  w->pop_back();
  return fail(Law::LatticeAxioms, std::move(*w), axiom_name(tag));
}

LawReport is_distributive(const FiniteLattice& L) {
  const std::size_t n = L.size();
  auto w = detail::first_failing_row(n, [&](std::size_t xi) -> Witness {
    const ElementId x = id(xi);
    for (std::size_t yi = 0; yi < n; ++yi) {
      const ElementId y = id(yi);
      const ElementId xy = L.meet(x, y);
      for (std::size_t zi = 0; zi < n; ++zi) {
        const ElementId z = id(zi);
        if (L.meet(x, L.join(y, z)) != L.join(xy, L.meet(x, z))) return std::vector{x, y, z};
      }
    }
    return std::nullopt;
  });
  return w ? fail(Law::Distributive, std::move(*w)) : pass(Law::Distributive);
}

LawReport is_modular(const FiniteLattice& L) {
  const std::size_t n = L.size();
  // A failing x <= z also fails at x' = x v (y ^ z), z' = z ^ (x v y), where
  // y ^ z' <= x' and z' <= x' v y; any upper cover c of x' below z' then fails
  // too. So the law holds iff no upper cover c of x has c <= x v y and
  // c ^ y = x ^ y, which costs one pass over y per cover edge.
  const bool clean = !detail::first_failing_row(n, [&](std::size_t xi) -> Witness {
    const ElementId x = id(xi);
    const auto& covers = L.upper_neighbors(x);
    if (covers.empty()) return std::nullopt;
    for (std::size_t yi = 0; yi < n; ++yi) {
      const ElementId y = id(yi);
      const ElementId xy = L.join(x, y), m = L.meet(x, y);
      for (ElementId c : covers)
        if (L.leq(c, xy) && L.meet(c, y) == m) return std::vector{x, y, c};
    }
    return std::nullopt;
  });
  if (clean) return pass(Law::Modular);

  // The law holds outright when y is comparable to x or to z, so only
  // y incomparable to both, and z above x, are visited.
  auto w = detail::first_failing_row(n, [&](std::size_t xi) -> Witness {
    const ElementId x = id(xi);
    std::vector<ElementId> above;
    for (std::size_t zi = 0; zi < n; ++zi)
      if (L.leq(x, id(zi))) above.push_back(id(zi));
    for (std::size_t yi = 0; yi < n; ++yi) {
      const ElementId y = id(yi);
      if (L.comparable(x, y)) continue;
      const ElementId xy = L.join(x, y);
      for (ElementId z : above) {
        if (L.comparable(y, z)) continue;
        if (L.join(x, L.meet(y, z)) != L.meet(xy, z)) return std::vector{x, y, z};
      }
    }
    return std::nullopt;
  });
  return w ? fail(Law::Modular, std::move(*w)) : pass(Law::Modular);
}

LawReport satisfies_height_law(const FiniteLattice& L) {
  const std::size_t n = L.size();
  auto w = detail::first_failing_row(n, [&](std::size_t xi) -> Witness {
    const ElementId x = id(xi);
    for (std::size_t yi = 0; yi < n; ++yi) {
      const ElementId y = id(yi);
      if (L.height(L.meet(x, y)) + L.height(L.join(x, y)) != L.height(x) + L.height(y)) return std::vector{x, y};
    }
    return std::nullopt;
  });
  return w ? fail(Law::HeightLaw, std::move(*w)) : pass(Law::HeightLaw);
}

LawReport is_complemented(const FiniteLattice& L) {
  const std::size_t n = L.size();
  auto w = detail::first_failing_row(n, [&](std::size_t xi) -> Witness {
    const ElementId x = id(xi);
    for (ElementId y : L.elements()) {
      if (L.meet(x, y) == L.bottom() && L.join(x, y) == L.top()) return std::nullopt;
    }
    return std::vector{x};
  });
  return w ? fail(Law::Complemented, std::move(*w)) : pass(Law::Complemented);
}

LawReport is_atomic(const FiniteLattice& L) {
  const auto atom_list = atoms(L);
  auto w = detail::first_failing_row(L.size(), [&](std::size_t xi) -> Witness {
    const ElementId x = id(xi);
    ElementId acc = L.bottom();
    for (ElementId a : atom_list)
      if (L.leq(a, x)) acc = L.join(acc, a);
    if (acc != x) return std::vector{x};
    return std::nullopt;
  });
  return w ? fail(Law::Atomic, std::move(*w)) : pass(Law::Atomic);
}

std::optional<ElementId> common_complement(const FiniteLattice& L, ElementId x, ElementId y) {
  for (ElementId z : L.elements()) {
    if (L.meet(x, z) == L.bottom() && L.join(x, z) == L.top() && L.meet(y, z) == L.bottom() &&
        L.join(y, z) == L.top()) {
      return z;
    }
  }
  return std::nullopt;
}

LawReport is_perspective_lattice(const FiniteLattice& L, PerspectiveMode mode) {
  std::vector<ElementId> candidates;
  if (mode == PerspectiveMode::AtomsOnly) {
    candidates = atoms(L);
  } else {
    for (ElementId x : L.elements()) candidates.push_back(x);
  }
  const std::size_t k = candidates.size();
  auto w = detail::first_failing_row(k, [&](std::size_t i) -> Witness {
    const ElementId x = candidates[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      const ElementId y = candidates[j];
      if (mode == PerspectiveMode::EqualHeightPairs && L.height(x) != L.height(y)) continue;
      if (!common_complement(L, x, y)) return std::vector{x, y};
    }
    return std::nullopt;
  });
  if (!w) return pass(Law::Perspective);
  return fail(Law::Perspective, std::move(*w), "no common complement");
}

}  // namespace qlat::props
