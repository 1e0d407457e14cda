#include "qlat/props.hpp"

namespace qlat::reference {
namespace {

ElementId id(std::size_t i) { return ElementId{static_cast<std::uint32_t>(i)}; }

LawReport verdict(Law law, std::vector<ElementId> witness, std::string detail = {}) {
  const bool holds = witness.empty();
  return LawReport{law, holds, std::move(witness), holds ? std::string{} : std::move(detail)};
}

}  // namespace

LawReport check_lattice_axioms(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ElementId x = id(i);
    if (L.meet(x, x) != x || L.join(x, x) != x) return verdict(Law::LatticeAxioms, {x}, "idempotency");
    for (std::size_t j = 0; j < n; ++j) {
      const ElementId y = id(j);
      if (L.meet(x, y) != L.meet(y, x) || L.join(x, y) != L.join(y, x))
        return verdict(Law::LatticeAxioms, {x, y}, "commutativity");
      if (L.meet(x, L.join(x, y)) != x || L.join(x, L.meet(x, y)) != x)
        return verdict(Law::LatticeAxioms, {x, y}, "absorption");
      const bool below = L.leq(x, y);
      if (below != (L.meet(x, y) == x) || below != (L.join(x, y) == y))
        return verdict(Law::LatticeAxioms, {x, y}, "order agreement");
      for (std::size_t k = 0; k < n; ++k) {
        const ElementId z = id(k);
        if (L.meet(x, L.meet(y, z)) != L.meet(L.meet(x, y), z) || L.join(x, L.join(y, z)) != L.join(L.join(x, y), z))
          return verdict(Law::LatticeAxioms, {x, y, z}, "associativity");
      }
    }
  }
  return verdict(Law::LatticeAxioms, {});
}

LawReport is_distributive(const FiniteLattice& L) {
  for (ElementId x : L.elements())
    for (ElementId y : L.elements())
      for (ElementId z : L.elements())
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return verdict(Law::Distributive, {x, y, z});
  return verdict(Law::Distributive, {});
}

LawReport is_modular(const FiniteLattice& L) {
  for (ElementId x : L.elements())
    for (ElementId y : L.elements())
      for (ElementId z : L.elements())
        if (L.leq(x, z) && L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) return verdict(Law::Modular, {x, y, z});
  return verdict(Law::Modular, {});
}

LawReport satisfies_height_law(const FiniteLattice& L) {
  for (ElementId x : L.elements())
    for (ElementId y : L.elements())
      if (L.height(L.meet(x, y)) + L.height(L.join(x, y)) != L.height(x) + L.height(y))
        return verdict(Law::HeightLaw, {x, y});
  return verdict(Law::HeightLaw, {});
}

LawReport is_complemented(const FiniteLattice& L) {
  for (ElementId x : L.elements())
    if (complements_of(L, x).empty()) return verdict(Law::Complemented, {x});
  return verdict(Law::Complemented, {});
}

LawReport is_atomic(const FiniteLattice& L) {
  const auto atom_list = atoms(L);
  for (ElementId x : L.elements()) {
    std::vector<ElementId> below;
    for (ElementId a : atom_list)
      if (L.leq(a, x)) below.push_back(a);
    if (L.join_all(below) != x) return verdict(Law::Atomic, {x});
  }
  return verdict(Law::Atomic, {});
}

LawReport is_perspective_lattice(const FiniteLattice& L, PerspectiveMode mode) {
  std::vector<ElementId> pool;
  if (mode == PerspectiveMode::AtomsOnly) {
    pool = atoms(L);
  } else {
    for (ElementId x : L.elements()) pool.push_back(x);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (mode == PerspectiveMode::EqualHeightPairs && L.height(pool[i]) != L.height(pool[j])) continue;
      const auto ci = complements_of(L, pool[i]);
      const auto cj = complements_of(L, pool[j]);
      bool shared = false;
      for (ElementId z : ci)
        for (ElementId w : cj) shared = shared || z == w;
      if (!shared) return verdict(Law::Perspective, {pool[i], pool[j]}, "no common complement");
    }
  }
  return verdict(Law::Perspective, {});
}

}  // namespace qlat::reference
