#pragma once

#include "abelaut/torus/lattice.hpp"

#include <vector>

namespace abelaut {

// T' = T / H as the superlattice Lambda' = Z^{2g} + <lifts of H>.
struct TorusQuotient {
    LatticeTorus torus;    // complex structure in the new basis
    RatMatrix basis;       // columns: a basis of Lambda' in old coordinates
    IntMatrix projection;  // old coordinates -> new ones (basis^{-1}, integral)
    Integer index;         // [Lambda' : Z^{2g}] = |H|
    std::vector<TorsionPoint> generators;

    TorsionPoint project(const TorsionPoint& x) const { return x.apply(projection); }
};

TorusQuotient quotient_by_subgroup(const LatticeTorus& t, const std::vector<TorsionPoint>& generators);

// True when x lies in the subgroup generated by the quotient's generators.
bool in_subgroup(const TorusQuotient& q, const TorsionPoint& x);

// The map M' = B^{-1} M B on T / H; throws not-stable unless M(H) is contained in H.
LatticeMap induced_map_on_quotient(const LatticeMap& phi, const TorusQuotient& q);

// All elements of the subgroup generated by the given points, sorted.
std::vector<TorsionPoint> generated_subgroup(const std::vector<TorsionPoint>& generators, std::size_t dim,
                                             std::size_t cap = kDefaultTorsionCap);

inline constexpr std::size_t kDefaultSubgroupCap = 10'000;

// Every subgroup of (1/n)Z^dim / Z^dim, each as its sorted element list; ordered by size, then elements.
std::vector<std::vector<TorsionPoint>> enumerate_subgroups(std::size_t dim, unsigned n,
                                                           std::size_t cap = kDefaultSubgroupCap);

}  // namespace abelaut
