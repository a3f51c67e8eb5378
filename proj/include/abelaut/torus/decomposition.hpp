#pragma once

#include "abelaut/torus/automorphisms.hpp"
#include "abelaut/torus/lattice.hpp"
#include "abelaut/torus/quotient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abelaut {

// sigma: T_1 x ... x T_h -> A, (a_1, ..., a_h) -> a_1 + ... + a_h, with finite kernel Sigma.
struct IsogenyDecomposition {
    std::vector<LatticeTorus> factors;
    std::vector<TorsionPoint> sigma_generators;  // product coordinates
    LatticeTorus product;
    std::vector<TorsionPoint> sigma;  // all elements, sorted
    std::vector<std::size_t> offsets;  // first product coordinate of each factor

    Integer N() const { return Integer(static_cast<long>(sigma.size())); }
    std::size_t h() const noexcept { return factors.size(); }
    TorsionPoint component(const TorsionPoint& x, std::size_t i) const;
    TorsionPoint embed(const TorsionPoint& x, std::size_t i) const;
    // A = product / Sigma.
    TorusQuotient abelian_variety() const;
};

// Validates dimensions and that Sigma meets every factor trivially.
IsogenyDecomposition make_decomposition(std::vector<LatticeTorus> factors, std::vector<TorsionPoint> sigma_generators);

struct StarEntry {
    std::size_t factor = 0;
    std::vector<TorsionPoint> subgroup;
    IntMatrix phi;
    Integer count;         // fixed points of phi on T_i / H
    bool infinite = false;  // det(I - phi) = 0 with phi != id
};

struct StarReport {
    bool ok = false;
    unsigned p = 0;
    Integer N;
    int entry_bound = 0;
    bool enumerations_closed = true;
    std::size_t subgroups_checked = 0;
    std::vector<StarEntry> table;
    std::optional<StarEntry> witness;  // the largest count (an infinite one wins)
};

// For every factor, every subgroup H of T_i[N] and every nontrivial finite
// automorphism of T_i / H: the fixed-point count must stay below p.
StarReport check_condition_star(const IsogenyDecomposition& d, unsigned p, int entry_bound = kDefaultEntryBound);

struct DoubleStarReport {
    bool ok = false;
    bool p_torsion = false;          // p P lies in Sigma
    bool nonzero = false;            // P not in Sigma
    std::vector<bool> components;    // P not in (sum of the other factors) + Sigma
    std::string reason;
};

// P (a lift to the product) is a p-torsion point of A in no proper abelian subvariety
// A_{i_1} + ... + A_{i_k}.
DoubleStarReport check_condition_double_star(const TorsionPoint& P, const IsogenyDecomposition& d, unsigned p);

struct QuotientDatum {
    std::vector<std::vector<TorsionPoint>> intersections;  // A_1 cap A_i inside T_i, i >= 2
    IsogenyDecomposition derived;
    TorsionPoint P_prime = TorsionPoint::zero(0);
    Integer N, N_prime, K_order;
    bool identity_holds = false;  // N' |K| = N
    StarReport star;
    DoubleStarReport double_star;

    bool passed() const { return identity_holds && star.ok && double_star.ok; }
};

// Passes to A' = A / A_1 and re-checks both conditions there.
QuotientDatum derive_quotient_datum(const IsogenyDecomposition& d, const TorsionPoint& P, unsigned p,
                                    int entry_bound = kDefaultEntryBound);

}  // namespace abelaut
