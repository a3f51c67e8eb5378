#pragma once

#include "abelaut/torus/lattice.hpp"

#include <vector>

namespace abelaut {

inline constexpr int kDefaultEntryBound = 3;
inline constexpr std::size_t kDefaultBoxBudget = 2'000'000;

struct FiniteAutomorphisms {
    std::vector<IntMatrix> elements;  // identity first, then by order and entries
    int entry_bound = 0;
    std::size_t candidates = 0;
    bool closed = false;  // products stay inside the list
};

// Box search over integer combinations of the endomorphism basis with
// coefficients in [-bound, bound]; keeps the invertible ones of finite order.
// Complete only when every unit has small coordinates in that basis.
FiniteAutomorphisms enumerate_finite_automorphisms(const LatticeTorus& t, int entry_bound = kDefaultEntryBound,
                                                   std::size_t budget = kDefaultBoxBudget);

// Heuristic screen: true when no idempotent other than 0 and I shows up in
// the coefficient box (a nontrivial idempotent splits the torus).
bool simplicity_screen(const LatticeTorus& t, int entry_bound = 1, std::size_t budget = kDefaultBoxBudget);

}  // namespace abelaut
