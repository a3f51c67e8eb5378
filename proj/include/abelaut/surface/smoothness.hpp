#pragma once

#include "abelaut/scalars/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace abelaut {

struct SmoothnessCertificate {
    unsigned p = 0;
    Rational lambda;
    std::uint32_t q = 0;
    bool smooth = false;
    std::optional<std::array<std::uint32_t, 4>> witness;  // a singular point, first nonzero coordinate 1
    std::uint64_t points_scanned = 0;
};

// Exhaustive scan of P^3(F_q) for common zeros of f_lambda and its gradient.
// A smooth verdict certifies smoothness over Q; a singular one is inconclusive.
SmoothnessCertificate smoothness_certificate(unsigned p, const Rational& lambda, std::uint32_t q);

}  // namespace abelaut
