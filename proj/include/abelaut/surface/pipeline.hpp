#pragma once

#include "abelaut/scalars/rational.hpp"
#include "abelaut/surface/automorphism.hpp"
#include "abelaut/surface/smoothness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abelaut {

// Reduction primes tried after the user's choice.
const std::vector<std::uint32_t>& default_reduction_primes();

struct SurfaceOptions {
    unsigned p = 7;
    Rational lambda = Rational(1);
    bool lambda_given = false;          // a given lambda is never walked
    std::vector<std::uint32_t> q_list;  // tried first, then the defaults
    unsigned lambda_steps = 5;
};

struct SmoothnessAttempt {
    Rational lambda;
    std::uint32_t q = 0;
    std::string outcome;  // "smooth", "singular", or why the prime was skipped
};

struct SurfaceReport {
    unsigned p = 0;
    Rational lambda;
    std::vector<SmoothnessAttempt> attempts;
    std::optional<SmoothnessCertificate> certificate;  // the smooth one, if any
    std::vector<AutomorphismRecord> records;
    CyclicGroupReport group;
    bool generator_matches = false;  // diag(1, z, z^2, z^3) is a record of order p
    FreenessReport freeness;
    bool coordinate_fixed_points = false;
    bool swap_rejected = false;
    std::size_t fermat_control_order = 0;

    bool smooth() const { return certificate.has_value(); }
    bool passed() const;
};

SurfaceReport verify_surface(const SurfaceOptions& options);

}  // namespace abelaut
