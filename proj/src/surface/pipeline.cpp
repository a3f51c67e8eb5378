#include "abelaut/surface/pipeline.hpp"

#include "abelaut/error.hpp"
#include "abelaut/poly/fermat.hpp"

#include <algorithm>

namespace abelaut {

const std::vector<std::uint32_t>& default_reduction_primes() {
    static const std::vector<std::uint32_t> primes{29, 43, 71, 113};
    return primes;
}

bool SurfaceReport::passed() const {
    return smooth() && group.is_cyclic && group.order == p && generator_matches && freeness.free &&
           coordinate_fixed_points && swap_rejected && fermat_control_order > p;
}

namespace {

std::optional<SmoothnessCertificate> find_smooth_reduction(unsigned p, const Rational& lambda,
                                                           const std::vector<std::uint32_t>& primes,
                                                           std::vector<SmoothnessAttempt>& log) {
    for (auto q : primes) {
        if (q == p) {
            log.push_back({lambda, q, "skipped: q equals p"});
            continue;
        }
        try {
            auto cert = smoothness_certificate(p, lambda, q);
            log.push_back({lambda, q, cert.smooth ? "smooth" : "singular"});
            if (cert.smooth) return cert;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::bad_reduction) throw;
            log.push_back({lambda, q, "skipped: bad reduction"});
        }
    }
    return std::nullopt;
}

}  // namespace

SurfaceReport verify_surface(const SurfaceOptions& options) {
    const unsigned p = options.p;
    require_surface_degree(p);
    validate_conductor(p);
    std::vector<std::uint32_t> primes;
    for (auto q : options.q_list) {
        if (!is_prime(q)) throw Error(ErrorKind::domain_error, "reduction prime " + std::to_string(q) + " is not prime");
        if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
    }
    for (auto q : default_reduction_primes())
        if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);

    SurfaceReport report;
    report.p = p;
    report.lambda = options.lambda;
    const unsigned steps = options.lambda_given ? 1 : std::max(1U, options.lambda_steps);
    for (unsigned step = 0; step < steps && !report.certificate; ++step) {
        const Rational lambda = options.lambda + Rational(static_cast<long>(step));
        report.certificate = find_smooth_reduction(p, lambda, primes, report.attempts);
        if (report.certificate) report.lambda = lambda;
    }

    const auto f = lift_to_cyclotomic(build_deformed_fermat(p, report.lambda), p);
    report.records = enumerate_diagonal_automorphisms(f, p);
    report.group = cyclic_group_report(report.records);
    const auto expected = diagonal_zeta_matrix(p, 1, 2, 3);
    for (const auto& r : report.records)
        if (r.matrix == expected && r.order == p && r.alpha == CyclotomicNumber::one(p)) report.generator_matches = true;

    report.freeness = freeness_check(f, report.records);
    std::vector<ProjectivePoint> coordinate_points;
    for (std::size_t i = 0; i < 4; ++i) coordinate_points.push_back(ProjectivePoint::coordinate(p, i));
    report.coordinate_fixed_points = report.freeness.fixed_points == coordinate_points;

    report.swap_rejected = true;
    for (const auto& perm : std::vector<std::vector<std::size_t>>{{1, 0, 3, 2}, {1, 0, 2, 3}, {0, 1, 3, 2}}) {
        if (verify_projective_automorphism(f, permutation_matrix(p, perm))) report.swap_rejected = false;
    }

    const auto fermat = lift_to_cyclotomic(build_deformed_fermat(p, Rational(0)), p);
    report.fermat_control_order = enumerate_diagonal_automorphisms(fermat, p).size();
    return report;
}

}  // namespace abelaut
