#include "abelaut/error.hpp"
#include "abelaut/poly/fermat.hpp"
#include "abelaut/scalars/prime_field.hpp"
#include "abelaut/surface/automorphism.hpp"
#include "abelaut/surface/orthogonality.hpp"
#include "abelaut/surface/pipeline.hpp"
#include "abelaut/surface/smoothness.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace abelaut;

namespace {

constexpr std::uint64_t kSeed = 20240611;

CyclotomicPolynomial surface(unsigned p, long lambda) {
    return lift_to_cyclotomic(build_deformed_fermat(p, Rational(lambda)), p);
}

CyclotomicMatrix generator(unsigned p) { return diagonal_zeta_matrix(p, 1, 2, 3); }

std::vector<CyclotomicNumber> unit(unsigned p, std::size_t i) {
    std::vector<CyclotomicNumber> e(4, CyclotomicNumber::zero(p));
    e[i] = CyclotomicNumber::one(p);
    return e;
}

// Brute force over all diag(1, z^a, z^b, z^c) with the generic substitution routine.
std::size_t diagonal_automorphism_oracle(const CyclotomicPolynomial& f, unsigned p) {
    std::size_t count = 0;
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b)
            for (unsigned c = 0; c < p; ++c) {
                const std::vector<CyclotomicNumber> d{CyclotomicNumber::one(p), CyclotomicNumber::zeta_power(p, a),
                                                      CyclotomicNumber::zeta_power(p, b), CyclotomicNumber::zeta_power(p, c)};
                if (is_scalar_multiple(linear_substitute(f, CyclotomicMatrix::diagonal(d)), f)) ++count;
            }
    return count;
}

// Direct scan of P^3(F_q) with generic polynomial evaluation.
bool smooth_oracle(unsigned p, const Rational& lambda, std::uint32_t q) {
    const auto fq = build_deformed_fermat(p, lambda).map_coefficients(
        [q](const Rational& c) { return PrimeFieldElement::from_rational(q, c); }, PrimeFieldElement(q, 0));
    std::vector<SparsePolynomial<PrimeFieldElement>> grad;
    for (std::size_t i = 0; i < 4; ++i) grad.push_back(fq.derivative(i));
    for (std::size_t lead = 0; lead < 4; ++lead) {
        const std::size_t free_coords = 3 - lead;
        std::size_t total = 1;
        for (std::size_t k = 0; k < free_coords; ++k) total *= q;
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::vector<PrimeFieldElement> x(4, PrimeFieldElement(q, 0));
            x[lead] = PrimeFieldElement(q, 1);
            std::size_t rest = idx;
            for (std::size_t k = lead + 1; k < 4; ++k) {
                x[k] = PrimeFieldElement(q, static_cast<std::int64_t>(rest % q));
                rest /= q;
            }
            bool singular = fq.evaluate(x).is_zero();
            for (std::size_t i = 0; i < 4 && singular; ++i) singular = grad[i].evaluate(x).is_zero();
            if (singular) return false;
        }
    }
    return true;
}

}  // namespace

TEST(ProjectiveAutomorphism, GeneratorIdentityAndSwap) {
    const unsigned p = 7;
    const auto f = surface(p, 1);
    const auto rec = verify_projective_automorphism(f, generator(p));
    ASSERT_TRUE(rec.has_value());
    EXPECT_EQ(rec->alpha, CyclotomicNumber::one(p));
    EXPECT_EQ(rec->order, 7u);

    const auto id = verify_projective_automorphism(f, CyclotomicMatrix::identity(4, CyclotomicNumber::zero(p)));
    ASSERT_TRUE(id.has_value());
    EXPECT_EQ(id->order, 1u);

    EXPECT_FALSE(verify_projective_automorphism(f, permutation_matrix(p, {1, 0, 3, 2})).has_value());
    EXPECT_FALSE(verify_projective_automorphism(f, permutation_matrix(p, {1, 0, 2, 3})).has_value());
    // On the Fermat surface the same permutations are symmetries.
    EXPECT_TRUE(verify_projective_automorphism(surface(p, 0), permutation_matrix(p, {1, 0, 3, 2})).has_value());
    EXPECT_THROW(verify_projective_automorphism(f, CyclotomicMatrix(4, 4, CyclotomicNumber::zero(p))), Error);
}

TEST(ProjectiveAutomorphism, ScalarMatricesAreProjectiveIdentity) {
    const unsigned p = 7;
    const auto m = CyclotomicMatrix::identity(4, CyclotomicNumber::zero(p)).scaled(CyclotomicNumber::zeta_power(p, 2));
    EXPECT_EQ(projective_order(m), 1u);
    EXPECT_EQ(normalize_projective(m), CyclotomicMatrix::identity(4, CyclotomicNumber::zero(p)));
    const auto rec = verify_projective_automorphism(surface(p, 1), m);
    ASSERT_TRUE(rec.has_value());
    EXPECT_EQ(rec->order, 1u);
}

TEST(DiagonalEnumeration, SevenRecordsAtPSeven) {
    const unsigned p = 7;
    const auto f = surface(p, 1);
    const auto records = enumerate_diagonal_automorphisms(f, p);
    ASSERT_EQ(records.size(), 7u);
    EXPECT_EQ(diagonal_automorphism_oracle(f, p), 7u);
    std::set<std::vector<Rational>> seen;
    for (unsigned k = 0; k < p; ++k) {
        const auto power = normalize_projective(generator(p).pow(k));
        bool found = false;
        for (const auto& r : records) found = found || r.matrix == power;
        EXPECT_TRUE(found) << k;
    }
    for (const auto& r : records) EXPECT_EQ(r.alpha, CyclotomicNumber::one(p));
}

TEST(DiagonalEnumeration, FermatControlIsLarger) {
    const unsigned p = 7;
    const auto f0 = surface(p, 0);
    const auto records = enumerate_diagonal_automorphisms(f0, p);
    EXPECT_GT(records.size(), 7u);
    EXPECT_EQ(records.size(), diagonal_automorphism_oracle(f0, p));
    EXPECT_EQ(records.size(), 343u);
}

TEST(DiagonalEnumeration, ElevenRecordsAtPEleven) {
    const auto f = surface(11, 1);
    const auto records = enumerate_diagonal_automorphisms(f, 11);
    EXPECT_EQ(records.size(), 11u);
    const auto group = cyclic_group_report(records);
    EXPECT_TRUE(group.is_cyclic);
    EXPECT_EQ(group.order, 11u);
}

TEST(CyclicGroup, Reports) {
    const unsigned p = 7;
    const auto records = enumerate_diagonal_automorphisms(surface(p, 1), p);
    const auto report = cyclic_group_report(records);
    EXPECT_TRUE(report.is_cyclic);
    EXPECT_EQ(report.order, 7u);
    ASSERT_TRUE(report.generator.has_value());
    EXPECT_EQ(report.generator->order, 7u);

    const auto identity = verify_projective_automorphism(surface(p, 1), CyclotomicMatrix::identity(4, CyclotomicNumber::zero(p)));
    const auto single = cyclic_group_report({*identity});
    EXPECT_TRUE(single.is_cyclic);
    EXPECT_EQ(single.order, 1u);

    std::vector<CyclotomicNumber> d{CyclotomicNumber::one(p), CyclotomicNumber(p, Rational(-1)), CyclotomicNumber::one(p),
                                    CyclotomicNumber::one(p)};
    const AutomorphismRecord bogus{CyclotomicMatrix::diagonal(d), CyclotomicNumber::one(p), 2};
    bool rejected = false;
    try {
        rejected = !cyclic_group_report({*identity, bogus}).is_cyclic;
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::inconsistency;
    }
    EXPECT_TRUE(rejected);
}

TEST(FixedPoints, DiagonalLoci) {
    const unsigned p = 7;
    const auto locus = fixed_points_in_p3(generator(p));
    EXPECT_FALSE(locus.positive_dimensional);
    ASSERT_EQ(locus.points.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(locus.points[i], ProjectivePoint::coordinate(p, i));

    EXPECT_TRUE(fixed_points_in_p3(CyclotomicMatrix::identity(4, CyclotomicNumber::zero(p))).positive_dimensional);
    const auto line = fixed_points_in_p3(diagonal_zeta_matrix(p, 0, 1, 2));
    EXPECT_TRUE(line.positive_dimensional);
    bool has_line = false;
    for (const auto& e : line.eigenspaces) has_line = has_line || e == std::vector<std::size_t>{0, 1};
    EXPECT_TRUE(has_line);
}

TEST(Freeness, SurfaceAvoidsCoordinatePoints) {
    const unsigned p = 7;
    const auto f = surface(p, 1);
    const auto records = enumerate_diagonal_automorphisms(f, p);
    const auto report = freeness_check(f, records);
    EXPECT_TRUE(report.free);
    EXPECT_EQ(report.fixed_points.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_FALSE(f.evaluate(ProjectivePoint::coordinate(p, i).coords()).is_zero());

    // Dropping x1^7 puts [1:0:0:0] on the surface.
    auto g = f;
    Monomial m(4);
    m.exponents[0] = p;
    g.add_term(m, CyclotomicNumber(p, Rational(-1)));
    const auto bad = freeness_check(g, enumerate_diagonal_automorphisms(g, p));
    EXPECT_FALSE(bad.free);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_TRUE(g.evaluate(bad.witness->coords()).is_zero());

    const auto identity = verify_projective_automorphism(f, CyclotomicMatrix::identity(4, CyclotomicNumber::zero(p)));
    EXPECT_TRUE(freeness_check(f, {*identity}).free);
}

TEST(Smoothness, Examples) {
    const auto fermat = smoothness_certificate(7, Rational(0), 29);
    EXPECT_TRUE(fermat.smooth);
    EXPECT_EQ(fermat.points_scanned, 29u * 29 * 29 + 29 * 29 + 29 + 1);
    EXPECT_TRUE(smoothness_certificate(7, Rational(1), 29).smooth);
    const auto tiny = smoothness_certificate(7, Rational(1), 2);
    EXPECT_EQ(tiny.points_scanned, 15u);
    EXPECT_EQ(tiny.smooth, smooth_oracle(7, Rational(1), 2));
    EXPECT_THROW(smoothness_certificate(7, Rational(1), 7), Error);
    EXPECT_THROW(smoothness_certificate(7, Rational(1), 28), Error);
    EXPECT_THROW(smoothness_certificate(7, Rational(Integer(1), Integer(29)), 29), Error);
}

TEST(Smoothness, MatchesDirectScan) {
    for (long lambda : {-3L, -1L, 1L, 2L, 5L})
        for (std::uint32_t q : {2u, 3u, 5u, 11u, 13u}) {
            const auto cert = smoothness_certificate(7, Rational(lambda), q);
            EXPECT_EQ(cert.smooth, smooth_oracle(7, Rational(lambda), q)) << lambda << " mod " << q;
            if (!cert.smooth) {
                ASSERT_TRUE(cert.witness.has_value());
                std::vector<PrimeFieldElement> x;
                for (auto v : *cert.witness) x.emplace_back(q, v);
                const auto fq = build_deformed_fermat(7, Rational(lambda))
                                    .map_coefficients([q](const Rational& c) { return PrimeFieldElement::from_rational(q, c); },
                                                      PrimeFieldElement(q, 0));
                EXPECT_TRUE(fq.evaluate(x).is_zero());
                for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(fq.derivative(i).evaluate(x).is_zero());
            }
        }
}

TEST(Orthogonality, ComplementExamples) {
    const unsigned p = 7;
    const auto f = surface(p, 1);
    const auto c3 = orthogonal_complement(f, unit(p, 2));
    ASSERT_EQ(c3.size(), 1u);
    EXPECT_EQ(c3[0], unit(p, 3));
    const auto c4 = orthogonal_complement(f, unit(p, 3));
    ASSERT_EQ(c4.size(), 1u);
    EXPECT_EQ(c4[0], unit(p, 2));
    EXPECT_TRUE(orthogonal_complement(f, unit(p, 0)).empty());
    EXPECT_TRUE(orthogonal_complement(f, unit(p, 1)).empty());
    EXPECT_THROW(orthogonal_complement(f, std::vector<CyclotomicNumber>(4, CyclotomicNumber::zero(p))), Error);
}

TEST(Orthogonality, ComplementVectorsReallyPairToZero) {
    const unsigned p = 7;
    const auto f = surface(p, 1);
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 30; ++t) {
        std::vector<CyclotomicNumber> a;
        for (int i = 0; i < 4; ++i) a.emplace_back(p, Rational(static_cast<long>(rng() % 3) - 1));
        bool zero = true;
        for (const auto& x : a) zero = zero && x.is_zero();
        if (zero) continue;
        for (const auto& b : orthogonal_complement(f, a)) EXPECT_TRUE(hessian_pairing(f, a, b).is_zero());
    }
}

TEST(Orthogonality, CoefficientIdentities) {
    for (unsigned p : {7u, 11u}) {
        const auto report = verify_orthogonality_coefficient_identities(p);
        EXPECT_TRUE(report.all_passed()) << p;
        EXPECT_GE(report.checks.size(), 13u);
    }
    EXPECT_THROW(verify_orthogonality_coefficient_identities(5), Error);
}

TEST(Orthogonality, TopDerivativeSupport) {
    const auto f = surface(7, 1);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(top_derivative_support(f, i), std::vector<std::size_t>{i});
    EXPECT_THROW(top_derivative_support(f, 4), Error);
}

TEST(Orthogonality, PairingEquivarianceSeeded) {
    const unsigned p = 7;
    const auto f = surface(p, 1);
    std::mt19937_64 rng(kSeed);
    auto vec = [&] {
        std::vector<CyclotomicNumber> v;
        for (int i = 0; i < 4; ++i) v.emplace_back(p, Rational(static_cast<long>(rng() % 7) - 3));
        return v;
    };
    for (const auto& rec : enumerate_diagonal_automorphisms(f, p))
        for (int s = 0; s < 5; ++s) EXPECT_TRUE(pairing_equivariant(f, rec.matrix, rec.alpha, vec(), vec()));
    // A non-automorphism fails the identity for some sample.
    const auto swap = permutation_matrix(p, {1, 0, 3, 2});
    bool any_failure = false;
    for (int s = 0; s < 5; ++s) any_failure = any_failure || !pairing_equivariant(f, swap, CyclotomicNumber::one(p), vec(), vec());
    EXPECT_TRUE(any_failure);
}

TEST(Pipeline, RetryPolicyAndReport) {
    SurfaceOptions options;
    options.p = 7;
    options.q_list = {29};
    const auto report = verify_surface(options);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.lambda, Rational(1));
    ASSERT_FALSE(report.attempts.empty());
    EXPECT_EQ(report.attempts.front().q, 29u);
    EXPECT_EQ(report.fermat_control_order, 343u);
    EXPECT_TRUE(report.swap_rejected);
    EXPECT_TRUE(report.coordinate_fixed_points);

    // A reduction prime equal to p is skipped and the default list takes over.
    options.q_list = {7};
    const auto skipped = verify_surface(options);
    EXPECT_TRUE(skipped.smooth());
    EXPECT_NE(skipped.attempts.front().outcome, "smooth");
    EXPECT_EQ(default_reduction_primes(), (std::vector<std::uint32_t>{29, 43, 71, 113}));

    options.q_list = {29};
    options.lambda = Rational(0);
    options.lambda_given = true;
    const auto fermat = verify_surface(options);
    EXPECT_EQ(fermat.group.order, 343u);
    EXPECT_FALSE(fermat.passed());
}
