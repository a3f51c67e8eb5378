#include "abelaut/error.hpp"
#include "abelaut/linalg/integer_matrix.hpp"
#include "abelaut/poly/fermat.hpp"
#include "abelaut/poly/sparse_polynomial.hpp"
#include "abelaut/poly/text.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace abelaut;

namespace {

constexpr std::uint64_t kSeed = 20240611;
using QPoly = SparsePolynomial<Rational>;
using ZPoly = SparsePolynomial<CyclotomicNumber>;

QPoly parse_q(std::string_view text, std::size_t arity = 4) { return parse_polynomial(text, arity, Rational(0)); }

Rational small(std::mt19937_64& rng) { return Rational(static_cast<long>(rng() % 7) - 3); }

QPoly random_homogeneous(std::mt19937_64& rng, unsigned degree, std::size_t terms) {
    QPoly f(4, Rational(0));
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(4);
        unsigned left = degree;
        for (std::size_t i = 0; i < 3; ++i) {
            const unsigned e = static_cast<unsigned>(rng() % (left + 1));
            m.exponents[i] = e;
            left -= e;
        }
        m.exponents[3] = left;
        f.add_term(m, small(rng));
    }
    return f;
}

RatMatrix random_matrix(std::mt19937_64& rng) {
    RatMatrix m(4, 4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng() % 2 ? small(rng) : Rational(0);
    return m;
}

std::vector<Rational> unit(std::size_t i) {
    std::vector<Rational> e(4, Rational(0));
    e[i] = Rational(1);
    return e;
}

// Independent oracle for the polarization: sum over every assignment of the argument slots to
// variables that matches the monomial's exponents, weighted by prod e_i!.
Rational multilinear_oracle(const QPoly& f, const std::vector<std::vector<Rational>>& vs) {
    const std::size_t d = vs.size();
    Rational total(0);
    for (const auto& [m, c] : f.terms()) {
        Rational weight(1);
        for (auto e : m.exponents)
            for (std::uint32_t k = 2; k <= e; ++k) weight *= Rational(static_cast<long>(k));
        std::vector<std::size_t> slot(d, 0);
        while (true) {
            std::vector<std::uint32_t> counts(4, 0);
            for (auto s : slot) ++counts[s];
            if (counts == m.exponents) {
                Rational prod(1);
                for (std::size_t k = 0; k < d; ++k) prod *= vs[k][slot[k]];
                total += c * weight * prod;
            }
            std::size_t k = 0;
            while (k < d && ++slot[k] == 4) slot[k++] = 0;
            if (k == d) break;
        }
    }
    return total;
}

}  // namespace

TEST(Fermat, Examples) {
    EXPECT_EQ(build_deformed_fermat(7, Rational(0)), parse_q("x1^7 + x2^7 + x3^7 + x4^7"));
    EXPECT_EQ(build_deformed_fermat(7, Rational(1)),
              parse_q("x1^7 + x2^7 + x3^7 + x4^7 + x1^2*x2^3*x3^2 + x1^4*x2*x4^2"));
    const auto f11 = build_deformed_fermat(11, Rational(2));
    EXPECT_EQ(f11.size(), 6u);
    for (const auto& [m, c] : f11.terms()) EXPECT_EQ(m.degree(), 11u);
    EXPECT_THROW(build_deformed_fermat(5, Rational(1)), Error);
    EXPECT_THROW(build_deformed_fermat(9, Rational(1)), Error);
}

TEST(Fermat, HomogeneousForEveryPrime) {
    for (unsigned p : {7u, 11u, 13u, 17u, 19u, 23u}) {
        const auto f = build_deformed_fermat(p, Rational(Integer(3), Integer(5)));
        for (const auto& [m, c] : f.terms()) EXPECT_EQ(m.degree(), p);
    }
}

TEST(Polynomial, PartialDerivative) {
    EXPECT_EQ(partial_derivative(parse_q("x1^7"), 0), parse_q("7*x1^6"));
    EXPECT_EQ(partial_derivative(parse_q("x1^2*x2^3*x3^2"), 2), parse_q("2*x1^2*x2^3*x3"));
    EXPECT_THROW(partial_derivative(parse_q("x1"), 4), Error);
}

TEST(Polynomial, LinearSubstitute) {
    const auto f = build_deformed_fermat(7, Rational(1));
    EXPECT_EQ(linear_substitute(f, RatMatrix::identity(4, Rational(0))), f);

    const unsigned p = 7;
    std::vector<CyclotomicNumber> diag;
    for (long k = 0; k < 4; ++k) diag.push_back(CyclotomicNumber::zeta_power(p, k));
    const auto D = Matrix<CyclotomicNumber>::diagonal(diag);
    const ZPoly fermat = lift_to_cyclotomic(build_deformed_fermat(7, Rational(0)), p);
    EXPECT_EQ(linear_substitute(fermat, D), fermat);
    const ZPoly f1 = lift_to_cyclotomic(f, p);
    EXPECT_EQ(linear_substitute(f1, D), f1);
    EXPECT_THROW(linear_substitute(f, RatMatrix::identity(3, Rational(0))), Error);
}

TEST(Polynomial, ScalarMultiple) {
    const auto f = build_deformed_fermat(7, Rational(1));
    EXPECT_EQ(is_scalar_multiple(f.scaled(Rational(3)), f), Rational(3));
    EXPECT_FALSE(is_scalar_multiple(f + parse_q("x1"), f).has_value());
    const QPoly zero(4, Rational(0));
    EXPECT_EQ(is_scalar_multiple(zero, zero), Rational(1));
    EXPECT_FALSE(is_scalar_multiple(f, zero).has_value());
}

TEST(Polynomial, HessianPairing) {
    const auto f = build_deformed_fermat(7, Rational(1));
    EXPECT_TRUE(hessian_pairing(f, unit(2), unit(3)).is_zero());
    const auto h11 = hessian_pairing(f, unit(0), unit(0));
    EXPECT_EQ(h11, partial_derivative(partial_derivative(f, 0), 0));
    EXPECT_EQ(coefficient_of(h11, Monomial({5, 0, 0, 0})), Rational(42));
}

TEST(Polynomial, MultilinearFormExamples) {
    const auto f = build_deformed_fermat(7, Rational(1));
    EXPECT_EQ(multilinear_form(f, std::vector<std::vector<Rational>>(7, unit(0))), Rational(5040));
    std::vector<std::vector<Rational>> args(6, unit(2));
    args.push_back(unit(0));
    EXPECT_EQ(multilinear_form(f, args), Rational(0));
    EXPECT_THROW(multilinear_form(f, std::vector<std::vector<Rational>>(3, unit(0))), Error);
}

TEST(Polynomial, MultilinearFormMatchesSlotOracle) {
    std::mt19937_64 rng(kSeed);
    const auto f = build_deformed_fermat(7, Rational(Integer(-5), Integer(3)));
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<Rational>> vs;
        for (int k = 0; k < 7; ++k) vs.push_back({small(rng), small(rng), small(rng), small(rng)});
        const Rational value = multilinear_form(f, vs);
        EXPECT_EQ(value, multilinear_oracle(f, vs));
        auto shuffled = vs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_EQ(multilinear_form(f, shuffled), value);
    }
}

TEST(Polynomial, MixedTopPartialMatchesCoefficients) {
    // p-1 copies of e_i and one e_j: nonzero exactly when x_i^{p-1} x_j appears (or i = j and x_i^p appears).
    const unsigned p = 7;
    const auto f = build_deformed_fermat(p, Rational(1));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<std::vector<Rational>> args(p - 1, unit(i));
            args.push_back(unit(j));
            Monomial m(4);
            m.exponents[i] += p - 1;
            m.exponents[j] += 1;
            EXPECT_EQ(multilinear_form(f, args).is_zero(), coefficient_of(f, m).is_zero()) << i << j;
        }
}

TEST(Polynomial, CoefficientOf) {
    const auto f = build_deformed_fermat(7, Rational(1));
    EXPECT_EQ(coefficient_of(f, Monomial({2, 3, 2, 0})), Rational(1));
    EXPECT_EQ(coefficient_of(f, Monomial({1, 1, 1, 4})), Rational(0));
    EXPECT_EQ(coefficient_of(parse_q("7*x1^6"), Monomial({6, 0, 0, 0})), Rational(7));
    EXPECT_THROW(coefficient_of(f, Monomial({1, 1})), Error);
}

TEST(Polynomial, EulerIdentitySeeded) {
    std::mt19937_64 rng(kSeed);
    std::vector<QPoly> corpus{build_deformed_fermat(7, Rational(1)), build_deformed_fermat(11, Rational(2))};
    for (int i = 0; i < 20; ++i) corpus.push_back(random_homogeneous(rng, 1 + static_cast<unsigned>(rng() % 8), 6));
    for (const auto& f : corpus) {
        QPoly lhs(4, Rational(0));
        for (std::size_t i = 0; i < 4; ++i) lhs += QPoly::variable(4, i, Rational(0)) * f.derivative(i);
        EXPECT_EQ(lhs, f.scaled(Rational(f.degree() < 0 ? 0 : f.degree())));
    }
}

TEST(Polynomial, SubstitutionFunctorialitySeeded) {
    std::mt19937_64 rng(kSeed + 3);
    for (int i = 0; i < 15; ++i) {
        const auto f = random_homogeneous(rng, 2 + static_cast<unsigned>(rng() % 4), 5);
        const auto M = random_matrix(rng), N = random_matrix(rng);
        EXPECT_EQ(linear_substitute(linear_substitute(f, M), N), linear_substitute(f, M * N));
    }
}

TEST(Polynomial, RingLaws) {
    std::mt19937_64 rng(kSeed + 4);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_homogeneous(rng, 3, 4), b = random_homogeneous(rng, 2, 4), c = random_homogeneous(rng, 2, 3);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b).derivative(1), a.derivative(1) * b + a * b.derivative(1));
        EXPECT_EQ(a.pow(3), a * a * a);
    }
}

TEST(PolynomialText, ParseAndRender) {
    const auto f = parse_q("x1^7 + x2^7");
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(render_polynomial(f), "x1^7 + x2^7");
    EXPECT_EQ(render_polynomial(parse_q("x2^7 + x1^7")), "x1^7 + x2^7");
    EXPECT_EQ(render_polynomial(parse_q("-x1*x2 + 3/2*x3^2 - x3^2 + 2")), "-x1*x2 + 1/2*x3^2 + 2");
    EXPECT_EQ(render_polynomial(QPoly(4, Rational(0))), "0");
    EXPECT_THROW(parse_q("x5^2"), ParseError);
    EXPECT_THROW(parse_q("x1^2 +"), ParseError);
    EXPECT_THROW(parse_q("x1 ** 2"), ParseError);
    try {
        parse_q("x1 + y2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.location(), "offset 5");
    }
}

TEST(PolynomialText, RoundTripSeeded) {
    std::mt19937_64 rng(kSeed + 5);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_homogeneous(rng, 1 + static_cast<unsigned>(rng() % 9), 6);
        const auto text = render_polynomial(f);
        EXPECT_EQ(parse_q(text), f) << text;
        EXPECT_EQ(render_polynomial(parse_q(text)), text);
    }
    const unsigned p = 7;
    const ZPoly g = parse_polynomial("(1 + z)*x1^7 - z^3*x2*x3^6 + 2*z^6*x4^7", 4, CyclotomicNumber::zero(p));
    EXPECT_EQ(parse_polynomial(render_polynomial(g), 4, CyclotomicNumber::zero(p)), g);
    EXPECT_EQ(coefficient_of(g, Monomial({0, 1, 6, 0})), -CyclotomicNumber::zeta_power(p, 3));
}
