#include "abelaut/surface/orthogonality.hpp"

#include "abelaut/poly/fermat.hpp"
#include "abelaut/poly/text.hpp"
#include "abelaut/scalars/rational.hpp"

namespace abelaut {

namespace {

// Coefficient ring Q[lambda, a1..a4, b1..b4]; variable 0 is lambda.
using Symbolic = SparsePolynomial<Rational>;
constexpr std::size_t kSymbols = 9;

Symbolic sym(std::size_t i) { return Symbolic::variable(kSymbols, i, Rational(0)); }
Symbolic lam() { return sym(0); }
Symbolic a(std::size_t i) { return sym(i); }      // i in 1..4
Symbolic b(std::size_t i) { return sym(4 + i); }  // i in 1..4
Symbolic num(long n) { return Symbolic::constant(kSymbols, Rational(n)); }

Monomial x(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3, std::uint32_t e4) { return Monomial({e1, e2, e3, e4}); }

IdentityCheck expect_equal(std::string name, const Symbolic& got, const Symbolic& want) {
    IdentityCheck c{std::move(name), got == want, {}};
    c.detail = "got " + render_polynomial(got) + ", expected " + render_polynomial(want);
    return c;
}

}  // namespace

OrthogonalityIdentityReport verify_orthogonality_coefficient_identities(unsigned p) {
    require_surface_degree(p);
    const long P = p;
    const auto f = build_deformed_fermat<Symbolic>(p, lam());
    const std::vector<Symbolic> av{a(1), a(2), a(3), a(4)};
    const std::vector<Symbolic> bv{b(1), b(2), b(3), b(4)};
    const auto pairing = hessian_pairing(f, av, bv);
    const auto h = hessian(f);

    OrthogonalityIdentityReport report;
    report.p = p;

    for (std::size_t i = 0; i < 4; ++i) {
        Monomial m(4);
        m.exponents[i] = p - 2;
        const auto coeff = coefficient_of(pairing, m);
        const auto product = a(i + 1) * b(i + 1);
        const auto factor = is_scalar_multiple(coeff, product);
        IdentityCheck c{"x" + std::to_string(i + 1) + "^(p-2) coefficient is a nonzero multiple of a" +
                            std::to_string(i + 1) + "*b" + std::to_string(i + 1),
                        factor.has_value() && !coeff.is_zero() && *factor == Rational(P * (P - 1)),
                        "coefficient " + render_polynomial(coeff)};
        report.checks.push_back(std::move(c));

        bool only_diagonal = true;
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                if ((j != i || k != i) && !coefficient_of(h[j][k], m).is_zero()) only_diagonal = false;
        report.checks.push_back({"only H" + std::to_string(i + 1) + std::to_string(i + 1) + " involves x" +
                                     std::to_string(i + 1) + "^(p-2)",
                                 only_diagonal, {}});
    }

    const auto u = static_cast<std::uint32_t>(p);
    report.checks.push_back(expect_equal("x1*x2^(p-5)*x3^2 coefficient", coefficient_of(pairing, x(1, u - 5, 2, 0)),
                                         num(2 * (P - 4)) * lam() * (a(2) * b(1) + a(1) * b(2))));
    report.checks.push_back(expect_equal("x1*x2^(p-4)*x3 coefficient", coefficient_of(pairing, x(1, u - 4, 1, 0)),
                                         num(4) * lam() * (a(3) * b(1) + a(1) * b(3))));
    report.checks.push_back(expect_equal("x1^3*x2^(p-6)*x4 coefficient", coefficient_of(pairing, x(3, u - 6, 0, 1)),
                                         num(8) * lam() * (a(4) * b(1) + a(1) * b(4))));
    report.checks.push_back(expect_equal("x1^2*x2^(p-5)*x3 coefficient", coefficient_of(pairing, x(2, u - 5, 1, 0)),
                                         num(2 * (P - 4)) * lam() * (a(3) * b(2) + a(2) * b(3))));
    report.checks.push_back(expect_equal("x1^4*x2^(p-7)*x4 coefficient", coefficient_of(pairing, x(4, u - 7, 0, 1)),
                                         num(2 * (P - 6)) * lam() * (a(4) * b(2) + a(2) * b(4))));
    return report;
}

}  // namespace abelaut
