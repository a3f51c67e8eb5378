#pragma once

#include "abelaut/error.hpp"
#include "abelaut/poly/sparse_polynomial.hpp"
#include "abelaut/scalars/cyclotomic.hpp"
#include "abelaut/scalars/integer.hpp"
#include "abelaut/scalars/rational.hpp"

#include <string>

namespace abelaut {

inline void require_surface_degree(unsigned p) {
    if (p < 7 || !is_prime(p)) {
        throw Error(ErrorKind::unsupported_degree,
                    "the deformed Fermat family needs a prime degree p >= 7, got " + std::to_string(p));
    }
}

// x1^p + x2^p + x3^p + x4^p + lambda (x1^2 x2^{p-4} x3^2 + x1^4 x2^{p-6} x4^2)
// over any ring; lambda carries the ring context (it may be symbolic).
template <class R>
SparsePolynomial<R> build_deformed_fermat(unsigned p, const R& lambda) {
    require_surface_degree(p);
    SparsePolynomial<R> f(4, zero_like(lambda));
    const R one = one_like(lambda);
    for (std::size_t i = 0; i < 4; ++i) {
        Monomial m(4);
        m.exponents[i] = p;
        f.add_term(m, one);
    }
    f.add_term(Monomial({2, p - 4, 2, 0}), lambda);
    f.add_term(Monomial({4, p - 6, 0, 2}), lambda);
    return f;
}

inline SparsePolynomial<Rational> build_deformed_fermat(unsigned p, const Rational& lambda) {
    return build_deformed_fermat<Rational>(p, lambda);
}

// Same polynomial with coefficients in Q(zeta_p).
inline SparsePolynomial<CyclotomicNumber> lift_to_cyclotomic(const SparsePolynomial<Rational>& f, unsigned p) {
    return f.map_coefficients([p](const Rational& c) { return CyclotomicNumber(p, c); }, CyclotomicNumber::zero(p));
}

}  // namespace abelaut
