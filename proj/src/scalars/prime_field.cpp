#include "abelaut/scalars/prime_field.hpp"

#include "abelaut/error.hpp"

namespace abelaut {

PrimeFieldElement::PrimeFieldElement(std::uint32_t q, std::int64_t value) : q_(q) {
    if (q < 2 || q >= (1U << 31) || !is_prime(q)) {
        throw Error(ErrorKind::domain_error, "modulus " + std::to_string(q) + " is not a supported prime");
    }
    const auto sq = static_cast<std::int64_t>(q);
    v_ = static_cast<std::uint32_t>(((value % sq) + sq) % sq);
}

PrimeFieldElement PrimeFieldElement::from_rational(std::uint32_t q, const Rational& r) {
    const Integer den_mod = Integer::mod(r.denominator(), Integer(static_cast<long>(q)));
    if (den_mod.is_zero()) {
        throw Error(ErrorKind::bad_reduction, std::to_string(q) + " divides the denominator of " + r.to_string());
    }
    const Integer num_mod = Integer::mod(r.numerator(), Integer(static_cast<long>(q)));
    return PrimeFieldElement(q, num_mod.to_long()) / PrimeFieldElement(q, den_mod.to_long());
}

void PrimeFieldElement::check(const PrimeFieldElement& o) const {
    if (q_ != o.q_) throw Error(ErrorKind::domain_error, "mixing prime fields");
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
    std::uint64_t result = 1 % q_;
    std::uint64_t base = v_;
    while (e > 0) {
        if (e & 1U) result = result * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return PrimeFieldElement(q_, static_cast<std::int64_t>(result));
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    if (v_ == 0) throw Error(ErrorKind::domain_error, "inverse of zero in F_" + std::to_string(q_));
    return pow(q_ - 2);
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) { return os << x.value(); }

}  // namespace abelaut
