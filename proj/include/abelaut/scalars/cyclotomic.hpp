#pragma once

#include "abelaut/scalars/rational.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelaut {

namespace detail {
class Scanner;
}

inline constexpr unsigned kDefaultMaxConductor = 31;

// Throws invalid-conductor unless p is an odd prime not exceeding max_conductor.
void validate_conductor(unsigned p, unsigned max_conductor = kDefaultMaxConductor);

// Element of Q(zeta_p) in the power basis 1, z, ..., z^{p-2}, z = zeta_p.
// 
// Every value is kept canonical: the stored vector has exactly p-1 entries and
// z^{p-1} has already been eliminated through 1 + z + ... + z^{p-1} = 0, so
// equality of values is equality of coefficient vectors.
class CyclotomicNumber {
  public:
    CyclotomicNumber(unsigned p, const Rational& r);

    static CyclotomicNumber zero(unsigned p) { return CyclotomicNumber(p, Rational(0)); }
    static CyclotomicNumber one(unsigned p) { return CyclotomicNumber(p, Rational(1)); }
    // z^k for any integer k (negative exponents allowed).
    static CyclotomicNumber zeta_power(unsigned p, long k);
    // Canonical representative of sum raw[i] z^i; raw may have any length.
    static CyclotomicNumber normalize(unsigned p, std::span<const Rational> raw,
                                      unsigned max_conductor = kDefaultMaxConductor);
    // Parses "a0 + a1*z + a2*z^2 ..." (exponents may be >= p-1; they get reduced).
    static CyclotomicNumber parse(unsigned p, std::string_view text);

    unsigned conductor() const noexcept { return p_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a);

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    // Multiplicative inverse as the product of the nontrivial Galois conjugates over the norm.
    CyclotomicNumber inverse() const;
    // Image under z -> z^k.
    CyclotomicNumber galois(unsigned k) const;
    CyclotomicNumber pow(unsigned long e) const;

    // Smallest k >= 1 with x^k = 1, if x is a root of unity. For odd p the
    // roots of unity in Q(zeta_p) are +-z^j, so k is one of 1, 2, p, 2p.
    std::optional<unsigned> root_of_unity_order() const;
    // The j in [0, p) with x = z^j, if any.
    std::optional<unsigned> zeta_exponent() const;

    std::string to_string() const;

  private:
    CyclotomicNumber(unsigned p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}
    void check_same_field(const CyclotomicNumber& o) const;

    unsigned p_;
    std::vector<Rational> coeffs_;
};

std::optional<unsigned> is_root_of_unity(const CyclotomicNumber& x);

namespace detail {
// Parses a cyclotomic sum at the cursor, stopping before ')' or end of input.
CyclotomicNumber parse_cyclotomic(Scanner& in, unsigned p);
}  // namespace detail

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
inline CyclotomicNumber zero_like(const CyclotomicNumber& x) { return CyclotomicNumber::zero(x.conductor()); }
inline CyclotomicNumber one_like(const CyclotomicNumber& x) { return CyclotomicNumber::one(x.conductor()); }
inline CyclotomicNumber from_int_like(const CyclotomicNumber& x, long n) {
    return CyclotomicNumber(x.conductor(), Rational(n));
}

}  // namespace abelaut
