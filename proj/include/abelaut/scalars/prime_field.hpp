#pragma once

#include "abelaut/scalars/rational.hpp"

#include <cstdint>
#include <ostream>

namespace abelaut {

// Element of F_q for a prime q < 2^31.
class PrimeFieldElement {
  public:
    PrimeFieldElement(std::uint32_t q, std::int64_t value);
    // Reduction of a rational; throws bad-reduction when q divides the denominator.
    static PrimeFieldElement from_rational(std::uint32_t q, const Rational& r);

    std::uint32_t modulus() const noexcept { return q_; }
    std::uint32_t value() const noexcept { return v_; }

    PrimeFieldElement& operator+=(const PrimeFieldElement& o) {
        check(o);
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) + o.v_) % q_);
        return *this;
    }
    PrimeFieldElement& operator-=(const PrimeFieldElement& o) {
        check(o);
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) + q_ - o.v_) % q_);
        return *this;
    }
    PrimeFieldElement& operator*=(const PrimeFieldElement& o) {
        check(o);
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % q_);
        return *this;
    }
    PrimeFieldElement& operator/=(const PrimeFieldElement& o) { return *this *= o.inverse(); }

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
    friend PrimeFieldElement operator-(const PrimeFieldElement& a) {
        return PrimeFieldElement(a.q_, a.v_ == 0 ? 0 : static_cast<std::int64_t>(a.q_ - a.v_));
    }
    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a.q_ == b.q_ && a.v_ == b.v_;
    }

    bool is_zero() const noexcept { return v_ == 0; }
    PrimeFieldElement pow(std::uint64_t e) const;
    PrimeFieldElement inverse() const;

  private:
    void check(const PrimeFieldElement& o) const;

    std::uint32_t q_;
    std::uint32_t v_;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x);

inline bool is_zero(const PrimeFieldElement& x) { return x.is_zero(); }
inline PrimeFieldElement zero_like(const PrimeFieldElement& x) { return PrimeFieldElement(x.modulus(), 0); }
inline PrimeFieldElement one_like(const PrimeFieldElement& x) { return PrimeFieldElement(x.modulus(), 1); }
inline PrimeFieldElement from_int_like(const PrimeFieldElement& x, long n) { return PrimeFieldElement(x.modulus(), n); }

}  // namespace abelaut
