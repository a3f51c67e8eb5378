#pragma once

#include "abelaut/scalars/integer.hpp"

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace abelaut {

// Exact rational number, always stored in lowest terms with positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(const Integer& n) : v_(n.raw()) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "a" or "a/b" with optional sign and surrounding whitespace.
    static Rational parse(std::string_view text);

    Integer numerator() const { return Integer(v_.get_num()); }
    Integer denominator() const { return Integer(v_.get_den()); }
    const mpq_class& raw() const noexcept { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Rational inverse() const;
    Integer floor() const;
    // Fractional part in [0, 1).
    Rational fractional() const;

    // "a" when the denominator is 1, otherwise "a/b".
    std::string to_string() const;

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, long n) { return Rational(n); }

}  // namespace abelaut
