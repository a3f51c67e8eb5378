#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace abelaut {

// Arbitrary-precision integer. Thin value wrapper over GMP so generic code
// never sees gmpxx expression templates.
class Integer {
  public:
    Integer() = default;
    Integer(long v) : v_(v) {}
    Integer(int v) : v_(v) {}
    Integer(long long v);
    explicit Integer(const mpz_class& v) : v_(v) {}
    explicit Integer(std::string_view decimal);

    const mpz_class& raw() const noexcept { return v_; }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool fits_long() const noexcept { return v_.fits_slong_p(); }
    long to_long() const;
    std::string to_string() const { return v_.get_str(); }

    // Floor division and the matching non-negative remainder for positive divisors.
    static Integer floor_div(const Integer& a, const Integer& b);
    static Integer mod(const Integer& a, const Integer& b);
    // Exact division; throws if b does not divide a.
    static Integer exact_div(const Integer& a, const Integer& b);

    friend Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.v_))); }
    friend Integer gcd(const Integer& a, const Integer& b);
    friend Integer lcm(const Integer& a, const Integer& b);

  private:
    mpz_class v_;
};

// Extended gcd: returns g = gcd(a,b) >= 0 with g = s*a + t*b.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

std::ostream& operator<<(std::ostream& os, const Integer& x);

inline bool is_zero(const Integer& x) { return x.is_zero(); }
inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Integer from_int_like(const Integer&, long n) { return Integer(n); }

bool is_prime(std::uint64_t n) noexcept;

}  // namespace abelaut
