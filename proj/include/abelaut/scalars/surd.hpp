#pragma once

#include "abelaut/scalars/rational.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace abelaut {

// Exact real number sum_r c_r * sqrt(r) over squarefree radicands r >= 1.
// 
// Used for complex-structure matrices: a torus whose J is rational can only
// carry CM by Q(i), so e.g. the Z[zeta_6] curve needs J = (2W + 1)/sqrt(3).
// Square roots of distinct squarefree integers are linearly independent over
// Q, which makes the radicand-indexed coefficients a canonical form.
class Surd {
  public:
    Surd() = default;
    Surd(long n) : Surd(Rational(n)) {}
    Surd(int n) : Surd(Rational(n)) {}
    Surd(const Rational& r);
    // c * sqrt(radicand); square factors of the radicand are pulled out.
    static Surd root(const Rational& c, std::uint64_t radicand);
    // Grammar: terms "c", "c*sqrt(r)" or "sqrt(r)" joined by + and -.
    static Surd parse(std::string_view text);

    // Radicand -> nonzero coefficient, radicand 1 is the rational part.
    const std::map<std::uint64_t, Rational>& components() const noexcept { return terms_; }
    Rational component(std::uint64_t radicand) const;
    bool is_rational() const noexcept;
    bool is_zero() const noexcept { return terms_.empty(); }

    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);

    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
    friend Surd operator-(const Surd& a);
    friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

  private:
    void add_term(std::uint64_t radicand, const Rational& c);

    std::map<std::uint64_t, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Surd& x);

inline bool is_zero(const Surd& x) { return x.is_zero(); }
inline Surd zero_like(const Surd&) { return Surd(); }
inline Surd one_like(const Surd&) { return Surd(1); }
inline Surd from_int_like(const Surd&, long n) { return Surd(n); }

}  // namespace abelaut
