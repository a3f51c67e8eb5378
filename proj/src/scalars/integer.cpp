#include "abelaut/scalars/integer.hpp"

#include "abelaut/error.hpp"

namespace abelaut {

Integer::Integer(long long v) {
    v_ = std::to_string(v);
}

Integer::Integer(std::string_view decimal) {
    if (v_.set_str(std::string(decimal), 10) != 0) {
        throw ParseError("invalid integer literal '" + std::string(decimal) + "'", "integer");
    }
}

long Integer::to_long() const {
    if (!fits_long()) throw Error(ErrorKind::domain_error, "integer " + to_string() + " does not fit in long");
    return v_.get_si();
}

Integer Integer::floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw Error(ErrorKind::domain_error, "division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(q);
}

Integer Integer::mod(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw Error(ErrorKind::domain_error, "modulus zero");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(r);
}

Integer Integer::exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw Error(ErrorKind::domain_error, "division by zero");
    if (!mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t())) {
        throw Error(ErrorKind::domain_error, b.to_string() + " does not divide " + a.to_string());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(l);
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
    mpz_class g, ss, tt;
    mpz_gcdext(g.get_mpz_t(), ss.get_mpz_t(), tt.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    s = Integer(ss);
    t = Integer(tt);
    return Integer(g);
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace abelaut
