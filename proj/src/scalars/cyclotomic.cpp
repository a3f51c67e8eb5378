#include "abelaut/scalars/cyclotomic.hpp"

#include "abelaut/detail/scanner.hpp"
#include "abelaut/error.hpp"

namespace abelaut {

namespace {

// Reduces a length-p vector over exponents 0..p-1 in place and drops the top slot.
std::vector<Rational> eliminate_top(std::vector<Rational> full) {
    const Rational top = full.back();
    full.pop_back();
    if (!top.is_zero()) {
        for (auto& c : full) c -= top;
    }
    return full;
}

}  // namespace

void validate_conductor(unsigned p, unsigned max_conductor) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw Error(ErrorKind::invalid_conductor, "conductor " + std::to_string(p) + " is not an odd prime");
    }
    if (p > max_conductor) {
        throw Error(ErrorKind::invalid_conductor,
                    "conductor " + std::to_string(p) + " exceeds bound " + std::to_string(max_conductor));
    }
}

CyclotomicNumber::CyclotomicNumber(unsigned p, const Rational& r) : p_(p) {
    validate_conductor(p);
    coeffs_.assign(p - 1, Rational(0));
    coeffs_[0] = r;
}

CyclotomicNumber CyclotomicNumber::zeta_power(unsigned p, long k) {
    validate_conductor(p);
    const long sp = static_cast<long>(p);
    const auto e = static_cast<std::size_t>(((k % sp) + sp) % sp);
    std::vector<Rational> full(p, Rational(0));
    full[e] = Rational(1);
    return CyclotomicNumber(p, eliminate_top(std::move(full)));
}

CyclotomicNumber CyclotomicNumber::normalize(unsigned p, std::span<const Rational> raw, unsigned max_conductor) {
    validate_conductor(p, max_conductor);
    std::vector<Rational> full(p, Rational(0));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!raw[i].is_zero()) full[i % p] += raw[i];
    }
    return CyclotomicNumber(p, eliminate_top(std::move(full)));
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const {
    if (p_ != o.p_) {
        throw Error(ErrorKind::invalid_conductor,
                    "mixing conductors " + std::to_string(p_) + " and " + std::to_string(o.p_));
    }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    check_same_field(o);
    std::vector<Rational> full(p_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            full[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = eliminate_top(std::move(full));
    return *this;
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
    CyclotomicNumber r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool CyclotomicNumber::is_zero() const noexcept {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CyclotomicNumber::is_rational() const noexcept {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

CyclotomicNumber CyclotomicNumber::galois(unsigned k) const {
    if (k % p_ == 0) throw Error(ErrorKind::domain_error, "z -> z^0 is not a field automorphism");
    std::vector<Rational> full(p_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) full[(i * k) % p_] += coeffs_[i];
    }
    return CyclotomicNumber(p_, eliminate_top(std::move(full)));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw Error(ErrorKind::domain_error, "inverse of zero in Q(zeta_" + std::to_string(p_) + ")");
    CyclotomicNumber conjugates = one(p_);
    for (unsigned k = 2; k < p_; ++k) conjugates *= galois(k);
    const CyclotomicNumber norm = *this * conjugates;
    if (!norm.is_rational()) throw Error(ErrorKind::inconsistency, "field norm is not rational");
    const Rational inv = norm.coeffs_[0].inverse();
    for (auto& c : conjugates.coeffs_) c *= inv;
    return conjugates;
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long e) const {
    CyclotomicNumber result = one(p_);
    CyclotomicNumber base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::optional<unsigned> CyclotomicNumber::zeta_exponent() const {
    // z^j for j <= p-2 is a unit vector; z^{p-1} = -(1 + z + ... + z^{p-2}).
    bool all_minus_one = true;
    std::size_t nonzero = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != Rational(-1)) all_minus_one = false;
        if (!coeffs_[i].is_zero()) {
            ++nonzero;
            last = i;
        }
    }
    if (all_minus_one) return p_ - 1;
    if (nonzero == 1 && coeffs_[last] == Rational(1)) return static_cast<unsigned>(last);
    return std::nullopt;
}

std::optional<unsigned> CyclotomicNumber::root_of_unity_order() const {
    if (auto j = zeta_exponent()) return *j == 0 ? 1U : p_;
    if (auto j = (-*this).zeta_exponent()) return *j == 0 ? 2U : 2 * p_;
    return std::nullopt;
}

std::optional<unsigned> is_root_of_unity(const CyclotomicNumber& x) { return x.root_of_unity_order(); }

std::string CyclotomicNumber::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += magnitude.to_string();
            continue;
        }
        if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

CyclotomicNumber CyclotomicNumber::parse(unsigned p, std::string_view text) {
    detail::Scanner in(text);
    CyclotomicNumber value = detail::parse_cyclotomic(in, p);
    if (!in.at_end()) in.fail("unexpected trailing input");
    return value;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

namespace detail {

CyclotomicNumber parse_cyclotomic(Scanner& in, unsigned p) {
    validate_conductor(p);
    std::vector<Rational> raw;
    bool first = true;
    while (true) {
        int sign = 1;
        if (in.accept('-')) {
            sign = -1;
        } else if (!in.accept('+') && !first) {
            break;
        }
        first = false;
        Rational coeff(1);
        bool have_number = false;
        if (in.peek_digit()) {
            coeff = in.parse_rational_literal();
            have_number = true;
        }
        unsigned long exponent = 0;
        if (have_number && in.peek() == '*') in.expect('*');
        if (in.accept('z')) {
            exponent = 1;
            if (in.accept('^')) exponent = in.parse_unsigned();
        } else if (!have_number) {
            in.fail("expected a coefficient or z");
        }
        if (raw.size() <= exponent) raw.resize(exponent + 1, Rational(0));
        raw[exponent] += sign > 0 ? coeff : -coeff;
        const char next = in.peek();
        if (next != '+' && next != '-') break;
    }
    return CyclotomicNumber::normalize(p, raw);
}

}  // namespace detail

}  // namespace abelaut
