#include "abelaut/scalars/rational.hpp"

#include "abelaut/error.hpp"

#include <cctype>

namespace abelaut {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(s);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw Error(ErrorKind::domain_error, "zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s)) throw ParseError("malformed rational '" + std::string(text) + "'", "rational");
        return Rational(integer_literal(s));
    }
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("malformed rational '" + std::string(text) + "'", "rational");
    }
    const Integer d = integer_literal(den);
    if (d.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'", "rational");
    return Rational(integer_literal(num), d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::domain_error, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::domain_error, "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Integer Rational::floor() const {
    return Integer::floor_div(numerator(), denominator());
}

Rational Rational::fractional() const {
    return *this - Rational(floor());
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace abelaut
