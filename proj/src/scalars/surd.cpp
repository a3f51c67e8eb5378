#include "abelaut/scalars/surd.hpp"

#include "abelaut/detail/scanner.hpp"
#include "abelaut/error.hpp"

#include <numeric>

namespace abelaut {

Surd::Surd(const Rational& r) {
    if (!r.is_zero()) terms_.emplace(1, r);
}

Surd Surd::root(const Rational& c, std::uint64_t radicand) {
    if (radicand == 0) return Surd();
    Rational coeff = c;
    std::uint64_t rest = radicand;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
        while (rest % (d * d) == 0) {
            rest /= d * d;
            coeff *= Rational(static_cast<long>(d));
        }
    }
    Surd s;
    s.add_term(rest, coeff);
    return s;
}

void Surd::add_term(std::uint64_t radicand, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(radicand, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Surd::component(std::uint64_t radicand) const {
    const auto it = terms_.find(radicand);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Surd::is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Surd& Surd::operator+=(const Surd& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, c);
    return *this;
}

Surd& Surd::operator-=(const Surd& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, -c);
    return *this;
}

Surd& Surd::operator*=(const Surd& o) {
    Surd product;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            // a, b squarefree: sqrt(a) sqrt(b) = g sqrt((a/g)(b/g)) with g = gcd(a, b).
            const std::uint64_t g = std::gcd(a, b);
            product.add_term((a / g) * (b / g), ca * cb * Rational(static_cast<long>(g)));
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

Surd operator-(const Surd& a) {
    Surd r = a;
    for (auto& [radicand, c] : r.terms_) c = -c;
    return r;
}

std::string Surd::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [r, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (r == 1) {
            out += magnitude.to_string();
        } else {
            if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
            out += "sqrt(" + std::to_string(r) + ")";
        }
    }
    return out;
}

Surd Surd::parse(std::string_view text) {
    detail::Scanner in(text);
    Surd value;
    bool first = true;
    while (!in.at_end()) {
        int sign = 1;
        if (in.accept('-')) {
            sign = -1;
        } else if (!in.accept('+') && !first) {
            in.fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff(1);
        bool have_number = false;
        if (in.peek_digit()) {
            coeff = in.parse_rational_literal();
            have_number = true;
        }
        if (have_number && in.peek() == '*') in.expect('*');
        std::uint64_t radicand = 1;
        if (in.peek() == 's') {
            for (char c : std::string_view("sqrt")) in.expect(c);
            in.expect('(');
            radicand = in.parse_unsigned();
            in.expect(')');
        } else if (!have_number) {
            in.fail("expected a number or sqrt(r)");
        }
        value += Surd::root(sign > 0 ? coeff : -coeff, radicand);
    }
    if (first) in.fail("empty number");
    return value;
}

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.to_string(); }

}  // namespace abelaut
