#pragma once

#include "abelaut/detail/scanner.hpp"
#include "abelaut/poly/sparse_polynomial.hpp"
#include "abelaut/scalars/cyclotomic.hpp"
#include "abelaut/scalars/rational.hpp"

#include <string>
#include <string_view>

namespace abelaut {

// Polynomial text grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'x'<index>['^'<exp>] | ring atom
// Indices are 1-based in text. Rendering is canonical (grlex, coefficients
// of +-1 omitted on non-constant terms) and parse(render(f)) == f.

template <class R>
struct CoefficientCodec;

struct RenderedCoefficient {
    bool negative = false;
    bool is_one = false;      // magnitude is exactly 1
    std::string magnitude;    // already parenthesised when it is a sum
};

template <>
struct CoefficientCodec<Rational> {
    static Rational from_rational(const Rational&, const Rational& r) { return r; }
    static bool parse_atom(detail::Scanner&, const Rational&, Rational&) { return false; }
    static RenderedCoefficient render(const Rational& c) {
        const bool negative = c.sign() < 0;
        const Rational m = negative ? -c : c;
        return {negative, m == Rational(1), m.to_string()};
    }
};

template <>
struct CoefficientCodec<CyclotomicNumber> {
    static CyclotomicNumber from_rational(const CyclotomicNumber& ctx, const Rational& r) {
        return CyclotomicNumber(ctx.conductor(), r);
    }
    static bool parse_atom(detail::Scanner& in, const CyclotomicNumber& ctx, CyclotomicNumber& out) {
        const unsigned p = ctx.conductor();
        if (in.accept('z')) {
            unsigned long e = 1;
            if (in.accept('^')) e = in.parse_unsigned();
            out = CyclotomicNumber::zeta_power(p, static_cast<long>(e % p));
            return true;
        }
        if (in.accept('(')) {
            out = detail::parse_cyclotomic(in, p);
            in.expect(')');
            return true;
        }
        return false;
    }
    static RenderedCoefficient render(const CyclotomicNumber& c) {
        std::size_t nonzero = 0;
        std::size_t index = 0;
        for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
            if (!c.coefficients()[i].is_zero()) {
                ++nonzero;
                index = i;
            }
        }
        if (nonzero == 1) {
            const Rational& r = c.coefficients()[index];
            const bool negative = r.sign() < 0;
            const Rational m = negative ? -r : r;
            if (index == 0) return {negative, m == Rational(1), m.to_string()};
            std::string zpow = index == 1 ? "z" : "z^" + std::to_string(index);
            return {negative, false, m == Rational(1) ? zpow : m.to_string() + "*" + zpow};
        }
        return {false, false, "(" + c.to_string() + ")"};
    }
};

template <class R>
std::string render_polynomial(const SparsePolynomial<R>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : f.terms()) {
        const RenderedCoefficient rc = CoefficientCodec<R>::render(c);
        if (out.empty()) {
            if (rc.negative) out += "-";
        } else {
            out += rc.negative ? " - " : " + ";
        }
        std::string powers;
        for (std::size_t i = 0; i < mono.arity(); ++i) {
            if (mono[i] == 0) continue;
            if (!powers.empty()) powers += "*";
            powers += "x" + std::to_string(i + 1);
            if (mono[i] > 1) powers += "^" + std::to_string(mono[i]);
        }
        if (powers.empty()) {
            out += rc.magnitude;
        } else if (rc.is_one) {
            out += powers;
        } else {
            out += rc.magnitude + "*" + powers;
        }
    }
    return out;
}

// Parses a polynomial in `arity` variables; `coefficient_zero` supplies the ring context.
template <class R>
SparsePolynomial<R> parse_polynomial(std::string_view text, std::size_t arity, const R& coefficient_zero) {
    using Codec = CoefficientCodec<R>;
    detail::Scanner in(text);
    SparsePolynomial<R> f(arity, coefficient_zero);
    const R one = one_like(coefficient_zero);
    bool first = true;
    while (true) {
        int sign = 1;
        if (in.accept('-')) {
            sign = -1;
        } else if (!in.accept('+') && !first) {
            break;
        }
        first = false;
        R coeff = one;
        Monomial mono(arity);
        bool more = true;
        while (more) {
            R atom = coefficient_zero;
            if (in.peek_digit()) {
                coeff = coeff * Codec::from_rational(coefficient_zero, in.parse_rational_literal());
            } else if (in.accept('x')) {
                const unsigned long index = in.parse_unsigned();
                if (index < 1 || index > arity) in.fail("variable x" + std::to_string(index) + " outside arity");
                unsigned long e = 1;
                if (in.accept('^')) e = in.parse_unsigned();
                mono.exponents[index - 1] += static_cast<std::uint32_t>(e);
            } else if (Codec::parse_atom(in, coefficient_zero, atom)) {
                coeff = coeff * atom;
            } else {
                in.fail("expected a factor");
            }
            more = in.accept('*');
        }
        f.add_term(mono, sign > 0 ? coeff : -coeff);
        const char next = in.peek();
        if (next != '+' && next != '-') break;
    }
    if (!in.at_end()) in.fail("unexpected trailing input");
    return f;
}

}  // namespace abelaut
