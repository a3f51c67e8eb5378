#pragma once

#include "abelaut/error.hpp"
#include "abelaut/linalg/matrix.hpp"
#include "abelaut/poly/monomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abelaut {

namespace detail {
// Member is_zero() hides the free ring hook inside the class; this finds it by ADL.
template <class T>
bool ring_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

// Multivariate polynomial over an exact ring R, stored as a sparse map from
// exponent vectors to nonzero coefficients in graded-lex (descending) order.
// 
// The polynomial keeps a zero of R so that constants can be created with the
// right context (conductor, modulus, nested arity) even when it has no terms.
// Variables are indexed from 0.
template <class R>
class SparsePolynomial {
  public:
    using Terms = std::map<Monomial, R, GrlexDescending>;

    SparsePolynomial(std::size_t arity, const R& coefficient_zero) : arity_(arity), zero_(zero_like(coefficient_zero)) {}

    static SparsePolynomial constant(std::size_t arity, const R& c) {
        SparsePolynomial p(arity, c);
        p.add_term(Monomial(arity), c);
        return p;
    }
    static SparsePolynomial variable(std::size_t arity, std::size_t i, const R& sample) {
        check_index(arity, i);
        SparsePolynomial p(arity, sample);
        Monomial m(arity);
        m.exponents[i] = 1;
        p.add_term(std::move(m), one_like(sample));
        return p;
    }
    static SparsePolynomial term(const Monomial& m, const R& c) {
        SparsePolynomial p(m.arity(), c);
        p.add_term(m, c);
        return p;
    }

    std::size_t arity() const noexcept { return arity_; }
    const R& coefficient_zero() const noexcept { return zero_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Adds c * m, dropping the entry if it cancels.
    void add_term(const Monomial& m, const R& c) {
        if (m.arity() != arity_) throw Error(ErrorKind::arity_mismatch, "monomial arity differs from polynomial");
        if (detail::ring_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    R coefficient(const Monomial& m) const {
        if (m.arity() != arity_) throw Error(ErrorKind::arity_mismatch, "monomial arity differs from polynomial");
        const auto it = terms_.find(m);
        return it == terms_.end() ? zero_ : it->second;
    }

    // Total degree; -1 for the zero polynomial.
    long degree() const noexcept {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.degree()));
        return d;
    }
    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        const auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator-(const SparsePolynomial& a) {
        SparsePolynomial r(a.arity_, a.zero_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_arity(b);
        SparsePolynomial r(a.arity_, a.zero_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    // Coefficient-wise scaling s * f.
    SparsePolynomial scaled(const R& s) const {
        SparsePolynomial r(arity_, zero_);
        if (detail::ring_is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, s * c);
        return r;
    }

    SparsePolynomial pow(unsigned e) const {
        SparsePolynomial result = constant(arity_, one_like(zero_));
        SparsePolynomial base = *this;
        while (e > 0) {
            if (e & 1U) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    // Formal partial derivative with respect to variable i.
    SparsePolynomial derivative(std::size_t i) const {
        check_index(arity_, i);
        SparsePolynomial r(arity_, zero_);
        for (const auto& [m, c] : terms_) {
            const auto e = m.exponents[i];
            if (e == 0) continue;
            Monomial dm = m;
            dm.exponents[i] = e - 1;
            r.add_term(dm, from_int_like(zero_, static_cast<long>(e)) * c);
        }
        return r;
    }

    // Directional derivative sum_i u_i * d/dx_i.
    SparsePolynomial directional_derivative(const std::vector<R>& u) const {
        if (u.size() != arity_) throw Error(ErrorKind::arity_mismatch, "direction length differs from arity");
        SparsePolynomial r(arity_, zero_);
        for (std::size_t i = 0; i < arity_; ++i) {
            if (detail::ring_is_zero(u[i])) continue;
            r += derivative(i).scaled(u[i]);
        }
        return r;
    }

    R evaluate(const std::vector<R>& point) const {
        if (point.size() != arity_) throw Error(ErrorKind::arity_mismatch, "point length differs from arity");
        R total = zero_;
        for (const auto& [m, c] : terms_) {
            R value = c;
            for (std::size_t i = 0; i < arity_; ++i) {
                for (std::uint32_t k = 0; k < m.exponents[i]; ++k) value = value * point[i];
            }
            total += value;
        }
        return total;
    }

    // Constant term as a scalar (zero when absent).
    R constant_term() const { return coefficient(Monomial(arity_)); }

    template <class S, class F>
    SparsePolynomial<S> map_coefficients(F&& f, const S& new_zero) const {
        SparsePolynomial<S> r(arity_, new_zero);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

  private:
    static void check_index(std::size_t arity, std::size_t i) {
        if (i >= arity) {
            throw Error(ErrorKind::index_out_of_range,
                        "variable index " + std::to_string(i) + " outside arity " + std::to_string(arity));
        }
    }
    void check_arity(const SparsePolynomial& o) const {
        if (arity_ != o.arity_) throw Error(ErrorKind::arity_mismatch, "polynomials of different arity");
    }

    std::size_t arity_;
    R zero_;
    Terms terms_;
};

// Ring hooks so polynomials can themselves be coefficients (symbolic vectors).
template <class R>
bool is_zero(const SparsePolynomial<R>& f) {
    return f.is_zero();
}
template <class R>
SparsePolynomial<R> zero_like(const SparsePolynomial<R>& f) {
    return SparsePolynomial<R>(f.arity(), f.coefficient_zero());
}
template <class R>
SparsePolynomial<R> one_like(const SparsePolynomial<R>& f) {
    return SparsePolynomial<R>::constant(f.arity(), one_like(f.coefficient_zero()));
}
template <class R>
SparsePolynomial<R> from_int_like(const SparsePolynomial<R>& f, long n) {
    return SparsePolynomial<R>::constant(f.arity(), from_int_like(f.coefficient_zero(), n));
}

// Coefficient of m in f, zero when absent.
template <class R>
R coefficient_of(const SparsePolynomial<R>& f, const Monomial& m) {
    return f.coefficient(m);
}

template <class R>
SparsePolynomial<R> partial_derivative(const SparsePolynomial<R>& f, std::size_t i) {
    return f.derivative(i);
}

// f(M x): variable x_i is replaced by the linear form sum_j M(i, j) x_j.
template <class R>
SparsePolynomial<R> linear_substitute(const SparsePolynomial<R>& f, const Matrix<R>& m) {
    const std::size_t n = f.arity();
    if (m.rows() != n || m.cols() != n) {
        throw Error(ErrorKind::arity_mismatch, "substitution matrix is " + std::to_string(m.rows()) + "x" +
                                                   std::to_string(m.cols()) + " for arity " + std::to_string(n));
    }
    using Poly = SparsePolynomial<R>;
    std::vector<Poly> forms;
    forms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly form(n, f.coefficient_zero());
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(m(i, j))) continue;
            Monomial mono(n);
            mono.exponents[j] = 1;
            form.add_term(mono, m(i, j));
        }
        forms.push_back(std::move(form));
    }
    // powers[i][e] = forms[i]^e, filled on demand.
    std::vector<std::vector<Poly>> powers(n);
    auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(n, one_like(f.coefficient_zero())));
        while (cache.size() <= e) cache.push_back(cache.back() * forms[i]);
        return cache[e];
    };
    Poly result(n, f.coefficient_zero());
    for (const auto& [mono, c] : f.terms()) {
        Poly product = Poly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (mono.exponents[i] > 0) product = product * power(i, mono.exponents[i]);
        }
        result += product;
    }
    return result;
}

// Returns alpha with g = alpha * f. Both zero gives alpha = 1; otherwise
// alpha is nonzero or absent.
template <class R>
std::optional<R> is_scalar_multiple(const SparsePolynomial<R>& g, const SparsePolynomial<R>& f) {
    if (g.arity() != f.arity()) return std::nullopt;
    if (g.is_zero() && f.is_zero()) return one_like(f.coefficient_zero());
    if (g.is_zero() || f.is_zero() || g.size() != f.size()) return std::nullopt;
    const auto& [lead_mono, lead_f] = *f.terms().begin();
    const auto lead_g = g.terms().find(lead_mono);
    if (lead_g == g.terms().end()) return std::nullopt;
    const R alpha = lead_g->second / lead_f;
    for (const auto& [m, c] : f.terms()) {
        const auto it = g.terms().find(m);
        if (it == g.terms().end() || !(it->second == alpha * c)) return std::nullopt;
    }
    return alpha;
}

// Matrix of second partials H(i, j) = d^2 f / dx_i dx_j.
template <class R>
std::vector<std::vector<SparsePolynomial<R>>> hessian(const SparsePolynomial<R>& f) {
    const std::size_t n = f.arity();
    std::vector<std::vector<SparsePolynomial<R>>> h(n, std::vector<SparsePolynomial<R>>(n, zero_like(f)));
    for (std::size_t i = 0; i < n; ++i) {
        const auto di = f.derivative(i);
        for (std::size_t j = i; j < n; ++j) {
            h[i][j] = di.derivative(j);
            h[j][i] = h[i][j];
        }
    }
    return h;
}

// <u, v> = sum_{i,j} H_ij(x) u_i v_j.
template <class R>
SparsePolynomial<R> hessian_pairing(const SparsePolynomial<R>& f, const std::vector<R>& u, const std::vector<R>& v) {
    const std::size_t n = f.arity();
    if (u.size() != n || v.size() != n) throw Error(ErrorKind::arity_mismatch, "pairing vectors must have length arity");
    const auto h = hessian(f);
    SparsePolynomial<R> out = zero_like(f);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(u[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(v[j]) || h[i][j].is_zero()) continue;
            out += h[i][j].scaled(u[i] * v[j]);
        }
    }
    return out;
}

// The symmetric form (u_1, ..., u_d) -> sum d^d f / dx_{i_1}...dx_{i_d} (u_1)_{i_1}...(u_d)_{i_d}
// for f homogeneous of degree d, computed as iterated directional derivatives.
template <class R>
R multilinear_form(const SparsePolynomial<R>& f, const std::vector<std::vector<R>>& vectors) {
    if (f.is_zero()) return f.coefficient_zero();
    if (!f.is_homogeneous() || f.degree() != static_cast<long>(vectors.size())) {
        throw Error(ErrorKind::arity_mismatch, "multilinear form needs a homogeneous polynomial of degree " +
                                                   std::to_string(vectors.size()));
    }
    SparsePolynomial<R> g = f;
    for (const auto& u : vectors) {
        g = g.directional_derivative(u);
        if (g.is_zero()) return f.coefficient_zero();
    }
    return g.constant_term();
}

}  // namespace abelaut
