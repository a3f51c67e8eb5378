#pragma once

#include "abelaut/error.hpp"
#include "abelaut/linalg/matrix.hpp"
#include "abelaut/poly/sparse_polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace abelaut {

// Basis of {b : <a, b> = 0 as a polynomial in x}. Over a field R.
template <class R>
std::vector<std::vector<R>> orthogonal_complement(const SparsePolynomial<R>& f, const std::vector<R>& a) {
    const std::size_t n = f.arity();
    if (a.size() != n) throw Error(ErrorKind::arity_mismatch, "vector length differs from arity");
    bool all_zero = true;
    for (const auto& x : a) all_zero = all_zero && is_zero(x);
    if (all_zero) throw Error(ErrorKind::degenerate_input, "a = 0 pairs to zero with everything");

    // <a, b> = sum_j b_j * d/dx_j (D_a f); one equation per monomial.
    const auto da = f.directional_derivative(a);
    std::vector<SparsePolynomial<R>> columns;
    std::map<Monomial, std::size_t, GrlexDescending> rows;
    for (std::size_t j = 0; j < n; ++j) {
        columns.push_back(da.derivative(j));
        for (const auto& [m, c] : columns.back().terms()) rows.emplace(m, 0);
    }
    const R zero = f.coefficient_zero();
    if (rows.empty()) {
        std::vector<std::vector<R>> all;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<R> e(n, zero);
            e[j] = one_like(zero);
            all.push_back(std::move(e));
        }
        return all;
    }
    std::size_t r = 0;
    for (auto& [m, idx] : rows) idx = r++;
    Matrix<R> system(rows.size(), n, zero);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [m, c] : columns[j].terms()) system(rows.at(m), j) = c;
    return kernel_basis(system);
}

// Variables j with d^p f / dx_i^{p-1} dx_j != 0, for f homogeneous of degree p.
template <class R>
std::vector<std::size_t> top_derivative_support(const SparsePolynomial<R>& f, std::size_t i) {
    const std::size_t n = f.arity();
    if (i >= n) throw Error(ErrorKind::index_out_of_range, "variable index " + std::to_string(i));
    if (!f.is_homogeneous() || f.degree() < 1) throw Error(ErrorKind::arity_mismatch, "needs a homogeneous polynomial of positive degree");
    const R zero = f.coefficient_zero();
    auto basis = [&](std::size_t k) {
        std::vector<R> e(n, zero);
        e[k] = one_like(zero);
        return e;
    };
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<R>> args(static_cast<std::size_t>(f.degree() - 1), basis(i));
        args.push_back(basis(j));
        if (!is_zero(multilinear_form(f, args))) support.push_back(j);
    }
    return support;
}

// f(Mx) = alpha f(x) implies <Mu, Mv>(Mx) = alpha <u, v>(x).
template <class R>
bool pairing_equivariant(const SparsePolynomial<R>& f, const Matrix<R>& m, const R& alpha, const std::vector<R>& u,
                         const std::vector<R>& v) {
    const auto lhs = linear_substitute(hessian_pairing(f, m.apply(u), m.apply(v)), m);
    return lhs == hessian_pairing(f, u, v).scaled(alpha);
}

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct OrthogonalityIdentityReport {
    unsigned p = 0;
    std::vector<IdentityCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

// Expands <a, b> for f_lambda with symbolic lambda, a, b and checks the
// coefficient identities that force a, b onto the e3/e4 axes.
OrthogonalityIdentityReport verify_orthogonality_coefficient_identities(unsigned p);

}  // namespace abelaut
