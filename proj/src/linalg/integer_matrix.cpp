#include "abelaut/linalg/integer_matrix.hpp"

#include <algorithm>

namespace abelaut {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Nearest integer to num/den for den > 0.
Integer round_div(const Integer& num, const Integer& den) {
    return Integer::floor_div(num * Integer(2) + den, den * Integer(2));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_t -= k * row_s
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
    if (k.is_zero()) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= k * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
    if (k.is_zero()) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= k * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> data;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long x : r) row.emplace_back(x);
        data.push_back(std::move(row));
    }
    return IntMatrix(std::move(data));
}

IntMatrix int_identity(std::size_t n) { return IntMatrix::identity(n, Integer(0)); }

RatMatrix to_rational(const IntMatrix& m) {
    return m.map([](const Integer& x) { return Rational(x); });
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
    for (const auto& x : m.data())
        if (!x.is_integer()) return std::nullopt;
    return m.map([](const Rational& x) { return x.numerator(); });
}

Integer determinant_bareiss(IntMatrix m) {
    if (!m.is_square()) throw Error(ErrorKind::arity_mismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    Integer sign(1);
    Integer previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k).is_zero()) ++swap_with;
            if (swap_with == n) return Integer(0);
            swap_rows(m, k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = Integer::exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
            }
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = int_identity(a.rows());
    IntMatrix v = int_identity(a.cols());
    const std::size_t steps = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < steps; ++k) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = k; i < d.rows(); ++i)
                for (std::size_t j = k; j < d.cols(); ++j) {
                    if (d(i, j).is_zero()) continue;
                    if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = {i, j};
                }
            if (!best) return {u, d, v};
            swap_rows(d, k, best->first);
            swap_rows(u, k, best->first);
            swap_cols(d, k, best->second);
            swap_cols(v, k, best->second);

            bool clean = true;
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                const Integer q = Integer::floor_div(d(i, k), d(k, k));
                add_row_multiple(d, i, k, q);
                add_row_multiple(u, i, k, q);
                if (!d(i, k).is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                const Integer q = Integer::floor_div(d(k, j), d(k, k));
                add_col_multiple(d, j, k, q);
                add_col_multiple(v, j, k, q);
                if (!d(k, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into row k and repeat.
            std::optional<std::size_t> offending;
            for (std::size_t i = k + 1; i < d.rows() && !offending; ++i)
                for (std::size_t j = k + 1; j < d.cols(); ++j)
                    if (!Integer::mod(d(i, j), abs(d(k, k))).is_zero()) {
                        offending = i;
                        break;
                    }
            if (!offending) break;
            add_row_multiple(d, k, *offending, Integer(-1));
            add_row_multiple(u, k, *offending, Integer(-1));
        }
        if (d(k, k).sign() < 0) {
            negate_row(d, k);
            negate_row(u, k);
        }
    }
    return {u, d, v};
}

IntMatrix hermite_row_basis(IntMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // Euclid on column c over rows r..end until at most one nonzero remains.
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (m(i, c).is_zero()) continue;
                if (!best || abs(m(i, c)) < abs(m(*best, c))) best = i;
            }
            if (!best) break;
            swap_rows(m, r, *best);
            bool done = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c).is_zero()) continue;
                add_row_multiple(m, i, r, Integer::floor_div(m(i, c), m(r, c)));
                if (!m(i, c).is_zero()) done = false;
            }
            if (done) break;
        }
        if (m(r, c).is_zero()) continue;
        if (m(r, c).sign() < 0) negate_row(m, r);
        for (std::size_t i = 0; i < r; ++i) add_row_multiple(m, i, r, Integer::floor_div(m(i, c), m(r, c)));
        ++r;
    }
    IntMatrix out(r, m.cols(), Integer(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix v = int_identity(a.cols());
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < h.rows() && pivot_col < h.cols(); ++r) {
        for (std::size_t j = pivot_col + 1; j < h.cols(); ++j) {
            if (h(r, j).is_zero()) continue;
            const Integer x = h(r, pivot_col);
            const Integer y = h(r, j);
            Integer s, t;
            const Integer g = extended_gcd(x, y, s, t);
            const Integer xg = Integer::exact_div(x, g);
            const Integer yg = Integer::exact_div(y, g);
            // [col_p, col_j] <- [s col_p + t col_j, -y/g col_p + x/g col_j], determinant 1.
            for (IntMatrix* m : {&h, &v}) {
                for (std::size_t i = 0; i < m->rows(); ++i) {
                    const Integer cp = (*m)(i, pivot_col);
                    const Integer cj = (*m)(i, j);
                    (*m)(i, pivot_col) = s * cp + t * cj;
                    (*m)(i, j) = xg * cj - yg * cp;
                }
            }
        }
        if (!h(r, pivot_col).is_zero()) ++pivot_col;
    }
    std::vector<IntVector> basis;
    for (std::size_t j = pivot_col; j < h.cols(); ++j) basis.push_back(v.column(j));
    return size_reduce(std::move(basis));
}

std::vector<IntVector> size_reduce(std::vector<IntVector> basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                const Integer nj = dot(basis[j], basis[j]);
                if (nj.is_zero()) continue;
                const Integer k = round_div(dot(basis[i], basis[j]), nj);
                if (k.is_zero()) continue;
                IntVector candidate = basis[i];
                for (std::size_t t = 0; t < candidate.size(); ++t) candidate[t] -= k * basis[j][t];
                if (dot(candidate, candidate) < dot(basis[i], basis[i])) {
                    basis[i] = std::move(candidate);
                    changed = true;
                }
            }
        }
    }
    for (auto& b : basis) {
        const auto first = std::find_if(b.begin(), b.end(), [](const Integer& x) { return !x.is_zero(); });
        if (first != b.end() && first->sign() < 0)
            for (auto& x : b) x = -x;
    }
    std::sort(basis.begin(), basis.end(), [](const IntVector& x, const IntVector& y) {
        const Integer nx = dot(x, x);
        const Integer ny = dot(y, y);
        if (nx != ny) return nx < ny;
        return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    });
    return basis;
}

}  // namespace abelaut
