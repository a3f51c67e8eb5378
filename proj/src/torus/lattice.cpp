#include "abelaut/torus/lattice.hpp"

#include "abelaut/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace abelaut {

SurdMatrix to_surd(const IntMatrix& m) {
    return m.map([](const Integer& x) { return Surd(Rational(x)); });
}

SurdMatrix to_surd(const RatMatrix& m) {
    return m.map([](const Rational& x) { return Surd(x); });
}

LatticeTorus make_torus(const SurdMatrix& J) {
    if (!J.is_square() || J.rows() == 0 || J.rows() % 2 != 0)
        throw Error(ErrorKind::invalid_complex_structure, "complex structure must be a square matrix of even size");
    const SurdMatrix minus_identity = -SurdMatrix::identity(J.rows(), Surd());
    if (!(J * J == minus_identity))
        throw Error(ErrorKind::invalid_complex_structure, "J^2 != -I for J = " + matrix_to_string(J));
    return LatticeTorus{J.rows() / 2, J};
}

LatticeTorus make_torus(const RatMatrix& J) { return make_torus(to_surd(J)); }

LatticeTorus product_torus(const std::vector<LatticeTorus>& factors) {
    std::vector<SurdMatrix> blocks;
    for (const auto& f : factors) blocks.push_back(f.J);
    return make_torus(block_diagonal(blocks));
}

bool commutes_with_structure(const LatticeTorus& t, const IntMatrix& m) {
    if (m.rows() != t.dim() || m.cols() != t.dim()) return false;
    const SurdMatrix s = to_surd(m);
    return s * t.J == t.J * s;
}

LatticeMap make_endomorphism(const LatticeTorus& t, const IntMatrix& m) {
    if (m.rows() != t.dim() || m.cols() != t.dim())
        throw Error(ErrorKind::arity_mismatch, "map size differs from the lattice rank " + std::to_string(t.dim()));
    if (!commutes_with_structure(t, m))
        throw Error(ErrorKind::invalid_map, "matrix " + matrix_to_string(m) + " does not commute with J");
    return LatticeMap{t, t, m};
}

// ---- torsion points ---------------------------------------------------------

TorsionPoint::TorsionPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c = c.fractional();
}

TorsionPoint TorsionPoint::zero(std::size_t dim) { return TorsionPoint(std::vector<Rational>(dim, Rational(0))); }

TorsionPoint TorsionPoint::parse(const std::vector<std::string>& coords) {
    std::vector<Rational> v;
    for (const auto& s : coords) v.push_back(Rational::parse(s));
    return TorsionPoint(std::move(v));
}

Integer TorsionPoint::level() const {
    Integer l(1);
    for (const auto& c : coords_) l = lcm(l, c.denominator());
    return l;
}

bool TorsionPoint::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

TorsionPoint TorsionPoint::scaled(const Integer& k) const {
    std::vector<Rational> v;
    for (const auto& c : coords_) v.push_back(Rational(k) * c);
    return TorsionPoint(std::move(v));
}

TorsionPoint TorsionPoint::apply(const IntMatrix& m) const {
    if (m.cols() != dim()) throw Error(ErrorKind::arity_mismatch, "point dimension differs from the map");
    std::vector<Rational> v(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !coords_[j].is_zero()) v[i] += Rational(m(i, j)) * coords_[j];
    return TorsionPoint(std::move(v));
}

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::arity_mismatch, "torsion points of different dimension");
    std::vector<Rational> v;
    for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(a.coords_[i] + b.coords_[i]);
    return TorsionPoint(std::move(v));
}

TorsionPoint operator-(const TorsionPoint& a) {
    std::vector<Rational> v;
    for (const auto& c : a.coords_) v.push_back(-c);
    return TorsionPoint(std::move(v));
}

TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b) { return a + (-b); }

std::vector<std::string> TorsionPoint::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coords_) out.push_back(c.to_string());
    return out;
}

std::string TorsionPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
    return s + ")";
}

// ---- endomorphisms ----------------------------------------------------------

std::vector<IntMatrix> endomorphism_basis(const LatticeTorus& t) {
    const std::size_t n = t.dim();
    // M commutes with J iff it commutes with every radicand component of J.
    std::map<std::uint64_t, RatMatrix> parts;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [r, c] : t.J(i, j).components()) {
                auto it = parts.try_emplace(r, n, n, Rational(0)).first;
                it->second(i, j) = c;
            }
    IntMatrix system(n * n * std::max<std::size_t>(parts.size(), 1), n * n, Integer(0));
    std::size_t row = 0;
    for (const auto& [r, Jr] : parts) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b, ++row) {
                // (X Jr - Jr X)(a, b) over unknowns X(i, j) at index i*n + j
                std::vector<Rational> eq(n * n, Rational(0));
                for (std::size_t k = 0; k < n; ++k) {
                    eq[a * n + k] += Jr(k, b);
                    eq[k * n + b] -= Jr(a, k);
                }
                Integer den(1);
                for (const auto& c : eq) den = lcm(den, c.denominator());
                for (std::size_t k = 0; k < n * n; ++k) system(row, k) = (eq[k] * Rational(den)).numerator();
            }
    }
    std::vector<IntMatrix> basis;
    for (const auto& v : integer_kernel_basis(system)) {
        IntMatrix m(n, n, Integer(0));
        for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = v[k];
        basis.push_back(std::move(m));
    }
    return basis;
}

// ---- orders -------------------------------------------------------------------

std::vector<Integer> characteristic_polynomial(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::arity_mismatch, "characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier over Q.
    const std::size_t n = m.rows();
    const RatMatrix a = to_rational(m);
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMatrix mk(n, n, Rational(0));
    const RatMatrix identity = RatMatrix::identity(n, Rational(0));
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk + identity.scaled(c[n - k + 1]);
        const RatMatrix amk = a * mk;
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
        c[n - k] = -trace / Rational(static_cast<long>(k));
    }
    std::vector<Integer> out;
    for (const auto& x : c) out.push_back(x.numerator());
    return out;
}

namespace {

using IntPoly = std::vector<Integer>;  // lowest degree first

void trim(IntPoly& f) {
    while (f.size() > 1 && f.back().is_zero()) f.pop_back();
}

// Division by a monic polynomial; quotient when exact.
std::optional<IntPoly> divide_exact(IntPoly f, const IntPoly& g) {
    trim(f);
    if (f.size() < g.size()) return std::nullopt;
    IntPoly q(f.size() - g.size() + 1, Integer(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        const Integer c = f[i + g.size() - 1];
        q[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < g.size(); ++j) f[i + j] -= c * g[j];
    }
    for (const auto& x : f)
        if (!x.is_zero()) return std::nullopt;
    return q;
}

std::vector<IntPoly> cyclotomic_polynomials(std::size_t max_k) {
    std::vector<IntPoly> phi(max_k + 1);
    for (std::size_t k = 1; k <= max_k; ++k) {
        IntPoly f(k + 1, Integer(0));
        f[0] = Integer(-1);
        f[k] = Integer(1);
        for (std::size_t d = 1; d < k; ++d)
            if (k % d == 0) f = *divide_exact(f, phi[d]);
        phi[k] = f;
    }
    return phi;
}

bool is_identity(const IntMatrix& m) { return m == int_identity(m.rows()); }

}  // namespace

std::optional<unsigned long> matrix_order(const IntMatrix& m) {
    const Integer det = determinant_bareiss(m);
    if (det != Integer(1) && det != Integer(-1))
        throw Error(ErrorKind::not_an_automorphism, "det = " + det.to_string() + " is not a unit");
    const std::size_t n = m.rows();
    const std::size_t max_k = 2 * n * n + 2;  // phi(k) <= n forces k <= 2 n^2
    const auto phi = cyclotomic_polynomials(max_k);
    IntPoly rest = characteristic_polynomial(m);
    unsigned long l = 1;
    for (std::size_t k = 1; k <= max_k && rest.size() > 1; ++k) {
        if (phi[k].size() > rest.size()) continue;
        while (auto q = divide_exact(rest, phi[k])) {
            rest = *q;
            l = std::lcm(l, static_cast<unsigned long>(k));
        }
    }
    if (rest.size() > 1) return std::nullopt;  // an eigenvalue is not a root of unity
    if (!is_identity(m.pow(l))) return std::nullopt;  // not semisimple, e.g. a shear
    for (unsigned long d = 1; d <= l; ++d)
        if (l % d == 0 && is_identity(m.pow(d))) return d;
    return l;
}

std::optional<unsigned long> order_of(const LatticeMap& phi) { return matrix_order(phi.matrix); }

// ---- fixed points ------------------------------------------------------------

Integer fixed_point_count(const LatticeMap& phi) {
    const std::size_t n = phi.matrix.rows();
    return abs(determinant_bareiss(int_identity(n) - phi.matrix));
}

AffineFixedPoints affine_fixed_points(const LatticeMap& phi, const TorsionPoint& a, std::size_t max_listed) {
    const std::size_t n = phi.matrix.rows();
    if (a.dim() != n) throw Error(ErrorKind::arity_mismatch, "translation has the wrong dimension");
    const IntMatrix psi = phi.matrix - int_identity(n);
    if (is_identity(phi.matrix))
        throw Error(ErrorKind::translation_case, "phi = id: a translation has no isolated fixed points");
    const Integer det = determinant_bareiss(psi);
    if (det.is_zero())
        throw Error(ErrorKind::degenerate_input, "det(M - I) = 0: the fixed locus is positive-dimensional");

    // U psi V = D: psi b = -a mod Z^n  <=>  D c = U(-a) mod Z^n with b = V c.
    const SmithForm snf = smith_normal_form(psi);
    std::vector<Rational> rhs(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs[i] -= Rational(snf.U(i, j)) * a.coords()[j];

    AffineFixedPoints out;
    out.count = abs(det);
    if (!out.count.fits_long() || static_cast<unsigned long>(out.count.to_long()) > max_listed) return out;

    std::vector<long> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = snf.D(i, i).to_long();
    std::vector<long> k(n, 0);
    while (true) {
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = (rhs[i] + Rational(k[i])) / Rational(d[i]);
        std::vector<Rational> b(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!snf.V(i, j).is_zero()) b[i] += Rational(snf.V(i, j)) * c[j];
        out.representatives.emplace_back(std::move(b));
        std::size_t pos = 0;
        while (pos < n && ++k[pos] == d[pos]) k[pos++] = 0;
        if (pos == n) break;
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    out.listed = true;
    return out;
}

// ---- torsion -------------------------------------------------------------------

std::vector<TorsionPoint> torsion_points(std::size_t dim, unsigned n, std::size_t cap) {
    if (n == 0) throw Error(ErrorKind::domain_error, "torsion level must be positive");
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > cap / n) throw Error(ErrorKind::too_large, std::to_string(n) + "^" + std::to_string(dim) +
                                                                   " torsion points exceed the cap " + std::to_string(cap));
        total *= n;
    }
    std::vector<TorsionPoint> points;
    points.reserve(total);
    std::vector<unsigned> idx(dim, 0);
    for (std::size_t t = 0; t < total; ++t) {
        std::vector<Rational> c;
        for (auto k : idx) c.emplace_back(Integer(static_cast<long>(k)), Integer(static_cast<long>(n)));
        points.emplace_back(std::move(c));
        for (std::size_t pos = dim; pos-- > 0;) {
            if (++idx[pos] < n) break;
            idx[pos] = 0;
        }
    }
    return points;
}

TorsionGroup torsion_group(const LatticeTorus& t, unsigned n, std::size_t cap) {
    return TorsionGroup{n, t.dim(), torsion_points(t.dim(), n, cap)};
}

unsigned long power_trivial_on_torsion(const LatticeMap& phi, unsigned n, unsigned long max_steps) {
    if (n == 0) throw Error(ErrorKind::domain_error, "torsion level must be positive");
    if (n == 1) return 1;
    const std::size_t dim = phi.matrix.rows();
    using Row = std::vector<std::uint64_t>;
    std::vector<Row> m(dim, Row(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m[i][j] = static_cast<std::uint64_t>(Integer::mod(phi.matrix(i, j), Integer(static_cast<long>(n))).to_long());
    std::vector<Row> power = m;
    for (unsigned long k = 1; k <= max_steps; ++k) {
        bool identity = true;
        for (std::size_t i = 0; i < dim && identity; ++i)
            for (std::size_t j = 0; j < dim && identity; ++j) identity = power[i][j] == (i == j ? 1U : 0U);
        if (identity) return k;
        std::vector<Row> next(dim, Row(dim, 0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t l = 0; l < dim; ++l) {
                if (power[i][l] == 0) continue;
                for (std::size_t j = 0; j < dim; ++j) next[i][j] = (next[i][j] + power[i][l] * m[l][j]) % n;
            }
        power = std::move(next);
    }
    throw Error(ErrorKind::budget_exceeded, "order mod " + std::to_string(n) + " exceeds " + std::to_string(max_steps));
}

std::string matrix_to_string(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

std::string matrix_to_string(const SurdMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

}  // namespace abelaut
