#include "abelaut/torus/quotient.hpp"

#include "abelaut/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace abelaut {

namespace {

std::vector<Rational> raw_apply(const IntMatrix& m, const TorsionPoint& x) {
    std::vector<Rational> v(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i] += Rational(m(i, j)) * x.coords()[j];
    return v;
}

}  // namespace

TorusQuotient quotient_by_subgroup(const LatticeTorus& t, const std::vector<TorsionPoint>& generators) {
    const std::size_t n = t.dim();
    Integer level(1);
    for (const auto& h : generators) {
        if (h.dim() != n) throw Error(ErrorKind::arity_mismatch, "subgroup generator " + h.to_string() + " has the wrong dimension");
        level = lcm(level, h.level());
    }
    // Rows spanning level * Lambda'.
    IntMatrix rows(n + generators.size(), n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) rows(i, i) = level;
    for (std::size_t k = 0; k < generators.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) rows(n + k, j) = (Rational(level) * generators[k].coords()[j]).numerator();
    const IntMatrix hnf = hermite_row_basis(rows);
    if (hnf.rows() != n) throw Error(ErrorKind::inconsistency, "superlattice basis has the wrong rank");

    RatMatrix basis(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(j, i) = Rational(hnf(i, j)) / Rational(level);
    const auto inv = inverse(basis);
    if (!inv) throw Error(ErrorKind::inconsistency, "singular superlattice basis");
    const auto projection = to_integer(*inv);
    if (!projection) throw Error(ErrorKind::inconsistency, "Z^n is not contained in the superlattice");

    TorusQuotient q{make_torus(to_surd(*inv) * t.J * to_surd(basis)), basis, *projection,
                    abs(determinant_bareiss(*projection)), generators};
    return q;
}

bool in_subgroup(const TorusQuotient& q, const TorsionPoint& x) {
    for (const auto& c : raw_apply(q.projection, x))
        if (!c.is_integer()) return false;
    return true;
}

LatticeMap induced_map_on_quotient(const LatticeMap& phi, const TorusQuotient& q) {
    for (const auto& h : q.generators) {
        const TorsionPoint image = h.apply(phi.matrix);
        if (!in_subgroup(q, image))
            throw Error(ErrorKind::not_stable, "the map sends " + h.to_string() + " to " + image.to_string() +
                                                   ", outside the subgroup");
    }
    const auto induced = to_integer(to_rational(q.projection) * to_rational(phi.matrix) * q.basis);
    if (!induced) throw Error(ErrorKind::inconsistency, "induced map is not integral");
    return LatticeMap{q.torus, q.torus, *induced};
}

std::vector<TorsionPoint> generated_subgroup(const std::vector<TorsionPoint>& generators, std::size_t dim,
                                             std::size_t cap) {
    std::set<TorsionPoint> seen{TorsionPoint::zero(dim)};
    std::deque<TorsionPoint> frontier{TorsionPoint::zero(dim)};
    while (!frontier.empty()) {
        const TorsionPoint x = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            TorsionPoint y = x + g;
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw Error(ErrorKind::too_large, "generated subgroup exceeds " + std::to_string(cap));
                frontier.push_back(std::move(y));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<TorsionPoint>> enumerate_subgroups(std::size_t dim, unsigned n, std::size_t cap) {
    const auto points = torsion_points(dim, n);
    const std::size_t size = points.size();
    // Elements are base-n digit vectors; index arithmetic avoids rational work.
    auto digits = [&](std::size_t idx) {
        std::vector<unsigned> d(dim);
        for (std::size_t pos = dim; pos-- > 0;) {
            d[pos] = static_cast<unsigned>(idx % n);
            idx /= n;
        }
        return d;
    };
    std::vector<std::vector<unsigned>> coords(size);
    for (std::size_t i = 0; i < size; ++i) coords[i] = digits(i);
    auto add = [&](std::size_t a, std::size_t b) {
        std::size_t idx = 0;
        for (std::size_t pos = 0; pos < dim; ++pos) idx = idx * n + (coords[a][pos] + coords[b][pos]) % n;
        return idx;
    };

    using Subgroup = std::vector<std::size_t>;
    std::set<Subgroup> found{{0}};
    std::deque<Subgroup> queue{{0}};
    while (!queue.empty()) {
        const Subgroup s = queue.front();
        queue.pop_front();
        std::vector<bool> member(size, false);
        for (auto e : s) member[e] = true;
        for (std::size_t x = 0; x < size; ++x) {
            if (member[x]) continue;
            // <S, x> = S + <x> in an abelian group.
            std::set<std::size_t> bigger(s.begin(), s.end());
            std::size_t multiple = x;
            while (multiple != 0) {
                for (auto e : s) bigger.insert(add(e, multiple));
                multiple = add(multiple, x);
            }
            Subgroup next(bigger.begin(), bigger.end());
            if (found.insert(next).second) {
                if (found.size() > cap)
                    throw Error(ErrorKind::budget_exceeded, "more than " + std::to_string(cap) + " subgroups");
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<std::vector<TorsionPoint>> out;
    for (const auto& s : found) {
        std::vector<TorsionPoint> elems;
        for (auto e : s) elems.push_back(points[e]);
        std::sort(elems.begin(), elems.end());
        out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace abelaut
