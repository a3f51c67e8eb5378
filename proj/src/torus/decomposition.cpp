#include "abelaut/torus/decomposition.hpp"

#include "abelaut/error.hpp"

#include <algorithm>
#include <set>

namespace abelaut {

TorsionPoint IsogenyDecomposition::component(const TorsionPoint& x, std::size_t i) const {
    const auto& c = x.coords();
    const auto begin = c.begin() + static_cast<std::ptrdiff_t>(offsets.at(i));
    return TorsionPoint(std::vector<Rational>(begin, begin + static_cast<std::ptrdiff_t>(factors[i].dim())));
}

TorsionPoint IsogenyDecomposition::embed(const TorsionPoint& x, std::size_t i) const {
    std::vector<Rational> c(product.dim(), Rational(0));
    for (std::size_t k = 0; k < x.dim(); ++k) c[offsets.at(i) + k] = x.coords()[k];
    return TorsionPoint(std::move(c));
}

TorusQuotient IsogenyDecomposition::abelian_variety() const { return quotient_by_subgroup(product, sigma_generators); }

IsogenyDecomposition make_decomposition(std::vector<LatticeTorus> factors, std::vector<TorsionPoint> sigma_generators) {
    if (factors.empty()) throw Error(ErrorKind::invalid_datum, "a decomposition needs at least one factor");
    IsogenyDecomposition d;
    std::size_t offset = 0;
    for (const auto& f : factors) {
        d.offsets.push_back(offset);
        offset += f.dim();
    }
    d.product = product_torus(factors);
    d.factors = std::move(factors);
    for (const auto& s : sigma_generators)
        if (s.dim() != offset)
            throw Error(ErrorKind::invalid_datum, "kernel generator " + s.to_string() + " does not live on the product");
    d.sigma_generators = std::move(sigma_generators);
    d.sigma = generated_subgroup(d.sigma_generators, offset);
    for (const auto& s : d.sigma) {
        if (s.is_zero()) continue;
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < d.h(); ++i) nonzero += d.component(s, i).is_zero() ? 0 : 1;
        if (nonzero == 1)
            throw Error(ErrorKind::invalid_datum, "kernel element " + s.to_string() + " lies in a single factor");
    }
    return d;
}

StarReport check_condition_star(const IsogenyDecomposition& d, unsigned p, int entry_bound) {
    if (!is_prime(p)) throw Error(ErrorKind::domain_error, std::to_string(p) + " is not prime");
    StarReport report;
    report.p = p;
    report.N = d.N();
    report.entry_bound = entry_bound;
    const auto n = static_cast<unsigned>(d.N().to_long());
    for (std::size_t i = 0; i < d.h(); ++i) {
        const auto& t = d.factors[i];
        for (const auto& h : enumerate_subgroups(t.dim(), n)) {
            ++report.subgroups_checked;
            const TorusQuotient q = quotient_by_subgroup(t, h);
            const auto autos = enumerate_finite_automorphisms(q.torus, entry_bound);
            report.enumerations_closed = report.enumerations_closed && autos.closed;
            for (const auto& m : autos.elements) {
                if (m == int_identity(m.rows())) continue;
                StarEntry e{i, h, m, fixed_point_count(LatticeMap{q.torus, q.torus, m}), false};
                e.infinite = e.count.is_zero();
                const bool larger = !report.witness || (e.infinite && !report.witness->infinite) ||
                                    (!report.witness->infinite && e.count > report.witness->count);
                if (larger) report.witness = e;
                report.table.push_back(std::move(e));
            }
        }
    }
    report.ok = !report.witness || (!report.witness->infinite && report.witness->count < Integer(static_cast<long>(p)));
    return report;
}

namespace {

bool in_sigma(const IsogenyDecomposition& d, const TorsionPoint& x) {
    return std::binary_search(d.sigma.begin(), d.sigma.end(), x);
}

}  // namespace

DoubleStarReport check_condition_double_star(const TorsionPoint& P, const IsogenyDecomposition& d, unsigned p) {
    if (P.dim() != d.product.dim()) throw Error(ErrorKind::arity_mismatch, "P does not live on the product");
    DoubleStarReport r;
    r.p_torsion = in_sigma(d, P.scaled(Integer(static_cast<long>(p))));
    r.nonzero = !in_sigma(d, P);
    for (std::size_t i = 0; i < d.h(); ++i) {
        bool escapes = true;
        for (const auto& s : d.sigma) escapes = escapes && !d.component(P - s, i).is_zero();
        r.components.push_back(escapes);
    }
    r.ok = r.p_torsion && r.nonzero && std::all_of(r.components.begin(), r.components.end(), [](bool b) { return b; });
    if (!r.p_torsion) r.reason = std::to_string(p) + "P is not zero in A";
    else if (!r.nonzero) r.reason = "P is zero in A";
    else if (!r.ok) {
        for (std::size_t i = 0; i < r.components.size(); ++i)
            if (!r.components[i]) r.reason = "P lies in the sum of the factors other than factor " + std::to_string(i + 1);
    }
    return r;
}

QuotientDatum derive_quotient_datum(const IsogenyDecomposition& d, const TorsionPoint& P, unsigned p, int entry_bound) {
    if (d.h() < 2) throw Error(ErrorKind::nothing_to_quotient, "a single factor has nothing to quotient by");
    QuotientDatum out;
    std::vector<TorusQuotient> quotients;
    for (std::size_t i = 1; i < d.h(); ++i) {
        // A_1 cap A_i: i-th components of kernel elements supported on factors 1 and i.
        std::set<TorsionPoint> meet;
        for (const auto& s : d.sigma) {
            bool supported = true;
            for (std::size_t j = 1; j < d.h(); ++j)
                if (j != i && !d.component(s, j).is_zero()) supported = false;
            if (supported) meet.insert(d.component(s, i));
        }
        out.intersections.emplace_back(meet.begin(), meet.end());
        quotients.push_back(quotient_by_subgroup(d.factors[i], out.intersections.back()));
    }
    auto project = [&](const TorsionPoint& x) {
        std::vector<Rational> c;
        for (std::size_t i = 1; i < d.h(); ++i) {
            const auto y = quotients[i - 1].project(d.component(x, i));
            c.insert(c.end(), y.coords().begin(), y.coords().end());
        }
        return TorsionPoint(std::move(c));
    };
    std::set<TorsionPoint> image;
    long kernel = 0;
    for (const auto& s : d.sigma) {
        const auto y = project(s);
        if (y.is_zero()) ++kernel;
        image.insert(y);
    }
    std::vector<LatticeTorus> factors;
    for (const auto& q : quotients) factors.push_back(q.torus);
    std::vector<TorsionPoint> generators;
    for (const auto& y : image)
        if (!y.is_zero()) generators.push_back(y);
    out.derived = make_decomposition(std::move(factors), std::move(generators));
    out.P_prime = project(P);
    out.N = d.N();
    out.N_prime = out.derived.N();
    out.K_order = Integer(kernel);
    out.identity_holds = out.N_prime == Integer(static_cast<long>(image.size())) && out.N_prime * out.K_order == out.N;
    out.star = check_condition_star(out.derived, p, entry_bound);
    out.double_star = check_condition_double_star(out.P_prime, out.derived, p);
    return out;
}

}  // namespace abelaut
