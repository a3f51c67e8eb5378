#include "abelaut/construction/torsor.hpp"

#include "abelaut/error.hpp"

#include <set>

namespace abelaut {

TorsorDatum assess_torsor_datum(unsigned p, long chi, IsogenyDecomposition decomp, const TorsionPoint& P_lift,
                                int entry_bound) {
    TorsorDatum d;
    d.p = p;
    d.P_lift = P_lift;
    auto fail = [&](std::string why) {
        d.valid = false;
        d.reason = std::move(why);
        return d;
    };
    if (!is_prime(p)) {
        d.decomp = std::move(decomp);
        return fail(std::to_string(p) + " is not prime");
    }
    const long c = ((chi % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
    d.chi = static_cast<unsigned>(c);
    d.decomp = std::move(decomp);
    if (c == 0) return fail("chi multiplier " + std::to_string(chi) + " is not a unit mod " + std::to_string(p));
    if (P_lift.dim() != d.decomp.product.dim()) return fail("P has the wrong dimension");
    d.A = d.decomp.abelian_variety();
    d.P = d.A.project(P_lift);
    if (d.P.is_zero()) return fail("P is zero in A");
    if (d.P.level() != Integer(static_cast<long>(p)))
        return fail("P has order " + d.P.level().to_string() + ", not " + std::to_string(p));
    d.double_star = check_condition_double_star(P_lift, d.decomp, p);
    d.star = check_condition_star(d.decomp, p, entry_bound);
    if (!d.double_star.ok) return fail("condition (**) fails: " + d.double_star.reason);
    if (!d.star.ok) {
        const auto& w = *d.star.witness;
        return fail("condition (*) fails: factor " + std::to_string(w.factor + 1) + ", map " + matrix_to_string(w.phi) +
                    " has " + (w.infinite ? std::string("infinitely many") : w.count.to_string()) + " fixed points");
    }
    d.valid = true;
    return d;
}

TorsorDatum make_torsor_datum(unsigned p, long chi, IsogenyDecomposition decomp, const TorsionPoint& P_lift,
                              int entry_bound) {
    TorsorDatum d = assess_torsor_datum(p, chi, std::move(decomp), P_lift, entry_bound);
    if (!d.valid) throw Error(ErrorKind::invalid_datum, d.reason);
    return d;
}

FiberAutomorphism compose(const FiberAutomorphism& outer, const FiberAutomorphism& inner) {
    return FiberAutomorphism{outer.name + " o " + inner.name, outer.phi * inner.phi, inner.c.apply(outer.phi) + outer.c};
}

bool action_freeness(const TorsorDatum& d) {
    for (unsigned g = 1; g < d.p; ++g) {
        const long multiple = static_cast<long>((static_cast<unsigned long>(d.chi) * g) % d.p);
        if (d.P.scaled(Integer(multiple)).is_zero()) return false;
    }
    return true;
}

bool descent_check(const TorsorDatum& d, const FiberAutomorphism& candidate) {
    return d.P.apply(candidate.phi) == d.P;
}

std::vector<TorsionPoint> monodromy_orbit(const TorsionPoint& step, std::size_t cap) {
    std::vector<TorsionPoint> orbit{TorsionPoint::zero(step.dim())};
    TorsionPoint x = step;
    while (!x.is_zero()) {
        if (orbit.size() >= cap) throw Error(ErrorKind::budget_exceeded, "orbit longer than " + std::to_string(cap));
        orbit.push_back(x);
        x = x + step;
    }
    return orbit;
}

Connectivity subcover_connectivity(const TorsorDatum& d) {
    const auto orbit = monodromy_orbit(d.P.scaled(Integer(static_cast<long>(d.chi))));
    // <P> has exactly ord(P) elements; transitivity on it means one orbit.
    const auto order = static_cast<std::size_t>(d.P.level().to_long());
    return Connectivity{orbit.size() == order, orbit.size()};
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::translation: return "translation";
        case VerdictKind::contradiction: return "contradiction";
        case VerdictKind::exceptional: return "exceptional";
    }
    return "?";
}

RigidityVerdict fiber_rigidity_verdict(const TorsorDatum& d, const FiberAutomorphism& candidate) {
    RigidityVerdict v;
    if (candidate.phi.rows() != d.A.torus.dim())
        throw Error(ErrorKind::arity_mismatch, "candidate " + candidate.name + " has the wrong size");
    if (candidate.is_translation()) {
        v.kind = VerdictKind::translation;
        v.count = Integer(0);
        v.reason = "phi = id";
        return v;
    }
    const Integer det = determinant_bareiss(candidate.phi);
    if ((det != Integer(1) && det != Integer(-1)) || !commutes_with_structure(d.A.torus, candidate.phi))
        throw Error(ErrorKind::not_an_automorphism, "candidate " + candidate.name + " is not an automorphism of A");

    // Work on the product of the factors, where phi is block diagonal when it
    // respects the decomposition.
    const RatMatrix mv = d.A.basis * to_rational(candidate.phi) * to_rational(d.A.projection);
    const auto& dec = d.decomp;
    for (std::size_t i = 0; i < dec.h(); ++i)
        for (std::size_t j = 0; j < dec.h(); ++j) {
            if (i == j) continue;
            for (std::size_t r = 0; r < dec.factors[i].dim(); ++r)
                for (std::size_t c = 0; c < dec.factors[j].dim(); ++c)
                    if (!mv(dec.offsets[i] + r, dec.offsets[j] + c).is_zero()) {
                        v.kind = VerdictKind::exceptional;
                        v.reason = "phi mixes factors " + std::to_string(j + 1) + " and " + std::to_string(i + 1);
                        return v;
                    }
        }
    for (std::size_t i = 0; i < dec.h(); ++i) {
        const std::size_t n = dec.factors[i].dim();
        RatMatrix block(n, n, Rational(0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) block(r, c) = mv(dec.offsets[i] + r, dec.offsets[i] + c);
        if (block == RatMatrix::identity(n, Rational(0))) continue;
        const Rational fixed = determinant(RatMatrix::identity(n, Rational(0)) - block);
        v.factor = i;
        v.count = abs(fixed.numerator());
        if (!fixed.is_integer()) throw Error(ErrorKind::inconsistency, "non-integral block on factor " + std::to_string(i + 1));
        if (v.count.is_zero()) {
            v.kind = VerdictKind::exceptional;
            v.reason = "phi fixes a positive-dimensional subtorus of factor " + std::to_string(i + 1);
        } else if (v.count < Integer(static_cast<long>(d.p))) {
            v.kind = VerdictKind::contradiction;
            v.reason = "Y^phi would be a connected cover of X of degree at most " + v.count.to_string() + " < " +
                       std::to_string(d.p);
        } else {
            v.kind = VerdictKind::exceptional;
            v.reason = v.count.to_string() + " fixed points is not below p";
        }
        return v;
    }
    throw Error(ErrorKind::inconsistency, "phi != id but acts trivially on every factor");
}

RigidityVerdict rigidity_certificate(const TorsorDatum& d, const FiberAutomorphism& candidate) {
    if (!descent_check(d, candidate))
        throw Error(ErrorKind::not_an_automorphism, "candidate " + candidate.name + " moves P to " +
                                                        d.P.apply(candidate.phi).to_string() + " and does not descend to Y");
    return fiber_rigidity_verdict(d, candidate);
}

std::vector<FiberAutomorphism> default_candidate_suite(const TorsorDatum& d, int entry_bound) {
    const std::size_t n = d.A.torus.dim();
    const IntMatrix identity = int_identity(n);
    std::vector<Rational> half(n, Rational(0));
    half[0] = Rational(Integer(1), Integer(2));
    std::vector<FiberAutomorphism> suite{
        {"translation(0)", identity, TorsionPoint::zero(n)},
        {"translation(P)", identity, d.P},
        {"translation(t2)", identity, TorsionPoint(half)},
    };
    const auto autos = enumerate_finite_automorphisms(d.A.torus, entry_bound);
    std::size_t k = 0;
    for (const auto& m : autos.elements) {
        if (m == identity) continue;
        ++k;
        suite.push_back({"aut" + std::to_string(k), m, TorsionPoint::zero(n)});
        suite.push_back({"aut" + std::to_string(k) + "+P", m, d.P});
    }
    return suite;
}

}  // namespace abelaut
