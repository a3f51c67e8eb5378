#pragma once

#include "abelaut/torus/decomposition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abelaut {

// Y = (S x A) / G with G = Z/p acting by g.(s, a) = (g.s, a + chi(g) P), chi(g) = chi * g.
struct TorsorDatum {
    unsigned p = 0;
    unsigned chi = 1;
    IsogenyDecomposition decomp;
    TorsionPoint P_lift = TorsionPoint::zero(0);  // on the product of the factors
    TorusQuotient A;                              // product / Sigma, maps act in its coordinates
    TorsionPoint P = TorsionPoint::zero(0);       // P on A
    StarReport star;
    DoubleStarReport double_star;
    bool valid = false;
    std::string reason;
};

// Evaluates every invariant and records the first failure; never throws on invalid data.
TorsorDatum assess_torsor_datum(unsigned p, long chi, IsogenyDecomposition decomp, const TorsionPoint& P_lift,
                                int entry_bound = kDefaultEntryBound);
// Same, but an invalid datum throws invalid-datum.
TorsorDatum make_torsor_datum(unsigned p, long chi, IsogenyDecomposition decomp, const TorsionPoint& P_lift,
                              int entry_bound = kDefaultEntryBound);

// a -> phi(a) + c on a fiber A.
struct FiberAutomorphism {
    std::string name;
    IntMatrix phi;
    TorsionPoint c = TorsionPoint::zero(0);

    bool is_translation() const { return phi == int_identity(phi.rows()); }
};

FiberAutomorphism compose(const FiberAutomorphism& outer, const FiberAutomorphism& inner);

// chi(g) P != 0 for every g != 0.
bool action_freeness(const TorsorDatum& d);

// The candidate commutes with the G-action iff phi(P) = P.
bool descent_check(const TorsorDatum& d, const FiberAutomorphism& candidate);

// Orbit of 0 under repeated addition of step.
std::vector<TorsionPoint> monodromy_orbit(const TorsionPoint& step, std::size_t cap = 1'000'000);

struct Connectivity {
    bool connected = false;
    std::size_t orbit_size = 0;
};

// Monodromy of Z = (S x <P>)/G over X on the fiber <P>: generator acts by +chi(1) P.
Connectivity subcover_connectivity(const TorsorDatum& d);

enum class VerdictKind { translation, contradiction, exceptional };

struct RigidityVerdict {
    VerdictKind kind = VerdictKind::exceptional;
    Integer count;       // fixed points behind a contradiction
    std::size_t factor = 0;  // simple factor that produced the count
    std::string reason;
};

std::string to_string(VerdictKind k);

// Translation for phi = id; contradiction(n) when phi has n isolated fixed
// points, 0 < n < p, on the first factor where it acts nontrivially (a degree-n
// cover of X cannot exist); exceptional otherwise. Does not look at descent.
RigidityVerdict fiber_rigidity_verdict(const TorsorDatum& d, const FiberAutomorphism& candidate);

// As above, for candidates that descend to Y; others throw not-an-automorphism.
RigidityVerdict rigidity_certificate(const TorsorDatum& d, const FiberAutomorphism& candidate);

// Translations by 0, P and a 2-torsion point, then every nontrivial finite
// automorphism of A with translation parts 0 and P.
std::vector<FiberAutomorphism> default_candidate_suite(const TorsorDatum& d, int entry_bound = kDefaultEntryBound);

}  // namespace abelaut
