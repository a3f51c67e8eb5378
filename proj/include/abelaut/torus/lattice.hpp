#pragma once

#include "abelaut/linalg/integer_matrix.hpp"
#include "abelaut/scalars/rational.hpp"
#include "abelaut/scalars/surd.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace abelaut {

using SurdMatrix = Matrix<Surd>;

// Complex torus C^g / Z^{2g}; the complex structure J (J^2 = -I) carries the moduli.
struct LatticeTorus {
    std::size_t g = 0;
    SurdMatrix J;

    std::size_t dim() const noexcept { return 2 * g; }
};

// Validates J^2 = -I; rational J is the common case, surd entries allow Z[zeta_6].
LatticeTorus make_torus(const SurdMatrix& J);
LatticeTorus make_torus(const RatMatrix& J);
// Torus with block-diagonal complex structure.
LatticeTorus product_torus(const std::vector<LatticeTorus>& factors);

SurdMatrix to_surd(const IntMatrix& m);
SurdMatrix to_surd(const RatMatrix& m);
bool commutes_with_structure(const LatticeTorus& t, const IntMatrix& m);

// Homomorphism of tori given on lattice coordinates; M J_source = J_target M.
struct LatticeMap {
    LatticeTorus source;
    LatticeTorus target;
    IntMatrix matrix;
};

LatticeMap make_endomorphism(const LatticeTorus& t, const IntMatrix& m);

// Point of (1/n)Z^{2g} / Z^{2g}, stored with entries in [0, 1).
class TorsionPoint {
  public:
    explicit TorsionPoint(std::vector<Rational> coords);
    static TorsionPoint zero(std::size_t dim);
    static TorsionPoint parse(const std::vector<std::string>& coords);

    const std::vector<Rational>& coords() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    // Order of the point: lcm of the denominators.
    Integer level() const;
    bool is_zero() const noexcept;

    TorsionPoint scaled(const Integer& k) const;
    TorsionPoint apply(const IntMatrix& m) const;
    friend TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b);
    friend TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b);
    friend TorsionPoint operator-(const TorsionPoint& a);
    friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) { return a.coords_ < b.coords_; }

    std::vector<std::string> to_strings() const;
    std::string to_string() const;

  private:
    std::vector<Rational> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const TorsionPoint& x) { return os << x.to_string(); }

// Z-basis of the integer matrices commuting with J, size-reduced.
std::vector<IntMatrix> endomorphism_basis(const LatticeTorus& t);

// Coefficients c_0..c_n of det(x I - M), lowest degree first.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);

// Minimal k >= 1 with M^k = I, or nullopt for infinite order. Decided by
// factoring the characteristic polynomial into cyclotomic polynomials.
std::optional<unsigned long> order_of(const LatticeMap& phi);
std::optional<unsigned long> matrix_order(const IntMatrix& m);

// |det(I - M)|; zero means a positive-dimensional fixed locus or a translation.
Integer fixed_point_count(const LatticeMap& phi);

struct AffineFixedPoints {
    Integer count;
    std::vector<TorsionPoint> representatives;  // sorted; empty when count exceeds the listing cap
    bool listed = false;
};

// Fixed points of b -> M b + a, i.e. solutions of (M - I) b = -a mod Z^{2g}, via Smith form.
AffineFixedPoints affine_fixed_points(const LatticeMap& phi, const TorsionPoint& a, std::size_t max_listed = 1 << 16);

struct TorsionGroup {
    unsigned n = 1;
    std::size_t dim = 0;
    std::vector<TorsionPoint> points;  // all of (1/n)Z^dim / Z^dim, sorted

    TorsionPoint act(const IntMatrix& m, const TorsionPoint& x) const { return x.apply(m); }
};

inline constexpr std::size_t kDefaultTorsionCap = 1'000'000;

TorsionGroup torsion_group(const LatticeTorus& t, unsigned n, std::size_t cap = kDefaultTorsionCap);
std::vector<TorsionPoint> torsion_points(std::size_t dim, unsigned n, std::size_t cap = kDefaultTorsionCap);

// Order of M in GL(Z/n): minimal k >= 1 with M^k = I mod n.
unsigned long power_trivial_on_torsion(const LatticeMap& phi, unsigned n, unsigned long max_steps = 10'000'000);

std::string matrix_to_string(const IntMatrix& m);
std::string matrix_to_string(const SurdMatrix& m);

}  // namespace abelaut
