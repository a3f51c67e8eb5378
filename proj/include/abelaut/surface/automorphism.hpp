#pragma once

#include "abelaut/linalg/matrix.hpp"
#include "abelaut/poly/sparse_polynomial.hpp"
#include "abelaut/scalars/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abelaut {

using CyclotomicMatrix = Matrix<CyclotomicNumber>;
using CyclotomicPolynomial = SparsePolynomial<CyclotomicNumber>;

// Point of P^3 scaled so that its first nonzero coordinate is 1.
class ProjectivePoint {
  public:
    explicit ProjectivePoint(std::vector<CyclotomicNumber> coords);
    static ProjectivePoint coordinate(unsigned p, std::size_t i, std::size_t dim = 4);

    const std::vector<CyclotomicNumber>& coords() const noexcept { return coords_; }
    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    std::string to_string() const;

  private:
    std::vector<CyclotomicNumber> coords_;
};

struct AutomorphismRecord {
    CyclotomicMatrix matrix;  // scaled so the first nonzero entry is 1
    CyclotomicNumber alpha;   // f(M x) = alpha f(x)
    unsigned order;           // order of [M] in PGL
};

// Scales m by the inverse of its first nonzero entry (row-major).
CyclotomicMatrix normalize_projective(const CyclotomicMatrix& m);

// Smallest k >= 1 with m^k scalar; throws budget-exceeded past max_order.
unsigned projective_order(const CyclotomicMatrix& m, unsigned max_order = 1000);

// The record when f(Mx) is a nonzero multiple of f. Singular m throws invalid-map.
std::optional<AutomorphismRecord> verify_projective_automorphism(const CyclotomicPolynomial& f,
                                                                 const CyclotomicMatrix& m);

// diag(1, z^a, z^b, z^c) for a, b, c reduced mod p.
CyclotomicMatrix diagonal_zeta_matrix(unsigned p, unsigned a, unsigned b, unsigned c);

// Tests all p^3 matrices diag(1, z^a, z^b, z^c); records come back ordered by (a, b, c).
std::vector<AutomorphismRecord> enumerate_diagonal_automorphisms(const CyclotomicPolynomial& f, unsigned p);

struct CyclicGroupReport {
    bool is_cyclic = false;
    std::size_t order = 0;
    std::optional<AutomorphismRecord> generator;
};

// Checks closure of the projective classes and looks for an element whose
// order is the group order. Non-closed input, or a set whose size does not
// divide p^3, is an inconsistency.
CyclicGroupReport cyclic_group_report(const std::vector<AutomorphismRecord>& records);

struct FixedLocus {
    std::vector<std::vector<std::size_t>> eigenspaces;  // coordinate index sets, one per eigenvalue
    std::vector<ProjectivePoint> points;                // the isolated fixed points
    bool positive_dimensional = false;
    std::string description;
};

// Fixed locus in P^3 of a diagonal matrix: one coordinate subspace per distinct eigenvalue.
FixedLocus fixed_points_in_p3(const CyclotomicMatrix& m);

struct FreenessReport {
    bool free = true;
    std::string reason;
    std::optional<ProjectivePoint> witness;
    std::vector<ProjectivePoint> fixed_points;  // union over nontrivial records, first-seen order
};

FreenessReport freeness_check(const CyclotomicPolynomial& f, const std::vector<AutomorphismRecord>& records);

// Permutation matrix sending x_i to x_{perm[i]}.
CyclotomicMatrix permutation_matrix(unsigned p, const std::vector<std::size_t>& perm);

std::string matrix_to_string(const CyclotomicMatrix& m);

}  // namespace abelaut
