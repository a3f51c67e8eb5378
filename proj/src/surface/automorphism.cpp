#include "abelaut/surface/automorphism.hpp"

#include "abelaut/detail/parallel.hpp"
#include "abelaut/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace abelaut {

ProjectivePoint::ProjectivePoint(std::vector<CyclotomicNumber> coords) : coords_(std::move(coords)) {
    auto lead = coords_.begin();
    while (lead != coords_.end() && lead->is_zero()) ++lead;
    if (lead == coords_.end()) throw Error(ErrorKind::degenerate_input, "projective point with all coordinates zero");
    if (*lead == one_like(*lead)) return;
    const CyclotomicNumber inv = lead->inverse();
    for (auto& c : coords_) c = c * inv;
}

ProjectivePoint ProjectivePoint::coordinate(unsigned p, std::size_t i, std::size_t dim) {
    std::vector<CyclotomicNumber> v(dim, CyclotomicNumber::zero(p));
    v.at(i) = CyclotomicNumber::one(p);
    return ProjectivePoint(std::move(v));
}

std::string ProjectivePoint::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ":";
        s += coords_[i].to_string();
    }
    return s + "]";
}

CyclotomicMatrix normalize_projective(const CyclotomicMatrix& m) {
    for (const auto& x : m.data()) {
        if (x.is_zero()) continue;
        if (x == one_like(x)) return m;
        return m.scaled(x.inverse());
    }
    throw Error(ErrorKind::invalid_map, "zero matrix");
}

unsigned projective_order(const CyclotomicMatrix& m, unsigned max_order) {
    CyclotomicMatrix power = m;
    for (unsigned k = 1; k <= max_order; ++k) {
        if (power.scalar_value()) return k;
        power = power * m;
    }
    throw Error(ErrorKind::budget_exceeded, "projective order exceeds " + std::to_string(max_order));
}

std::optional<AutomorphismRecord> verify_projective_automorphism(const CyclotomicPolynomial& f,
                                                                 const CyclotomicMatrix& m) {
    if (m.rows() != f.arity() || m.cols() != f.arity())
        throw Error(ErrorKind::arity_mismatch, "matrix size differs from the number of variables");
    if (determinant(m).is_zero()) throw Error(ErrorKind::invalid_map, "singular matrix");
    const CyclotomicMatrix normalized = normalize_projective(m);
    const auto alpha = is_scalar_multiple(linear_substitute(f, normalized), f);
    if (!alpha) return std::nullopt;
    return AutomorphismRecord{normalized, *alpha, projective_order(normalized)};
}

CyclotomicMatrix diagonal_zeta_matrix(unsigned p, unsigned a, unsigned b, unsigned c) {
    return CyclotomicMatrix::diagonal({CyclotomicNumber::one(p), CyclotomicNumber::zeta_power(p, a),
                                       CyclotomicNumber::zeta_power(p, b), CyclotomicNumber::zeta_power(p, c)});
}

std::vector<AutomorphismRecord> enumerate_diagonal_automorphisms(const CyclotomicPolynomial& f, unsigned p) {
    validate_conductor(p);
    if (f.arity() != 4) throw Error(ErrorKind::arity_mismatch, "surface polynomials have 4 variables");
    const std::size_t total = static_cast<std::size_t>(p) * p * p;
    // One task per value of a keeps the merge order equal to the (a, b, c) order.
    auto chunks = detail::parallel_map<std::vector<AutomorphismRecord>>(p, [&](std::size_t a) {
        std::vector<AutomorphismRecord> found;
        for (unsigned b = 0; b < p; ++b)
            for (unsigned c = 0; c < p; ++c) {
                auto rec = verify_projective_automorphism(f, diagonal_zeta_matrix(p, static_cast<unsigned>(a), b, c));
                if (rec) found.push_back(std::move(*rec));
            }
        return found;
    });
    std::vector<AutomorphismRecord> records;
    records.reserve(total);
    for (auto& chunk : chunks)
        for (auto& r : chunk) records.push_back(std::move(r));
    return records;
}

namespace {

std::vector<Rational> matrix_key(const CyclotomicMatrix& m) {
    std::vector<Rational> key;
    for (const auto& x : m.data()) key.insert(key.end(), x.coefficients().begin(), x.coefficients().end());
    return key;
}

}  // namespace

CyclicGroupReport cyclic_group_report(const std::vector<AutomorphismRecord>& records) {
    if (records.empty()) throw Error(ErrorKind::inconsistency, "empty automorphism list");
    std::map<std::vector<Rational>, std::size_t> index;
    for (std::size_t i = 0; i < records.size(); ++i) index.emplace(matrix_key(normalize_projective(records[i].matrix)), i);
    const auto& sample = records.front().matrix;
    if (!index.count(matrix_key(CyclotomicMatrix::identity(sample.rows(), sample.zero()))))
        throw Error(ErrorKind::inconsistency, "identity missing from the automorphism list");
    for (const auto& a : records)
        for (const auto& b : records) {
            if (!index.count(matrix_key(normalize_projective(a.matrix * b.matrix))))
                throw Error(ErrorKind::inconsistency,
                            "automorphism list not closed: product of " + matrix_to_string(a.matrix) + " and " +
                                matrix_to_string(b.matrix) + " is missing");
        }
    const std::size_t order = index.size();
    const unsigned long p = sample.zero().conductor();
    if ((p * p * p) % order != 0)
        throw Error(ErrorKind::inconsistency,
                    "group of order " + std::to_string(order) + " cannot consist of diagonal p-th roots of unity");
    CyclicGroupReport report;
    report.order = order;
    for (const auto& r : records) {
        if (r.order == order) {
            report.is_cyclic = true;
            report.generator = r;
            break;
        }
    }
    return report;
}

FixedLocus fixed_points_in_p3(const CyclotomicMatrix& m) {
    if (!m.is_square() || !m.is_diagonal()) throw Error(ErrorKind::invalid_map, "fixed loci are computed for diagonal matrices only");
    const std::size_t n = m.rows();
    const unsigned p = m.zero().conductor();
    FixedLocus locus;
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> space{i};
        used[i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!used[j] && m(j, j) == m(i, i)) {
                space.push_back(j);
                used[j] = true;
            }
        }
        if (space.size() == 1) {
            locus.points.push_back(ProjectivePoint::coordinate(p, i, n));
        } else {
            locus.positive_dimensional = true;
            std::string desc = "P^" + std::to_string(space.size() - 1) + " spanned by";
            for (auto k : space) desc += " e" + std::to_string(k + 1);
            if (!locus.description.empty()) locus.description += "; ";
            locus.description += desc;
        }
        locus.eigenspaces.push_back(std::move(space));
    }
    if (!locus.positive_dimensional) locus.description = std::to_string(locus.points.size()) + " isolated points";
    return locus;
}

FreenessReport freeness_check(const CyclotomicPolynomial& f, const std::vector<AutomorphismRecord>& records) {
    FreenessReport report;
    for (const auto& r : records) {
        if (r.order == 1) continue;
        const FixedLocus locus = fixed_points_in_p3(r.matrix);
        if (locus.positive_dimensional) {
            report.free = false;
            report.reason = "indeterminate: " + matrix_to_string(r.matrix) + " fixes " + locus.description;
            return report;
        }
        for (const auto& pt : locus.points) {
            if (std::find(report.fixed_points.begin(), report.fixed_points.end(), pt) == report.fixed_points.end())
                report.fixed_points.push_back(pt);
            if (f.evaluate(pt.coords()).is_zero()) {
                report.free = false;
                report.reason = "fixed point " + pt.to_string() + " of " + matrix_to_string(r.matrix) + " lies on the surface";
                report.witness = pt;
                return report;
            }
        }
    }
    return report;
}

CyclotomicMatrix permutation_matrix(unsigned p, const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    CyclotomicMatrix m(n, n, CyclotomicNumber::zero(p));
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || seen[perm[i]]) throw Error(ErrorKind::invalid_map, "not a permutation");
        seen[perm[i]] = true;
        m(i, perm[i]) = CyclotomicNumber::one(p);
    }
    return m;
}

std::string matrix_to_string(const CyclotomicMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += m(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace abelaut
