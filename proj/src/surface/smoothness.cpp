#include "abelaut/surface/smoothness.hpp"

#include "abelaut/detail/parallel.hpp"
#include "abelaut/error.hpp"
#include "abelaut/poly/fermat.hpp"
#include "abelaut/scalars/prime_field.hpp"

#include <string>
#include <vector>

namespace abelaut {

namespace {

struct CompactTerm {
    std::uint64_t coeff;
    std::array<std::uint32_t, 4> exps;
};
using CompactPoly = std::vector<CompactTerm>;

CompactPoly compact(const SparsePolynomial<PrimeFieldElement>& f) {
    CompactPoly out;
    for (const auto& [m, c] : f.terms()) out.push_back({c.value(), {m[0], m[1], m[2], m[3]}});
    return out;
}

// pw[x * stride + e] = x^e mod q
struct PowerTable {
    std::uint32_t q;
    std::size_t stride;
    std::vector<std::uint64_t> pw;

    PowerTable(std::uint32_t q_, unsigned max_exp) : q(q_), stride(max_exp + 1), pw(static_cast<std::size_t>(q_) * stride) {
        for (std::uint64_t x = 0; x < q; ++x) {
            std::uint64_t v = 1 % q;
            for (std::size_t e = 0; e < stride; ++e) {
                pw[x * stride + e] = v;
                v = v * x % q;
            }
        }
    }
    std::uint64_t operator()(std::uint32_t x, std::uint32_t e) const { return pw[x * stride + e]; }
};

std::uint64_t eval(const CompactPoly& f, const PowerTable& t, const std::array<std::uint32_t, 4>& x) {
    std::uint64_t total = 0;
    for (const auto& term : f) {
        std::uint64_t v = term.coeff;
        for (int i = 0; i < 4; ++i) v = v * t(x[i], term.exps[i]) % t.q;
        total += v;
    }
    return total % t.q;
}

}  // namespace

SmoothnessCertificate smoothness_certificate(unsigned p, const Rational& lambda, std::uint32_t q) {
    require_surface_degree(p);
    if (!is_prime(q)) throw Error(ErrorKind::domain_error, std::to_string(q) + " is not prime");
    if (q == p) throw Error(ErrorKind::bad_reduction, "reduction prime equals the degree " + std::to_string(p));
    const PrimeFieldElement lam = PrimeFieldElement::from_rational(q, lambda);

    const auto f = build_deformed_fermat<PrimeFieldElement>(p, lam);
    std::vector<CompactPoly> system{compact(f)};
    for (std::size_t i = 0; i < 4; ++i) system.push_back(compact(f.derivative(i)));
    const PowerTable table(q, p);

    SmoothnessCertificate cert;
    cert.p = p;
    cert.lambda = lambda;
    cert.q = q;
    cert.points_scanned = 0;

    // Canonical representatives: leading coordinate k is 1, earlier ones 0.
    // Work is split over the value of the coordinate after the leading one.
    for (int k = 0; k < 4 && !cert.witness; ++k) {
        const int free = 3 - k;
        if (free == 0) {
            std::array<std::uint32_t, 4> x{0, 0, 0, 1};
            ++cert.points_scanned;
            bool singular = true;
            for (const auto& g : system) singular = singular && eval(g, table, x) == 0;
            if (singular) cert.witness = x;
            break;
        }
        std::uint64_t inner = 1;
        for (int j = 1; j < free; ++j) inner *= q;
        auto hits = detail::parallel_map<std::optional<std::array<std::uint32_t, 4>>>(q, [&](std::size_t first) {
            std::array<std::uint32_t, 4> x{0, 0, 0, 0};
            x[k] = 1;
            x[k + 1] = static_cast<std::uint32_t>(first);
            for (std::uint64_t idx = 0; idx < inner; ++idx) {
                std::uint64_t rest = idx;
                for (int j = 3; j > k + 1; --j) {
                    x[j] = static_cast<std::uint32_t>(rest % q);
                    rest /= q;
                }
                bool singular = true;
                for (const auto& g : system) {
                    if (eval(g, table, x) != 0) {
                        singular = false;
                        break;
                    }
                }
                if (singular) return std::optional<std::array<std::uint32_t, 4>>(x);
            }
            return std::optional<std::array<std::uint32_t, 4>>();
        });
        cert.points_scanned += static_cast<std::uint64_t>(q) * inner;
        for (const auto& h : hits) {
            if (h) {
                cert.witness = h;
                break;
            }
        }
    }
    cert.smooth = !cert.witness.has_value();
    return cert;
}

}  // namespace abelaut
