#include "abelaut/torus/automorphisms.hpp"

#include "abelaut/detail/parallel.hpp"
#include "abelaut/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace abelaut {

namespace {

std::size_t box_size(std::size_t rank, int bound, std::size_t budget) {
    const std::size_t side = static_cast<std::size_t>(2 * bound + 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        if (total > budget / side)
            throw Error(ErrorKind::budget_exceeded, "coefficient box (2*" + std::to_string(bound) + "+1)^" +
                                                        std::to_string(rank) + " exceeds the budget " + std::to_string(budget));
        total *= side;
    }
    return total;
}

// Visits every combination sum c_k E_k with |c_k| <= bound whose leading
// coefficient is fixed; fn returns true to keep the matrix.
template <class F>
std::vector<IntMatrix> scan_box_slice(const std::vector<IntMatrix>& basis, int bound, int lead, F&& keep) {
    std::vector<IntMatrix> kept;
    const std::size_t r = basis.size();
    std::vector<int> c(r, -bound);
    c[0] = lead;
    while (true) {
        IntMatrix m = basis[0].scaled(Integer(c[0]));
        for (std::size_t k = 1; k < r; ++k)
            if (c[k] != 0) m += basis[k].scaled(Integer(c[k]));
        if (keep(m)) kept.push_back(std::move(m));
        std::size_t pos = 1;
        while (pos < r && c[pos] == bound) c[pos++] = -bound;
        if (pos >= r) break;
        ++c[pos];
    }
    return kept;
}

bool matrix_less(const IntMatrix& a, const IntMatrix& b) { return a.data() < b.data(); }

}  // namespace

FiniteAutomorphisms enumerate_finite_automorphisms(const LatticeTorus& t, int entry_bound, std::size_t budget) {
    if (entry_bound < 0) throw Error(ErrorKind::domain_error, "negative entry bound");
    const auto basis = endomorphism_basis(t);
    FiniteAutomorphisms out;
    out.entry_bound = entry_bound;
    out.candidates = box_size(basis.size(), entry_bound, budget);

    auto slices = detail::parallel_map<std::vector<IntMatrix>>(
        static_cast<std::size_t>(2 * entry_bound + 1), [&](std::size_t s) {
            return scan_box_slice(basis, entry_bound, static_cast<int>(s) - entry_bound, [](const IntMatrix& m) {
                const Integer det = determinant_bareiss(m);
                if (det != Integer(1) && det != Integer(-1)) return false;
                return matrix_order(m).has_value();
            });
        });
    std::vector<std::pair<unsigned long, IntMatrix>> found;
    for (auto& slice : slices)
        for (auto& m : slice) {
            const unsigned long order = *matrix_order(m);
            found.emplace_back(order, std::move(m));
        }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : matrix_less(a.second, b.second);
    });
    for (auto& [order, m] : found) out.elements.push_back(std::move(m));

    std::set<std::vector<Integer>> members;
    for (const auto& m : out.elements) members.insert(m.data());
    out.closed = true;
    for (const auto& a : out.elements)
        for (const auto& b : out.elements)
            if (!members.count((a * b).data())) out.closed = false;
    return out;
}

bool simplicity_screen(const LatticeTorus& t, int entry_bound, std::size_t budget) {
    const auto basis = endomorphism_basis(t);
    box_size(basis.size(), entry_bound, budget);
    const IntMatrix identity = int_identity(t.dim());
    bool found = false;
    for (int lead = -entry_bound; lead <= entry_bound && !found; ++lead) {
        const auto hits = scan_box_slice(basis, entry_bound, lead, [&](const IntMatrix& e) {
            if (e == identity || e == identity.scaled(Integer(0))) return false;
            return e * e == e;
        });
        found = !hits.empty();
    }
    return !found;
}

}  // namespace abelaut
