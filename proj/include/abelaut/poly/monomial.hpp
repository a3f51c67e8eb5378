#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace abelaut {

// Exponent vector; arity is fixed by the owning polynomial.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exponents(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::size_t arity() const noexcept { return exponents.size(); }
    std::uint64_t degree() const noexcept {
        return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
    }
    std::uint32_t operator[](std::size_t i) const { return exponents[i]; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
        return m;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order, largest first: higher total degree, then the
// first differing exponent (x1 > x2 > ...) decides.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        const auto da = a.degree();
        const auto db = b.degree();
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.exponents.size(); ++i) {
            if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
        }
        return false;
    }
};

}  // namespace abelaut
