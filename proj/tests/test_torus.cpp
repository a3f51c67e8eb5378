#include "abelaut/error.hpp"
#include "abelaut/torus/automorphisms.hpp"
#include "abelaut/torus/decomposition.hpp"
#include "abelaut/torus/fixtures.hpp"
#include "abelaut/torus/lattice.hpp"
#include "abelaut/torus/quotient.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace abelaut;

namespace {

TorsionPoint pt(std::vector<std::string> coords) { return TorsionPoint::parse(coords); }

// Exhaustive count of {x in (1/n)Z^d / Z^d : M x + a = x}.
std::size_t brute_force_fixed(const IntMatrix& m, const TorsionPoint& a, unsigned n) {
    std::size_t count = 0;
    for (const auto& x : torsion_points(m.rows(), n))
        if (x.apply(m) + a == x) ++count;
    return count;
}

std::optional<unsigned long> naive_order(const IntMatrix& m, unsigned long limit = 10'000) {
    IntMatrix power = m;
    for (unsigned long k = 1; k <= limit; ++k) {
        if (power.is_identity()) return k;
        power = power * m;
    }
    return std::nullopt;
}

unsigned long naive_torsion_power(const IntMatrix& m, unsigned n) {
    IntMatrix power = m;
    for (unsigned long k = 1;; ++k) {
        bool trivial = true;
        for (std::size_t i = 0; i < m.rows() && trivial; ++i)
            for (std::size_t j = 0; j < m.cols() && trivial; ++j)
                trivial = Integer::mod(power(i, j) - Integer(i == j ? 1 : 0), Integer(static_cast<long>(n))).is_zero();
        if (trivial) return k;
        power = power * m;
    }
}

// Every map in the fixture corpus with a finite fixed-point count.
std::vector<LatticeMap> corpus() {
    std::vector<LatticeMap> maps;
    for (const auto& t : {fixtures::gaussian_curve(), fixtures::eisenstein_curve(), fixtures::cm_product().product}) {
        for (const auto& m : enumerate_finite_automorphisms(t).elements) maps.push_back(make_endomorphism(t, m));
        for (const auto& m : endomorphism_basis(t)) maps.push_back(make_endomorphism(t, m));
    }
    const auto glued = fixtures::glued_product().abelian_variety().torus;
    for (const auto& m : enumerate_finite_automorphisms(glued).elements) maps.push_back(make_endomorphism(glued, m));
    const auto e2 = fixtures::gaussian_square().product;
    maps.push_back(make_endomorphism(e2, fixtures::shear()));
    maps.push_back(make_endomorphism(e2, int_identity(4).scaled(Integer(-1))));
    return maps;
}

}  // namespace

TEST(Torus, MakeTorus) {
    const auto e = make_torus(to_rational(int_matrix({{0, -1}, {1, 0}})));
    EXPECT_EQ(e.g, 1u);
    EXPECT_THROW(make_torus(to_rational(int_matrix({{0, -1}, {1, -1}}))), Error);
    EXPECT_THROW(make_torus(to_rational(int_identity(2))), Error);
    EXPECT_THROW(make_torus(to_rational(int_identity(3))), Error);
    const auto w = fixtures::eisenstein_curve();
    EXPECT_EQ(w.J * w.J, to_surd(int_identity(2).scaled(Integer(-1))));
    EXPECT_TRUE(commutes_with_structure(w, fixtures::eisenstein_rotation()));
    EXPECT_FALSE(commutes_with_structure(w, int_matrix({{0, -1}, {1, 0}})));
}

TEST(Torus, EndomorphismRanks) {
    EXPECT_EQ(endomorphism_basis(fixtures::gaussian_curve()).size(), 2u);
    EXPECT_EQ(endomorphism_basis(fixtures::eisenstein_curve()).size(), 2u);
    EXPECT_EQ(endomorphism_basis(fixtures::cm_product().product).size(), 4u);
    EXPECT_EQ(endomorphism_basis(fixtures::gaussian_square().product).size(), 8u);
}

TEST(Torus, EndomorphismRingClosure) {
    const std::vector<LatticeTorus> tori{fixtures::gaussian_curve(), fixtures::eisenstein_curve(),
                                         fixtures::cm_product().product, fixtures::gaussian_square().product,
                                         fixtures::glued_product().abelian_variety().torus};
    for (const auto& t : tori) {
        const auto basis = endomorphism_basis(t);
        const std::size_t n = t.dim();
        RatMatrix coords(n * n, basis.size(), Rational(0));
        for (std::size_t k = 0; k < basis.size(); ++k) {
            EXPECT_TRUE(commutes_with_structure(t, basis[k]));
            for (std::size_t e = 0; e < n * n; ++e) coords(e, k) = Rational(basis[k].data()[e]);
        }
        for (const auto& a : basis)
            for (const auto& b : basis) {
                const IntMatrix product = a * b;
                std::vector<Rational> rhs;
                for (const auto& x : product.data()) rhs.emplace_back(x);
                const auto sol = solve(coords, rhs);
                ASSERT_TRUE(sol.has_value());
                for (const auto& x : *sol) EXPECT_TRUE(x.is_integer());
            }
        // The identity lies in the span.
        const IntMatrix identity = int_identity(n);
        std::vector<Rational> id;
        for (const auto& x : identity.data()) id.emplace_back(x);
        EXPECT_TRUE(solve(coords, id).has_value());
    }
}

TEST(Torus, OrderExamples) {
    const auto e = fixtures::gaussian_curve();
    EXPECT_EQ(order_of(make_endomorphism(e, int_matrix({{0, -1}, {1, 0}}))), 4u);
    EXPECT_EQ(order_of(make_endomorphism(e, int_identity(2).scaled(Integer(-1)))), 2u);
    EXPECT_EQ(order_of(make_endomorphism(e, int_identity(2))), 1u);
    EXPECT_FALSE(order_of(make_endomorphism(fixtures::gaussian_square().product, fixtures::shear())).has_value());
    EXPECT_EQ(order_of(make_endomorphism(fixtures::eisenstein_curve(), fixtures::eisenstein_rotation())), 3u);
    EXPECT_EQ(order_of(make_endomorphism(fixtures::eisenstein_curve(), fixtures::eisenstein_rotation().scaled(Integer(-1)))), 6u);
    EXPECT_THROW(order_of(make_endomorphism(e, int_matrix({{1, -1}, {1, 1}}))), Error);
    EXPECT_THROW(make_endomorphism(e, int_matrix({{1, 1}, {0, 1}})), Error);
}

TEST(Torus, OrderMatchesNaiveIteration) {
    for (const auto& phi : corpus()) {
        const Integer det = determinant_bareiss(phi.matrix);
        if (abs(det) != Integer(1)) {
            EXPECT_THROW(order_of(phi), Error);
            continue;
        }
        EXPECT_EQ(order_of(phi), naive_order(phi.matrix)) << matrix_to_string(phi.matrix);
    }
    // Hyperbolic unimodular matrices are not CM automorphisms but still exercise the infinite branch.
    EXPECT_FALSE(matrix_order(int_matrix({{2, 1}, {1, 1}})).has_value());
    EXPECT_EQ(matrix_order(int_matrix({{0, 1}, {-1, -1}})), 3u);
}

TEST(Torus, CharacteristicPolynomial) {
    EXPECT_EQ(characteristic_polynomial(int_matrix({{0, -1}, {1, 0}})),
              (std::vector<Integer>{Integer(1), Integer(0), Integer(1)}));
    for (const auto& phi : corpus()) {
        const auto c = characteristic_polynomial(phi.matrix);
        // c(1) = det(I - M) for even dimension.
        Integer at_one(0);
        for (const auto& x : c) at_one += x;
        EXPECT_EQ(abs(at_one), fixed_point_count(phi));
    }
}

TEST(Torus, FixedPointCountExamples) {
    const auto e = fixtures::gaussian_curve();
    EXPECT_EQ(fixed_point_count(make_endomorphism(e, int_identity(2))), Integer(0));
    EXPECT_EQ(fixed_point_count(make_endomorphism(e, int_matrix({{0, -1}, {1, 0}}))), Integer(2));
    EXPECT_EQ(fixed_point_count(make_endomorphism(e, int_identity(2).scaled(Integer(-1)))), Integer(4));
}

TEST(Torus, AffineFixedPointExamples) {
    const auto e = fixtures::gaussian_curve();
    const auto J = make_endomorphism(e, int_matrix({{0, -1}, {1, 0}}));
    const auto fixed = affine_fixed_points(J, TorsionPoint::zero(2));
    EXPECT_EQ(fixed.count, Integer(2));
    EXPECT_EQ(fixed.representatives, (std::vector<TorsionPoint>{pt({"0", "0"}), pt({"1/2", "1/2"})}));

    const auto minus = affine_fixed_points(make_endomorphism(e, int_identity(2).scaled(Integer(-1))), TorsionPoint::zero(2));
    EXPECT_EQ(minus.representatives, torsion_points(2, 2));

    EXPECT_THROW(affine_fixed_points(make_endomorphism(e, int_identity(2)), pt({"1/3", "0"})), Error);
    const auto e2 = fixtures::gaussian_square().product;
    EXPECT_THROW(affine_fixed_points(make_endomorphism(e2, fixtures::shear()), TorsionPoint::zero(4)), Error);
}

TEST(Torus, DeterminantIdentityAgainstBruteForce) {
    std::size_t checked = 0;
    for (const auto& phi : corpus()) {
        const Integer count = fixed_point_count(phi);
        if (count.is_zero() || count > Integer(64)) continue;
        const auto n = static_cast<unsigned>(count.to_long());
        if (phi.matrix.rows() == 4 && n > 16) continue;
        const auto listed = affine_fixed_points(phi, TorsionPoint::zero(phi.matrix.rows()));
        EXPECT_EQ(listed.representatives.size(), static_cast<std::size_t>(n));
        EXPECT_EQ(brute_force_fixed(phi.matrix, TorsionPoint::zero(phi.matrix.rows()), n), static_cast<std::size_t>(n))
            << matrix_to_string(phi.matrix);
        // The fixed points of x -> M x + a form a coset of the kernel.
        const auto a = TorsionPoint(std::vector<Rational>(phi.matrix.rows(), Rational(Integer(1), Integer(3))));
        const auto shifted = affine_fixed_points(phi, a);
        EXPECT_EQ(shifted.count, count);
        for (const auto& x : shifted.representatives) EXPECT_EQ(x.apply(phi.matrix) + a, x);
        std::set<TorsionPoint> diffs;
        for (const auto& x : shifted.representatives) diffs.insert(x - shifted.representatives.front());
        EXPECT_EQ(std::vector<TorsionPoint>(diffs.begin(), diffs.end()), listed.representatives);
        ++checked;
    }
    EXPECT_GE(checked, 20u);
}

TEST(Torus, TorsionGroups) {
    EXPECT_EQ(torsion_group(fixtures::gaussian_curve(), 2).points.size(), 4u);
    EXPECT_EQ(torsion_group(fixtures::cm_product().product, 3).points.size(), 81u);
    EXPECT_THROW(torsion_points(8, 7, 1000), Error);
    for (const auto& x : torsion_points(2, 6)) EXPECT_TRUE(Integer::mod(Integer(6), x.level()).is_zero());
}

TEST(Torus, PowerTrivialOnTorsion) {
    const auto e2 = fixtures::gaussian_square().product;
    const auto shear = make_endomorphism(e2, fixtures::shear());
    EXPECT_EQ(power_trivial_on_torsion(shear, 2), 2u);
    EXPECT_EQ(power_trivial_on_torsion(shear, 7), 7u);
    EXPECT_EQ(power_trivial_on_torsion(shear, 1), 1u);
    const auto J = make_endomorphism(fixtures::gaussian_curve(), int_matrix({{0, -1}, {1, 0}}));
    EXPECT_EQ(power_trivial_on_torsion(J, 2), 2u);
    EXPECT_EQ(power_trivial_on_torsion(J, 1), 1u);
    for (const auto& phi : corpus()) {
        if (abs(determinant_bareiss(phi.matrix)) != Integer(1)) continue;
        for (unsigned n : {2u, 3u, 5u, 7u}) {
            const auto k = power_trivial_on_torsion(phi, n);
            EXPECT_EQ(k, naive_torsion_power(phi.matrix, n));
            for (unsigned m : {2u, 3u}) EXPECT_EQ(power_trivial_on_torsion(phi, n * m) % k, 0u);
        }
    }
}

TEST(Quotient, Examples) {
    const auto e = fixtures::gaussian_curve();
    const auto trivial = quotient_by_subgroup(e, {});
    EXPECT_EQ(trivial.index, Integer(1));
    EXPECT_TRUE(trivial.projection.is_identity());

    const auto q = quotient_by_subgroup(e, {pt({"1/2", "1/2"})});
    EXPECT_EQ(q.index, Integer(2));
    EXPECT_EQ(q.torus.J * q.torus.J, to_surd(int_identity(2).scaled(Integer(-1))));
    const auto J = make_endomorphism(e, int_matrix({{0, -1}, {1, 0}}));
    const auto induced = induced_map_on_quotient(J, q);
    EXPECT_EQ(induced.matrix * induced.matrix, int_identity(2).scaled(Integer(-1)));

    const auto four = quotient_by_subgroup(e, {pt({"1/2", "0"}), pt({"0", "1/2"})});
    EXPECT_EQ(four.index, Integer(4));
    const auto minus = induced_map_on_quotient(make_endomorphism(e, int_identity(2).scaled(Integer(-1))), four);
    EXPECT_EQ(minus.matrix, int_identity(2).scaled(Integer(-1)));

    // (1/2,0,0,0) is not shear-stable: the shear sends it to (1/2,0,1/2,0).
    const auto e2 = fixtures::gaussian_square().product;
    const auto h = quotient_by_subgroup(e2, {pt({"1/2", "0", "0", "0"})});
    EXPECT_FALSE(in_subgroup(h, pt({"1/2", "0", "0", "0"}).apply(fixtures::shear())));
    EXPECT_THROW(induced_map_on_quotient(make_endomorphism(e2, fixtures::shear()), h), Error);
    const auto stable = quotient_by_subgroup(e2, {pt({"0", "0", "1/2", "0"})});
    EXPECT_NO_THROW(induced_map_on_quotient(make_endomorphism(e2, fixtures::shear()), stable));
}

TEST(Quotient, IndexEqualsSubgroupOrder) {
    const auto e = fixtures::gaussian_curve();
    for (unsigned n : {2u, 3u, 4u, 6u}) {
        for (const auto& h : enumerate_subgroups(2, n)) {
            const auto q = quotient_by_subgroup(e, h);
            EXPECT_EQ(q.index, Integer(static_cast<long>(h.size())));
            for (const auto& x : h) EXPECT_TRUE(q.project(x).is_zero());
            for (const auto& x : torsion_points(2, n)) {
                const bool inside = std::find(h.begin(), h.end(), x) != h.end();
                EXPECT_EQ(in_subgroup(q, x), inside);
            }
        }
    }
}

TEST(Quotient, InducedMapCommutesWithProjection) {
    const auto e = fixtures::gaussian_curve();
    const auto J = make_endomorphism(e, int_matrix({{0, -1}, {1, 0}}));
    for (const auto& h : enumerate_subgroups(2, 4)) {
        const auto q = quotient_by_subgroup(e, h);
        bool stable = true;
        for (const auto& x : h) stable = stable && in_subgroup(q, x.apply(J.matrix));
        if (!stable) {
            EXPECT_THROW(induced_map_on_quotient(J, q), Error);
            continue;
        }
        const auto induced = induced_map_on_quotient(J, q);
        EXPECT_EQ(q.torus.J * to_surd(induced.matrix), to_surd(induced.matrix) * q.torus.J);
        for (unsigned level = 2; level <= 12; ++level)
            for (const auto& x : torsion_points(2, level))
                EXPECT_EQ(q.project(x.apply(J.matrix)), q.project(x).apply(induced.matrix));
    }
}

TEST(Quotient, SubgroupEnumeration) {
    // Subgroups of (Z/2)^2: 0, three of order 2, the whole group.
    EXPECT_EQ(enumerate_subgroups(2, 2).size(), 5u);
    // Subgroups of (Z/3)^2: 1 + 4 + 1.
    EXPECT_EQ(enumerate_subgroups(2, 3).size(), 6u);
    EXPECT_EQ(generated_subgroup({pt({"1/2", "1/3"})}, 2).size(), 6u);
}

TEST(Automorphisms, UnitGroups) {
    EXPECT_EQ(enumerate_finite_automorphisms(fixtures::gaussian_curve(), 1).elements.size(), 4u);
    EXPECT_EQ(enumerate_finite_automorphisms(fixtures::eisenstein_curve(), 1).elements.size(), 6u);
    const auto product = enumerate_finite_automorphisms(fixtures::cm_product().product);
    EXPECT_EQ(product.elements.size(), 24u);
    EXPECT_TRUE(product.closed);
    EXPECT_TRUE(product.elements.front().is_identity());
    // Larger boxes find nothing new for these orders.
    EXPECT_EQ(enumerate_finite_automorphisms(fixtures::gaussian_curve(), 5).elements.size(), 4u);
    EXPECT_EQ(enumerate_finite_automorphisms(fixtures::eisenstein_curve(), 5).elements.size(), 6u);
    EXPECT_THROW(enumerate_finite_automorphisms(fixtures::gaussian_square().product, 3), Error);
}

TEST(Automorphisms, SimplicityScreen) {
    EXPECT_TRUE(simplicity_screen(fixtures::gaussian_curve()));
    EXPECT_TRUE(simplicity_screen(fixtures::eisenstein_curve()));
    EXPECT_FALSE(simplicity_screen(fixtures::cm_product().product));
    EXPECT_FALSE(simplicity_screen(fixtures::gaussian_square().product));
}

TEST(Decomposition, ConditionStar) {
    const auto d = fixtures::cm_product();
    const auto ok = check_condition_star(d, 7);
    EXPECT_TRUE(ok.ok);
    ASSERT_TRUE(ok.witness.has_value());
    EXPECT_EQ(ok.witness->count, Integer(4));
    std::multiset<long> first, second;
    for (const auto& entry : ok.table) (entry.factor == 0 ? first : second).insert(entry.count.to_long());
    EXPECT_EQ(first, (std::multiset<long>{4, 2, 2}));
    EXPECT_EQ(second, (std::multiset<long>{4, 3, 3, 1, 1}));

    const auto bad = check_condition_star(d, 3);
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.witness->count, Integer(4));

    const auto glued = check_condition_star(fixtures::glued_product(), 7);
    EXPECT_TRUE(glued.ok);
    EXPECT_EQ(glued.witness->count, Integer(4));
}

TEST(Decomposition, ConditionDoubleStar) {
    const auto d = fixtures::cm_product();
    EXPECT_TRUE(check_condition_double_star(pt({"1/7", "0", "1/7", "0"}), d, 7).ok);
    EXPECT_FALSE(check_condition_double_star(pt({"1/7", "0", "0", "0"}), d, 7).ok);
    EXPECT_FALSE(check_condition_double_star(pt({"1/2", "0", "1/7", "0"}), d, 7).ok);
    EXPECT_FALSE(check_condition_double_star(TorsionPoint::zero(4), d, 7).ok);
    // On the glued example a point is judged modulo Sigma.
    const auto g = fixtures::glued_product();
    EXPECT_TRUE(check_condition_double_star(pt({"1/7", "0", "1/7", "0"}), g, 7).ok);
    EXPECT_TRUE(check_condition_double_star(pt({"1/2", "0", "1/2", "0"}) + pt({"1/7", "0", "1/7", "0"}), g, 7).ok);
}

TEST(Decomposition, Validation) {
    EXPECT_THROW(make_decomposition({fixtures::gaussian_curve(), fixtures::eisenstein_curve()}, {pt({"1/2", "0", "0", "0"})}),
                 Error);
    const auto g = fixtures::glued_product();
    EXPECT_EQ(g.N(), Integer(2));
    EXPECT_EQ(g.abelian_variety().index, Integer(2));
    const auto x = pt({"1/3", "2/3", "1/5", "0"});
    EXPECT_EQ(g.embed(g.component(x, 0), 0) + g.embed(g.component(x, 1), 1), x);
}

TEST(Decomposition, QuotientDatum) {
    const auto P = fixtures::default_point(7);
    const auto trivial = derive_quotient_datum(fixtures::cm_product(), P, 7);
    EXPECT_EQ(trivial.N, Integer(1));
    EXPECT_EQ(trivial.N_prime, Integer(1));
    EXPECT_EQ(trivial.K_order, Integer(1));
    EXPECT_TRUE(trivial.passed());
    EXPECT_EQ(trivial.derived.h(), 1u);

    const auto glued = derive_quotient_datum(fixtures::glued_product(), P, 7);
    EXPECT_EQ(glued.N, Integer(2));
    EXPECT_EQ(glued.N_prime * glued.K_order, glued.N);
    EXPECT_TRUE(glued.identity_holds);
    EXPECT_TRUE(glued.star.ok);
    EXPECT_TRUE(glued.double_star.ok);
    ASSERT_EQ(glued.intersections.size(), 1u);
    EXPECT_EQ(glued.intersections[0].size(), 2u);

    // K = Sigma cap ker(pi) counted directly: elements of Sigma whose image in A' vanishes.
    const auto& d = fixtures::glued_product();
    std::size_t k = 0;
    for (const auto& s : d.sigma) {
        const auto second = d.component(s, 1);
        bool in_intersection = false;
        for (const auto& y : glued.intersections[0]) in_intersection = in_intersection || y == second;
        if (in_intersection) ++k;
    }
    EXPECT_EQ(Integer(static_cast<long>(k)), glued.K_order);

    EXPECT_THROW(derive_quotient_datum(make_decomposition({fixtures::gaussian_curve()}, {}), pt({"1/7", "0"}), 7), Error);
}
