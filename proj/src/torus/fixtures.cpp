#include "abelaut/torus/fixtures.hpp"

namespace abelaut::fixtures {

LatticeTorus gaussian_curve() {
    return make_torus(RatMatrix({{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}}));
}

IntMatrix eisenstein_rotation() { return int_matrix({{0, -1}, {1, -1}}); }

LatticeTorus eisenstein_curve() {
    const Surd s = Surd::root(Rational(Integer(1), Integer(3)), 3);
    // 2W + I = [[1, -2], [2, -1]], which squares to -3I.
    return make_torus(SurdMatrix({{s, Surd(-2) * s}, {Surd(2) * s, -s}}));
}

IsogenyDecomposition cm_product() { return make_decomposition({gaussian_curve(), eisenstein_curve()}, {}); }

IsogenyDecomposition glued_product() {
    const Rational half(Integer(1), Integer(2));
    return make_decomposition({gaussian_curve(), eisenstein_curve()},
                              {TorsionPoint({half, Rational(0), half, Rational(0)})});
}

IsogenyDecomposition gaussian_square() { return make_decomposition({gaussian_curve(), gaussian_curve()}, {}); }

IntMatrix shear() { return int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}); }

TorsionPoint default_point(unsigned p) {
    const Rational x(Integer(1), Integer(static_cast<long>(p)));
    return TorsionPoint({x, Rational(0), x, Rational(0)});
}

}  // namespace abelaut::fixtures
