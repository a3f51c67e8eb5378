#pragma once

#include "abelaut/torus/decomposition.hpp"
#include "abelaut/torus/lattice.hpp"

namespace abelaut::fixtures {

// C / Z[i]: J = [[0, -1], [1, 0]].
LatticeTorus gaussian_curve();
// C / Z[zeta_6] in the basis (1, w), w = zeta_3: J = (2W + I) / sqrt(3) with W
// the matrix of multiplication by w.
LatticeTorus eisenstein_curve();
// Multiplication by w on the Eisenstein curve.
IntMatrix eisenstein_rotation();

// The two CM curves above with trivial kernel.
IsogenyDecomposition cm_product();
// Same curves glued along Sigma = <((1/2, 0), (1/2, 0))>.
IsogenyDecomposition glued_product();
// E x E for the Gaussian curve E, trivial kernel.
IsogenyDecomposition gaussian_square();
// (b1, b2) -> (b1, b1 + b2) on E x E.
IntMatrix shear();

// ((1/p, 0), (1/p, 0)) on a product of two curves.
TorsionPoint default_point(unsigned p);

}  // namespace abelaut::fixtures
