#pragma once

#include "lspace/braid.hpp"
#include "lspace/matrix.hpp"
#include "lspace/polynomial.hpp"

namespace lspace {

class AlexanderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BurauMatrix = PolyMatrix;

/// Reduced Burau matrix of sigma_|g|^sign(g) in B_s, size (s−1)×(s−1).
///
/// Convention: sigma_i acts on the basis vectors e_{i−1}, e_i, e_{i+1} through
/// the block
///
///     [ 1   t   0 ]
///     [ 0  −t   0 ]
///     [ 0   1   1 ]
///
/// clipped at the edges (sigma_1 keeps the lower-right 2×2 part, sigma_{s−1}
/// the upper-left one, and B_2 gives the 1×1 matrix [−t]).
BurauMatrix reduced_burau(int generator, int strands);

/// Product of the generator matrices in word order.
BurauMatrix reduced_burau(const BraidWord& b);

/// Alexander polynomial of a knot closure: det(I − burau(b)) · (1 − t)/(1 − t^s),
/// normalised so that Δ(t) = Δ(t^-1) and Δ(1) = 1.
LaurentPoly1 alexander_poly(const BraidWord& b);

/// Half the exponent span of a symmetric Δ with Δ(1) = 1.
int genus_from_alexander(const LaurentPoly1& delta);

/// Coefficients all ±1, alternating in sign from +1 at the top degree.
/// Necessary (not sufficient) for Δ to come from an L-space knot.
bool lspace_form_check(const LaurentPoly1& delta);

}  // namespace lspace
