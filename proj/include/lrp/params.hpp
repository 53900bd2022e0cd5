#pragma once

#include "lrp/geometry.hpp"

namespace lrp {

// Model parameters for long-range percolation in the regime d < s < 2d.
struct ModelParams {
  int d = 1;
  double s = 1.5;
  double beta = 1.0;
  double eta = 1.0;  // thinning parameter in (0, 1], enters only the Z / W laws
  Norm norm = Norm::L2;
};

// Constants derived from (d, s, norm):
//   gamma = s / (2d)            in (1/2, 1)
//   delta = 1 / log2(1/gamma)   (distance exponent; gamma^delta = 1/2)
//   gamma_tilde = (1 + gamma)/2 (inflation base of the k-ladder)
//   V  = volume of the unit ball of the norm
//   c0 = pi V^2 / 4             (normalizer of the bridging-point law)
struct DerivedConstants {
  double gamma = 0.0;
  double delta = 0.0;
  double gamma_tilde = 0.0;
  double V = 0.0;
  double c0 = 0.0;
};

// Throws std::invalid_argument when any invariant fails
// (d >= 1, d < s < 2d, beta > 0, 0 < eta <= 1).
void validate_params(const ModelParams& p);

DerivedConstants derive_constants(const ModelParams& p);

}  // namespace lrp
