#include "lrp/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lrp {

void validate_params(const ModelParams& p) {
  if (p.d < 1 || p.d > kMaxDim)
    throw std::invalid_argument("d must be in [1, " + std::to_string(kMaxDim) + "]");
  if (!(p.s > p.d) || !(p.s < 2.0 * p.d))
    throw std::invalid_argument("s must satisfy d < s < 2d (got s=" +
                                std::to_string(p.s) + ", d=" + std::to_string(p.d) + ")");
  if (!(p.beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(p.eta > 0.0) || !(p.eta <= 1.0))
    throw std::invalid_argument("eta must be in (0, 1]");
}

DerivedConstants derive_constants(const ModelParams& p) {
  validate_params(p);
  DerivedConstants c;
  c.gamma = p.s / (2.0 * p.d);
  c.delta = std::log(2.0) / std::log(1.0 / c.gamma);
  c.gamma_tilde = 0.5 * (1.0 + c.gamma);
  c.V = unit_ball_volume(p.d, p.norm);
  c.c0 = M_PI * c.V * c.V / 4.0;
  return c;
}

}  // namespace lrp
