#pragma once

#include <functional>

#include "lrp/geometry.hpp"
#include "lrp/params.hpp"
#include "lrp/rng.hpp"

namespace lrp {

// Bridging-point law: density proportional to exp(-eta beta c0 |z|^{2d}).
// Radially, T = |Z|^{2d} is Gamma(1/2, rate eta beta c0) (substituting
// t = r^{2d} into the radial density r^{d-1} e^{-a r^{2d}}), so T is drawn as
// N^2/(2a); the direction is cone-uniform on the norm sphere.
Vec sample_Z(const ModelParams& p, const DerivedConstants& dc, RngStream& rng);

// Same law through the Ahrens-Dieter rejection sampler for the radial part;
// independent algorithmic route kept as the validation oracle.
Vec sample_Z_rejection(const ModelParams& p, const DerivedConstants& dc, RngStream& rng);

// Exponential-tail fit of |log |Z||, used to pick the truncation order of the
// infinite product defining W.
struct WTailFit {
  double lambda = 0.0;  // survival ~ C e^{-lambda t}
  double log_c = 0.0;
  double q_hi = 0.0;  // extrapolated 1 - 1e-6 quantile
};
WTailFit fit_w_tail(const ModelParams& p, const DerivedConstants& dc, RngStream rng,
                    int n_calib = 200000);

// Smallest K such that the truncated tail prod_{k>K} |Z_k|^{gamma^k} lies in
// [e^-tol, e^tol] except with probability <= 1e-6; *bound receives the log
// tail bound actually achieved.
int choose_truncation(double gamma, double tol, const WTailFit& fit, double* bound);

struct WSample {
  Vec w;
  int K = 0;
  double tail_bound = 0.0;
};

// W = Z_0 * prod_{k=1..K} |Z_k|^{gamma^k}, truncated per choose_truncation.
WSample sample_W(const ModelParams& p, const DerivedConstants& dc, double tol,
                 RngStream& rng, const WTailFit& fit);

// Two-sample KS statistic between |W| and |W'|^{gamma} |Z'| on N draws per
// side (independent draws on each side). gamma_exponent overrides the model
// gamma when >= 0 (negative controls).
double fixed_point_statistic(const ModelParams& p, const DerivedConstants& dc, int n,
                             const SeedSpec& seed, double tol = 1e-3,
                             double gamma_exponent = -1.0);

using DistSampler = std::function<double(const Vec& target, RngStream& rng)>;

struct SubadditivityDraw {
  double gamma1 = 0.0, gamma2 = 0.0;
  double theta = 0.0;  // 2d[(1+gamma)/2 - max(gamma1, gamma2)]
  Vec z, z_prime;
  bool a_event = false;  // forced on when the smallness conditions fail
  double rhs_value = 0.0;
};

// One realization of the right side of the subadditivity bound:
//   D~(0, |x|^{g1} Z) + D~'(0, |x|^{g2} Z') + 1 + |x| 1_{A(x)},
// with A(x) = {|Z| > |x|^{(1+g)/2-g1}} u {|Z'| > |x|^{(1+g)/2-g2}}, forced on
// when 1 + 2|x|^{-(1-g)/2} > eta^{-1/s} or 4|x|^{(1+g)/2} >= |x|. The two
// distance replicas come from independent derived streams.
SubadditivityDraw subadditivity_draw(const ModelParams& p, const DerivedConstants& dc,
                                     const Vec& x, double gamma1, double gamma2,
                                     const DistSampler& dist_sampler,
                                     const RngStream& base);

}  // namespace lrp
