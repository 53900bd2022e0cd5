#include "lrp/randomization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lrp/continuum.hpp"
#include "lrp/stats.hpp"

namespace lrp {

Vec sample_Z(const ModelParams& p, const DerivedConstants& dc, RngStream& rng) {
  double rate = p.eta * p.beta * dc.c0;
  double t = rng.gamma_half(rate);
  double radius = std::pow(t, 1.0 / (2.0 * p.d));
  return radius * cone_direction(p.d, p.norm, rng);
}

Vec sample_Z_rejection(const ModelParams& p, const DerivedConstants& dc, RngStream& rng) {
  double rate = p.eta * p.beta * dc.c0;
  double t = rng.gamma_half_rejection() / rate;
  double radius = std::pow(t, 1.0 / (2.0 * p.d));
  return radius * cone_direction(p.d, p.norm, rng);
}

WTailFit fit_w_tail(const ModelParams& p, const DerivedConstants& dc, RngStream rng,
                    int n_calib) {
  std::vector<double> a(n_calib);
  for (int i = 0; i < n_calib; ++i) {
    Vec z = sample_Z(p, dc, rng);
    a[i] = std::fabs(std::log(norm_len(z, p.norm)));
  }
  std::sort(a.begin(), a.end());
  auto quantile = [&](double q) {
    std::size_t idx = static_cast<std::size_t>(q * (n_calib - 1));
    return a[idx];
  };
  double q90 = quantile(0.90), q999 = quantile(0.999);
  WTailFit fit;
  fit.lambda = std::log(0.10 / 0.001) / std::max(q999 - q90, 1e-9);
  // Survival C e^{-lambda t} through (q90, 0.10), inflated 2x for safety.
  fit.log_c = std::log(0.10) + fit.lambda * q90 + std::log(2.0);
  fit.q_hi = (fit.log_c + std::log(1e6)) / fit.lambda;
  return fit;
}

int choose_truncation(double gamma, double tol, const WTailFit& fit, double* bound) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  // Allocate failure prob eps 2^{-j} to term K+j; with per-term quantile
  // q_j = (log C + log(1/p_j))/lambda the tail bound is geometric-linear:
  //   sum_{j>=1} gamma^{K+j} (A + B j) = gamma^K [A g/(1-g) + B g/(1-g)^2].
  const double eps = 1e-6;
  const double A = (fit.log_c + std::log(1.0 / eps)) / fit.lambda;
  const double B = std::log(2.0) / fit.lambda;
  const double g = gamma;
  const double bracket = A * g / (1.0 - g) + B * g / ((1.0 - g) * (1.0 - g));
  int K = 0;
  if (bracket > tol)
    K = static_cast<int>(std::ceil(std::log(tol / bracket) / std::log(g)));
  // Reported lower bound from the single-quantile argument.
  double k_floor = std::ceil(std::log(tol * (1.0 - g) / fit.q_hi) / std::log(g));
  K = std::max(K, static_cast<int>(std::max(0.0, k_floor)));
  if (bound) *bound = std::pow(g, K) * bracket;
  return K;
}

WSample sample_W(const ModelParams& p, const DerivedConstants& dc, double tol,
                 RngStream& rng, const WTailFit& fit) {
  WSample w;
  w.K = choose_truncation(dc.gamma, tol, fit, &w.tail_bound);
  Vec z0 = sample_Z(p, dc, rng);
  double log_mult = 0.0;
  double gk = 1.0;
  for (int k = 1; k <= w.K; ++k) {
    gk *= dc.gamma;
    double t = rng.gamma_half(p.eta * p.beta * dc.c0);
    // log |Z_k| = log(T)/(2d)
    log_mult += gk * std::log(t) / (2.0 * p.d);
  }
  w.w = std::exp(log_mult) * z0;
  return w;
}

double fixed_point_statistic(const ModelParams& p, const DerivedConstants& dc, int n,
                             const SeedSpec& seed, double tol, double gamma_exponent) {
  if (n < 1000) throw std::invalid_argument("fixed_point_statistic: N must be >= 1e3");
  const double ge = gamma_exponent >= 0.0 ? gamma_exponent : dc.gamma;
  RngStream base(seed);
  WTailFit fit = fit_w_tail(p, dc, base.child(0));
  RngStream lhs_rng = base.child(1);
  RngStream rhs_rng = base.child(2);
  std::vector<double> lhs(n), rhs(n);
  for (int i = 0; i < n; ++i) {
    WSample w = sample_W(p, dc, tol, lhs_rng, fit);
    lhs[i] = norm_len(w.w, p.norm);
  }
  for (int i = 0; i < n; ++i) {
    WSample w = sample_W(p, dc, tol, rhs_rng, fit);
    Vec z = sample_Z(p, dc, rhs_rng);
    rhs[i] = std::pow(norm_len(w.w, p.norm), ge) * norm_len(z, p.norm);
  }
  return ks_two_sample(std::move(lhs), std::move(rhs));
}

SubadditivityDraw subadditivity_draw(const ModelParams& p, const DerivedConstants& dc,
                                     const Vec& x, double gamma1, double gamma2,
                                     const DistSampler& dist_sampler,
                                     const RngStream& base) {
  const double gt = 0.5 * (1.0 + dc.gamma);
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || !(gamma1 < gt) || !(gamma2 < gt))
    throw std::invalid_argument("subadditivity_draw: need 0 < gamma_i < (1+gamma)/2");
  if (std::fabs(p.d * (gamma1 + gamma2) - p.s) > 1e-9)
    throw std::invalid_argument("subadditivity_draw: need d(gamma1 + gamma2) = s");

  SubadditivityDraw out;
  out.gamma1 = gamma1;
  out.gamma2 = gamma2;
  out.theta = 2.0 * p.d * (gt - std::max(gamma1, gamma2));

  RngStream zr = base.child(0);
  out.z = sample_Z(p, dc, zr);
  out.z_prime = sample_Z(p, dc, zr);

  const double ax = norm_len(x, p.norm);
  bool small_ok = (1.0 + 2.0 * std::pow(ax, -0.5 * (1.0 - dc.gamma)) <=
                   std::pow(p.eta, -1.0 / p.s)) &&
                  (4.0 * std::pow(ax, gt) < ax);
  if (!small_ok) {
    out.a_event = true;
  } else {
    out.a_event = norm_len(out.z, p.norm) > std::pow(ax, gt - gamma1) ||
                  norm_len(out.z_prime, p.norm) > std::pow(ax, gt - gamma2);
  }

  RngStream r1 = base.child(1);
  RngStream r2 = base.child(2);
  double d1 = dist_sampler(std::pow(ax, gamma1) * out.z, r1);
  double d2 = dist_sampler(std::pow(ax, gamma2) * out.z_prime, r2);
  out.rhs_value = d1 + d2 + 1.0 + (out.a_event ? ax : 0.0);
  return out;
}

}  // namespace lrp
