#pragma once

#include <cstdint>
#include <vector>

#include "lrp/params.hpp"
#include "lrp/randomization.hpp"
#include "lrp/rng.hpp"

namespace lrp {

// Named tolerance bands; desk-scale allowances for the o(1) terms.
inline constexpr double kDoublingRatioLo = 1.7;
inline constexpr double kDoublingRatioHi = 2.3;
inline constexpr double kDeltaBandLo = 0.80;   // times the target exponent
inline constexpr double kDeltaBandHi = 1.25;
inline constexpr double kLadderMonotoneC = 2.0;
inline constexpr double kWTolDefault = 1e-3;

struct LadderLevel {
  int n = 0;
  double scale = 0.0;                // r^{gamma^{-n}}
  std::vector<double> rep_means;     // per-W mean of scaled values
  std::vector<double> values;        // all scaled values (rep-major order)
  double m = 0.0;                    // mean of 2^{-n} D~(0, scale W)
  double se = 0.0;                   // clustered by W draw
  double a_hat = 0.0;                // variance of per-W conditional means
  double b_hat = 0.0;                // mean of per-W conditional variances
  double c_hat = 0.0;                // m^2
};

struct ScalingLadder {
  ModelParams params;
  double r = 0.0;
  int n_max = 0;
  int replicates = 0;
  int replicas_per_w = 0;
  double w_tol = kWTolDefault;
  std::vector<LadderLevel> levels;
  bool truncated = false;
  long long edges_sampled = 0;
};

// Monte Carlo ladder of 2^{-n} D~(0, r^{gamma^{-n}} W): per level and
// replicate draws one W and replicas_per_w independent edge samples. The
// growing-scale convention r^{gamma^{-n}} is used throughout (the shrinking
// variant collapses to |W|-scale values).
ScalingLadder run_ladder(const ModelParams& p, double r, int n_max, int replicates,
                         int replicas_per_w, const SeedSpec& seed, int threads = 1,
                         double budget = kDefaultEdgeBudget,
                         double w_tol = kWTolDefault);

struct LEstimate {
  double L = 0.0;
  double se = 0.0;
  double c_fit = 0.0;         // smallest C >= 0 with m_{n+1} <= m_n + C 2^{-n}
  bool monotone_flagged = false;  // violation beyond CI slack at C = kLadderMonotoneC
};
LEstimate estimate_L(const ScalingLadder& ladder, double c_ref = kLadderMonotoneC);

struct PhiPoint {
  double r = 0.0;
  double phi = 0.0;
  double se = 0.0;
};
PhiPoint phi_from_ladder(const ScalingLadder& ladder);

// Log-uniform grid of n_points in [e^gamma, e].
std::vector<double> phi_grid(double gamma, int n_points);

struct DeltaScaleRow {
  int64_t x = 0;
  double mean_log_d = 0.0;
  double se = 0.0;
};
struct DeltaFit {
  double slope = 0.0;
  double slope_se = 0.0;
  double intercept = 0.0;
  std::vector<DeltaScaleRow> rows;
};

// Regresses mean log D^dis(0, x e1) on log log x over lattice scales.
DeltaFit delta_regression(const ModelParams& p, const std::vector<int64_t>& scales,
                          int replicates, const SeedSpec& seed, int threads = 1,
                          double budget = kDefaultEdgeBudget);

struct TailRow {
  int64_t x = 0;
  int32_t n = 0;
  int64_t hits = 0;
  int64_t reps = 0;
  bool censored = false;  // zero hits; excluded from the fit
};
struct TailFitResult {
  std::vector<TailRow> rows;            // primary coefficient rows
  double slope = 0.0;                   // log P-hat vs log x over uncensored rows
  double slope_se = 0.0;
  double c1_hat = 0.0, c2_hat = 0.0;    // fitted constants of the tail bound
  std::vector<std::pair<double, double>> c_sweep;  // (c, P-hat) at largest x
};

// Estimates P(D^dis(0, x) <= n) with n = coef (log x)^Delta; a second
// coefficient row identifies c2 separately from the |x|^{-s} decay, and the
// c-sweep reuses the distance draws at the largest scale.
TailFitResult tail_check(const ModelParams& p, const std::vector<int64_t>& x_list,
                         double coef, double coef2, const std::vector<double>& sweep_coefs,
                         int replicates, const SeedSpec& seed, int threads = 1,
                         double budget = kDefaultEdgeBudget);

struct DominationResult {
  double statistic = 0.0;  // sup_t (F_rhs - F_lhs)
  double critical = 0.0;
  bool pass = false;
};
// One-sided two-sample KS test of F_lhs >= F_rhs - band (lhs stochastically
// dominated by rhs), at the given level.
DominationResult domination_test(const std::vector<double>& lhs,
                                 const std::vector<double>& rhs, double alpha = 0.01);

}  // namespace lrp
