#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lrp {

// Asymptotic Kolmogorov-Smirnov coefficients: critical value = coeff * sqrt(
// 1/n ) one-sample, coeff * sqrt((n+m)/(nm)) two-sample. 1.63 is the 1% level
// figure used throughout the acceptance thresholds; 1.5174 = sqrt(-ln(0.01)/2)
// is the one-sided 1% coefficient.
inline constexpr double kKsTwoSided1pct = 1.63;
inline constexpr double kKsOneSided1pct = 1.5174271293851463;
inline constexpr double kZ95 = 1.959963984540054;  // two-sided 95% normal quantile

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double var = 0.0;  // unbiased
  double se = 0.0;   // sqrt(var/n)
};

Summary summarize(const std::vector<double>& xs);

// Supremum distance between the empirical CDF of `xs` and `cdf`.
double ks_one_sample(std::vector<double> xs, const std::function<double(double)>& cdf);

// Two-sided two-sample KS statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// One-sided statistic sup_t (F_rhs(t) - F_lhs(t)). Small values are consistent
// with lhs <=_st rhs (F_lhs >= F_rhs pointwise).
double ks_two_sample_one_sided(std::vector<double> lhs, std::vector<double> rhs);

struct LinFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
};
LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

double pearson_corr(const std::vector<double>& x, const std::vector<double>& y);

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

// Exact one-sided permutation p-value for H1: rho < 0, enumerating all n!
// permutations (n <= 9).
double spearman_pvalue_negative(const std::vector<double>& x, const std::vector<double>& y);

// Upper regularized incomplete gamma Q(a, x); survival of chi-square via
// chi2_sf(x, k) = Q(k/2, x/2).
double gamma_q(double a, double x);
double chi2_sf(double x, double dof);

// Pearson chi-square homogeneity test over two count vectors of equal length.
struct Chi2Result {
  double stat = 0.0;
  double dof = 0.0;
  double pvalue = 1.0;
};
Chi2Result chi2_homogeneity(const std::vector<double>& counts_a,
                            const std::vector<double>& counts_b);
// Goodness of fit of observed counts against expected counts (same total).
Chi2Result chi2_goodness(const std::vector<double>& observed,
                         const std::vector<double>& expected);

// CDF of Gamma(shape 1/2, rate) at t: erf(sqrt(rate * t)).
double gamma_half_cdf(double t, double rate);

double normal_cdf(double t);

}  // namespace lrp
