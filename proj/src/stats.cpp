#include "lrp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lrp {

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  s.n = xs.size();
  if (s.n == 0) return s;
  double m = 0.0;
  for (double x : xs) m += x;
  m /= static_cast<double>(s.n);
  double v = 0.0;
  for (double x : xs) v += (x - m) * (x - m);
  s.mean = m;
  s.var = s.n > 1 ? v / static_cast<double>(s.n - 1) : 0.0;
  s.se = std::sqrt(s.var / static_cast<double>(s.n));
  return s;
}

double ks_one_sample(std::vector<double> xs, const std::function<double(double)>& cdf) {
  if (xs.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = cdf(xs[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

namespace {

// Scans the merged order of two samples, calling f(Fa, Fb) at every step.
template <typename F>
void scan_ecdfs(std::vector<double>& a, std::vector<double>& b, F&& f) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    double t;
    if (j >= b.size() || (i < a.size() && a[i] <= b[j]))
      t = a[i];
    else
      t = b[j];
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    f(static_cast<double>(i) / na, static_cast<double>(j) / nb);
  }
}

}  // namespace

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  double d = 0.0;
  scan_ecdfs(a, b, [&](double fa, double fb) { d = std::max(d, std::fabs(fa - fb)); });
  return d;
}

double ks_two_sample_one_sided(std::vector<double> lhs, std::vector<double> rhs) {
  if (lhs.empty() || rhs.empty())
    throw std::invalid_argument("ks_two_sample_one_sided: empty sample");
  double d = 0.0;
  scan_ecdfs(lhs, rhs, [&](double fl, double fr) { d = std::max(d, fr - fl); });
  return d;
}

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: degenerate x");
  LinFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (x.size() > 2) {
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double r = y[i] - (f.intercept + f.slope * x[i]);
      ss += r * r;
    }
    f.slope_se = std::sqrt(ss / (n - 2.0) / sxx);
  }
  return f;
}

double pearson_corr(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson_corr: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson_corr(ranks(x), ranks(y));
}

double spearman_pvalue_negative(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3 || x.size() > 9)
    throw std::invalid_argument("spearman_pvalue_negative: n must be in [3, 9]");
  std::vector<double> rx = ranks(x);
  std::vector<double> ry = ranks(y);
  double rho_obs = pearson_corr(rx, ry);
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t total = 0, at_most = 0;
  std::vector<double> ry_p(y.size());
  do {
    for (std::size_t i = 0; i < y.size(); ++i) ry_p[i] = ry[perm[i]];
    double rho = pearson_corr(rx, ry_p);
    ++total;
    if (rho <= rho_obs + 1e-12) ++at_most;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(at_most) / static_cast<double>(total);
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {
    // Series for P(a, x), return 1 - P.
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
  }
  // Lentz continued fraction for Q(a, x).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

double chi2_sf(double x, double dof) { return gamma_q(0.5 * dof, 0.5 * x); }

Chi2Result chi2_homogeneity(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("chi2_homogeneity: size mismatch");
  double na = std::accumulate(a.begin(), a.end(), 0.0);
  double nb = std::accumulate(b.begin(), b.end(), 0.0);
  Chi2Result r;
  int cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double tot = a[i] + b[i];
    if (tot <= 0.0) continue;
    ++cells;
    double ea = tot * na / (na + nb);
    double eb = tot * nb / (na + nb);
    r.stat += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  r.dof = std::max(1, cells - 1);
  r.pvalue = chi2_sf(r.stat, r.dof);
  return r;
}

Chi2Result chi2_goodness(const std::vector<double>& observed,
                         const std::vector<double>& expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw std::invalid_argument("chi2_goodness: size mismatch");
  Chi2Result r;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0.0) continue;
    ++cells;
    double d = observed[i] - expected[i];
    r.stat += d * d / expected[i];
  }
  r.dof = std::max(1, cells - 1);
  r.pvalue = chi2_sf(r.stat, r.dof);
  return r;
}

double gamma_half_cdf(double t, double rate) {
  if (t <= 0.0) return 0.0;
  return std::erf(std::sqrt(rate * t));
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

}  // namespace lrp
