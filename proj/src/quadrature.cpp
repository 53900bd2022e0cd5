#include "lrp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lrp {

namespace {

GaussRule build_rule(int n) {
  // Newton iteration on Legendre polynomials (standard gauleg construction).
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-15) break;
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& r = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

double integrate_logsplit(const std::function<double(double)>& f, double a, double b,
                          int segments, int n) {
  if (!(b > a)) return 0.0;
  if (!(a > 0.0)) throw std::invalid_argument("integrate_logsplit: a must be > 0");
  if (segments <= 0)
    segments = std::max(1, static_cast<int>(std::ceil(std::log2(b / a))));
  double s = 0.0;
  double ratio = std::pow(b / a, 1.0 / segments);
  double lo = a;
  for (int k = 0; k < segments; ++k) {
    double hi = (k == segments - 1) ? b : lo * ratio;
    s += integrate_gl(f, lo, hi, n);
    lo = hi;
  }
  return s;
}

}  // namespace lrp
