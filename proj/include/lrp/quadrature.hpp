#pragma once

#include <functional>
#include <vector>

namespace lrp {

// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n = 32);

// Integrates f over [a, b] split geometrically into `segments` pieces; suited
// to power-law integrands spanning several decades.
double integrate_logsplit(const std::function<double(double)>& f, double a, double b,
                          int segments = 0, int n = 32);

}  // namespace lrp
