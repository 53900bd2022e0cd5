#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrp {

inline constexpr int kMaxDim = 3;

// Point in R^d, d <= kMaxDim. Components beyond d are kept at zero so that
// comparisons and norms are well defined without branching on d everywhere.
struct Vec {
  int d = 1;
  std::array<double, kMaxDim> x{};

  static Vec zero(int dim) {
    Vec v;
    v.d = dim;
    return v;
  }
  double& operator[](int i) { return x[i]; }
  double operator[](int i) const { return x[i]; }
};

inline Vec make_vec1(double a) {
  Vec v;
  v.d = 1;
  v.x[0] = a;
  return v;
}
inline Vec make_vec2(double a, double b) {
  Vec v;
  v.d = 2;
  v.x[0] = a;
  v.x[1] = b;
  return v;
}
inline Vec make_vec3(double a, double b, double c) {
  Vec v;
  v.d = 3;
  v.x[0] = a;
  v.x[1] = b;
  v.x[2] = c;
  return v;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.d; ++i) r.x[i] += b.x[i];
  return r;
}
inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.d; ++i) r.x[i] -= b.x[i];
  return r;
}
inline Vec operator*(double c, const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.d; ++i) r.x[i] *= c;
  return r;
}
inline bool operator==(const Vec& a, const Vec& b) {
  if (a.d != b.d) return false;
  for (int i = 0; i < a.d; ++i)
    if (a.x[i] != b.x[i]) return false;
  return true;
}
// Lexicographic order, used for canonical edge and path ordering.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.d; ++i) {
    if (a.x[i] < b.x[i]) return true;
    if (a.x[i] > b.x[i]) return false;
  }
  return false;
}

enum class Norm { L1, L2, Linf };

double norm_len(const Vec& v, Norm norm);
double euclid_len(const Vec& v);

const char* norm_name(Norm n);
Norm norm_from_name(const std::string& s);

// Volume of the unit ball of `norm` in dimension d.
//   L2: pi^{d/2} / Gamma(d/2 + 1),  L1: 2^d / d!,  Linf: 2^d.
double unit_ball_volume(int d, Norm norm);

// Ball in the model norm. Windows and admissibility regions are balls.
struct Ball {
  Vec center;
  double radius = 0.0;
};

inline bool ball_contains(const Ball& b, const Vec& p, Norm norm) {
  return norm_len(p - b.center, norm) <= b.radius;
}
// B(inner) subset of B(outer) iff |c_i - c_o| + r_i <= r_o (true for any norm).
inline bool ball_subset(const Ball& inner, const Ball& outer, Norm norm) {
  return norm_len(inner.center - outer.center, norm) + inner.radius <=
         outer.radius * (1.0 + 1e-12) + 1e-12;
}

}  // namespace lrp
