#include "lrp/geometry.hpp"

#include <algorithm>

namespace lrp {

double norm_len(const Vec& v, Norm norm) {
  switch (norm) {
    case Norm::L1: {
      double s = 0.0;
      for (int i = 0; i < v.d; ++i) s += std::fabs(v.x[i]);
      return s;
    }
    case Norm::L2: {
      double s = 0.0;
      for (int i = 0; i < v.d; ++i) s += v.x[i] * v.x[i];
      return std::sqrt(s);
    }
    case Norm::Linf: {
      double m = 0.0;
      for (int i = 0; i < v.d; ++i) m = std::max(m, std::fabs(v.x[i]));
      return m;
    }
  }
  return 0.0;
}

double euclid_len(const Vec& v) {
  double s = 0.0;
  for (int i = 0; i < v.d; ++i) s += v.x[i] * v.x[i];
  return std::sqrt(s);
}

const char* norm_name(Norm n) {
  switch (n) {
    case Norm::L1:
      return "l1";
    case Norm::L2:
      return "l2";
    case Norm::Linf:
      return "linf";
  }
  return "?";
}

Norm norm_from_name(const std::string& s) {
  if (s == "l1" || s == "L1") return Norm::L1;
  if (s == "l2" || s == "L2") return Norm::L2;
  if (s == "linf" || s == "LINF" || s == "Linf") return Norm::Linf;
  throw std::invalid_argument("unknown norm '" + s + "' (expected l1|l2|linf)");
}

double unit_ball_volume(int d, Norm norm) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("dimension out of range");
  switch (norm) {
    case Norm::L2:
      return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
    case Norm::L1: {
      double fact = 1.0;
      for (int i = 2; i <= d; ++i) fact *= i;
      return std::pow(2.0, d) / fact;
    }
    case Norm::Linf:
      return std::pow(2.0, d);
  }
  return 0.0;
}

}  // namespace lrp
