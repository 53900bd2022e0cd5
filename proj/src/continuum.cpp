#include "lrp/continuum.hpp"

#include <algorithm>
#include <cmath>

#include "lrp/quadrature.hpp"

namespace lrp {

ContinuumEdge canonical_edge(const Vec& a, const Vec& b) {
  double ea = euclid_len(a), eb = euclid_len(b);
  bool a_first = ea < eb || (ea == eb && lex_less(a, b));
  return a_first ? ContinuumEdge{a, b} : ContinuumEdge{b, a};
}

namespace {

double lens_area_2d(double R, double t) {
  // Area of intersection of two disks of radius R at center distance t.
  if (t >= 2.0 * R) return 0.0;
  if (t <= 0.0) return M_PI * R * R;
  return 2.0 * R * R * std::acos(t / (2.0 * R)) -
         0.5 * t * std::sqrt(4.0 * R * R - t * t);
}

double lens_volume_3d(double R, double t) {
  if (t >= 2.0 * R) return 0.0;
  if (t <= 0.0) return 4.0 / 3.0 * M_PI * R * R * R;
  return M_PI * (4.0 * R + t) * (2.0 * R - t) * (2.0 * R - t) / 12.0;
}

inline double seg_overlap(double Ra, double Rb, double delta) {
  // Length of [-Ra, Ra] \cap [delta - Rb, delta + Rb].
  double lo = std::max(-Ra, delta - Rb);
  double hi = std::min(Ra, delta + Rb);
  return hi > lo ? hi - lo : 0.0;
}

// Area of intersection of two l1 balls (diamonds) in the plane with radii
// R1, R2 and center offset (px, py). The shear (x,y) -> (x+y, x-y) maps both
// to axis-aligned squares and doubles areas.
double diamond_intersection_area(double R1, double R2, double px, double py) {
  if (R1 <= 0.0 || R2 <= 0.0) return 0.0;
  double qx = px + py, qy = px - py;
  return 0.5 * seg_overlap(R1, R2, qx) * seg_overlap(R1, R2, qy);
}

// Vol(O(0,M) \cap O(w,M)) for octahedra (l1 balls) in d=3, by slicing along
// the third axis; each cross-section is a diamond intersection.
double octahedron_overlap(double M, double w1, double w2, double w3) {
  double lo = std::max(-M, w3 - M);
  double hi = std::min(M, w3 + M);
  if (hi <= lo) return 0.0;
  auto slice = [&](double z) {
    double R1 = M - std::fabs(z);
    double R2 = M - std::fabs(z - w3);
    return diamond_intersection_area(R1, R2, w1, w2);
  };
  // Kinks at z = 0 and z = w3; split there for clean convergence.
  std::vector<double> cuts = {lo, hi};
  if (0.0 > lo && 0.0 < hi) cuts.push_back(0.0);
  if (w3 > lo && w3 < hi) cuts.push_back(w3);
  std::sort(cuts.begin(), cuts.end());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    s += integrate_gl(slice, cuts[i], cuts[i + 1], 32);
  return s;
}

// Cone average of octahedron_overlap over directions r*theta, |theta|_1 = 1.
// Directions are uniform over faces: (a,b,c) uniform on the simplex with
// independent uniform signs; the slice axis is sign-symmetric so only the
// four (s1, s2) combinations matter.
double l1_d3_overlap_avg(double M, double r) {
  if (r >= 2.0 * M) return 0.0;
  const GaussRule& g = gauss_legendre(16);
  double total = 0.0;
  // Duffy map: a = u(1-v), b = uv, c = 1-u with Jacobian u over [0,1]^2.
  for (int i = 0; i < 16; ++i) {
    double u = 0.5 * (g.nodes[i] + 1.0);
    double wu = 0.5 * g.weights[i];
    for (int j = 0; j < 16; ++j) {
      double v = 0.5 * (g.nodes[j] + 1.0);
      double wv = 0.5 * g.weights[j];
      double a = u * (1.0 - v), b = u * v, c = 1.0 - u;
      double jac = u;
      double acc = 0.0;
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2)
          acc += octahedron_overlap(M, s1 * r * a, s2 * r * b, r * c);
      total += wu * wv * jac * 2.0 * acc / 4.0;  // simplex area = 1/2, weight 2
    }
  }
  return total;
}

}  // namespace

double ball_overlap_profile(int d, Norm norm, double M, double r) {
  if (r < 0.0) r = -r;
  if (d == 1) return std::max(0.0, 2.0 * M - r);
  if (r >= 2.0 * M) return 0.0;
  switch (norm) {
    case Norm::L2:
      if (d == 2) return lens_area_2d(M, r);
      return lens_volume_3d(M, r);
    case Norm::Linf:
      return (2.0 * M - r) * std::pow(2.0 * M - 0.5 * r, d - 1);
    case Norm::L1:
      if (d == 2) return 0.5 * (2.0 * M - r) * (2.0 * M - 0.5 * r);
      return l1_d3_overlap_avg(M, r);
  }
  return 0.0;
}

double expected_edge_mass(const ModelParams& p, const Window& w, double ell_lo,
                          double ell_hi) {
  validate_params(p);
  const double M = w.radius;
  if (ell_lo == ell_hi) return 0.0;
  if (!(ell_lo >= 1.0) || !(ell_hi > ell_lo) || !(ell_hi <= 2.0 * M + 1e-9))
    throw std::invalid_argument("expected_edge_mass: band must satisfy 1 <= lo < hi <= 2M");
  if (p.d == 1) {
    // beta * [2M w^{1-s}/(1-s) - w^{2-s}/(2-s)] over the band, exactly.
    auto F = [&](double x) {
      return 2.0 * M * std::pow(x, 1.0 - p.s) / (1.0 - p.s) -
             std::pow(x, 2.0 - p.s) / (2.0 - p.s);
    };
    return p.beta * (F(ell_hi) - F(ell_lo));
  }
  const double dV = p.d * unit_ball_volume(p.d, p.norm);
  auto f = [&](double r) {
    return std::pow(r, p.d - 1.0 - p.s) * ball_overlap_profile(p.d, p.norm, M, r);
  };
  return 0.5 * p.beta * dV * integrate_logsplit(f, ell_lo, ell_hi);
}

double expected_edge_mass_unclipped(const ModelParams& p, const Window& w,
                                    double ell_lo, double ell_hi) {
  validate_params(p);
  if (!(ell_hi > ell_lo)) return 0.0;
  const double V = unit_ball_volume(p.d, p.norm);
  const double vol_b = V * std::pow(w.radius, p.d);
  const double q = p.d - p.s;  // < 0
  double band = (std::pow(ell_hi, q) - std::pow(ell_lo, q)) / q;
  return 0.5 * p.beta * vol_b * p.d * V * band;
}

Vec uniform_in_ball(int d, Norm norm, double radius, RngStream& rng) {
  // Rejection from the bounding cube; acceptance >= 1/6 for d <= 3.
  for (;;) {
    Vec v = Vec::zero(d);
    for (int i = 0; i < d; ++i) v.x[i] = rng.uniform(-1.0, 1.0);
    double n = norm_len(v, norm);
    if (n <= 1.0 && n > 0.0) return radius * v;
  }
}

Vec cone_direction(int d, Norm norm, RngStream& rng) {
  Vec v = uniform_in_ball(d, norm, 1.0, rng);
  return (1.0 / norm_len(v, norm)) * v;
}

EdgeSample sample_continuum_edges(const ModelParams& p, const Window& w, double ell_min,
                                  const SeedSpec& seed, double budget) {
  validate_params(p);
  if (!(w.radius >= 1.0)) throw std::invalid_argument("window radius must be >= 1");
  if (!(ell_min >= 1.0)) throw std::invalid_argument("ell_min must be >= 1");
  EdgeSample out;
  out.params = p;
  out.window = w;
  out.ell_min = ell_min;
  out.seed = seed;
  const double hi = 2.0 * w.radius;
  if (ell_min >= hi) return out;  // no admissible lengths fit the window

  double mu_bar = expected_edge_mass_unclipped(p, w, ell_min, hi);
  if (mu_bar > budget) throw BudgetError(mu_bar);

  RngStream rng(seed);
  uint64_t n_cand = rng.poisson(mu_bar);
  out.edges.reserve(static_cast<std::size_t>(n_cand * 0.9));
  const double len_exp = p.d - 1.0 - p.s;
  for (uint64_t i = 0; i < n_cand; ++i) {
    double ru = std::pow(rng.uniform01(), 1.0 / p.d) * w.radius;
    Vec u = w.center + ru * cone_direction(p.d, p.norm, rng);
    double len = rng.power_band(ell_min, hi, len_exp);
    Vec v = u + len * cone_direction(p.d, p.norm, rng);
    if (norm_len(v - w.center, p.norm) <= w.radius)
      out.edges.push_back(canonical_edge(u, v));
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const ContinuumEdge& a, const ContinuumEdge& b) {
              if (lex_less(a.u, b.u)) return true;
              if (lex_less(b.u, a.u)) return false;
              return lex_less(a.v, b.v);
            });
  return out;
}

EdgeSample subsample_window(const EdgeSample& sample, const Window& inner) {
  if (!ball_subset(Ball{inner.center, inner.radius},
                   Ball{sample.window.center, sample.window.radius},
                   sample.params.norm))
    throw std::invalid_argument("subsample_window: inner window not contained");
  EdgeSample out;
  out.params = sample.params;
  out.window = inner;
  out.ell_min = sample.ell_min;
  out.seed = sample.seed;
  const Norm nm = sample.params.norm;
  for (const auto& e : sample.edges) {
    if (norm_len(e.u - inner.center, nm) <= inner.radius &&
        norm_len(e.v - inner.center, nm) <= inner.radius)
      out.edges.push_back(e);
  }
  return out;
}

}  // namespace lrp
