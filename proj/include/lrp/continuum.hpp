#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lrp/geometry.hpp"
#include "lrp/params.hpp"
#include "lrp/rng.hpp"

namespace lrp {

// Raised when an operation would exceed the configured edge-count budget.
struct BudgetError : std::runtime_error {
  double estimate;
  explicit BudgetError(double est)
      : std::runtime_error("expected edge count " + std::to_string(est) +
                           " exceeds the configured budget"),
        estimate(est) {}
};

inline constexpr double kDefaultEdgeBudget = 2.0e8;

// Observation window: ball of radius M >= 1 in the model norm.
struct Window {
  Vec center;
  double radius = 1.0;
};

// Undirected edge stored canonically: |u|_2 < |v|_2, ties broken
// lexicographically. Symmetrization happens at query time.
struct ContinuumEdge {
  Vec u, v;
};

ContinuumEdge canonical_edge(const Vec& a, const Vec& b);

// Finite realization of the Poisson edge process restricted to
// {both endpoints in window, length >= ell_min}.
struct EdgeSample {
  ModelParams params;
  Window window;
  double ell_min = 1.0;
  SeedSpec seed;
  std::vector<ContinuumEdge> edges;
};

// Mean number of unordered edges with both endpoints in the window and length
// in [ell_lo, ell_hi):
//   (1/2) beta \int\int_{B x B} 1{len in band} |u-v|^{-s} du dv.
// d = 1 uses the exact closed form beta \int (2M - w) w^{-s} dw; higher d uses
// the radial reduction with the cone-averaged overlap profile below.
double expected_edge_mass(const ModelParams& p, const Window& w, double ell_lo,
                          double ell_hi);

// Candidate-generation bound that ignores the {u + w in B} clipping; always
// >= expected_edge_mass on the same band.
double expected_edge_mass_unclipped(const ModelParams& p, const Window& w,
                                    double ell_lo, double ell_hi);

// E over cone directions of Vol(B(0,M) \cap B(r theta, M)). Closed forms for
// d=1 (any norm), L2 (d<=3), Linf (any d) and L1 (d=2); quadrature for L1 d=3.
double ball_overlap_profile(int d, Norm norm, double M, double r);

// Exact sample by Poisson candidate generation from the unclipped bound
// (u uniform in B, direction cone-uniform, length from the truncated power
// law on [ell_min, 2M]) followed by thinning on {u + w in B}. Cost is
// proportional to the candidate count, never to window volume.
EdgeSample sample_continuum_edges(const ModelParams& p, const Window& w, double ell_min,
                                  const SeedSpec& seed,
                                  double budget = kDefaultEdgeBudget);

// Restriction to an inner window; distributed exactly as a direct sample on
// the inner window (Poisson restriction property).
EdgeSample subsample_window(const EdgeSample& sample, const Window& inner);

// Cone-measure direction on the unit sphere of the norm (uniform point in the
// ball projected to the boundary) and uniform point in a ball.
Vec cone_direction(int d, Norm norm, RngStream& rng);
Vec uniform_in_ball(int d, Norm norm, double radius, RngStream& rng);

}  // namespace lrp
