#pragma once

#include <vector>

#include "lrp/continuum.hpp"
#include "lrp/geometry.hpp"
#include "lrp/params.hpp"

namespace lrp {

struct PathStep {
  bool is_edge = false;
  Vec from, to;
};

// A distance value decomposed as edge count plus total straight-segment
// length; value = n_edges + seg_len exactly. The empty path (straight from x
// to y) is always admissible, so value <= |x - y|.
struct PathResult {
  double value = 0.0;
  int n_edges = 0;
  double seg_len = 0.0;
  std::vector<PathStep> path;
};

// Exact minimum of (edge count + segment lengths) over paths from x to y whose
// edge endpoints all lie in the open ball B(x, ball_radius), using the
// symmetrized edges of the sample. The optimizer is a finite shortest-path
// problem: since segments obey the triangle inequality, restricting segment
// endpoints to {x, y} + edge endpoints loses nothing. In d = 1 the segment
// graph reduces to consecutive-neighbor arcs on the sorted node positions;
// in higher d neighbors are generated lazily from a spatial grid with ring
// enumeration and a cost cap initialized to |x - y|.
PathResult distance_in_ball(const EdgeSample& sample, const Vec& x, const Vec& y,
                            double ball_radius);

// Restricted distance: admissibility ball B(x, 2|x - y|). Requires the sample
// window to contain that ball. Not symmetric in (x, y).
PathResult restricted_distance(const EdgeSample& sample, const Vec& x, const Vec& y);

// Inflated family: ball B(x, 2 |x-y|^{gamma_tilde^{-k}}); k = 0 is the
// restricted distance. The k-chain is monotone for |x - y| >= 1.
PathResult restricted_distance_k(const EdgeSample& sample, const Vec& x, const Vec& y,
                                 int k);

// Exhaustive oracle: minimum over all subsets, orders and orientations of the
// given edges (endpoints filtered to the ball), exact by finiteness. Refuses
// more than n_small input edges.
PathResult brute_force_distance(const std::vector<ContinuumEdge>& edges, const Vec& x,
                                const Vec& y, const Ball& ball, Norm norm,
                                int n_small = 8);

struct KLadderResult {
  std::vector<double> values;  // values[k] for k = 0..k_used
  bool stabilized = false;     // top two values equal
  bool truncated = false;      // budget cut the ladder below k_max
};

// Samples one window at the largest admissibility ball, derives the inner
// windows by restriction, and computes the k-ladder; the stabilized flag is
// the operational surrogate for the unrestricted distance. Requires
// |x - y| >= 1 (below that every ladder ball is too small to hold an edge or
// the chain direction degenerates).
KLadderResult full_distance_estimate(const ModelParams& p, const Vec& x, const Vec& y,
                                     int k_max, const SeedSpec& seed,
                                     double budget = kDefaultEdgeBudget);

}  // namespace lrp
