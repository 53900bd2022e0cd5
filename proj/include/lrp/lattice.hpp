#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lrp/continuum.hpp"  // BudgetError, kDefaultEdgeBudget
#include "lrp/geometry.hpp"
#include "lrp/params.hpp"
#include "lrp/rng.hpp"

namespace lrp {

using IVec = std::array<int64_t, kMaxDim>;

// Box of Z^d with side L (coordinates lo[i] .. lo[i]+L-1, lo = -floor(L/2)),
// implicit nearest-neighbor edges, plus sampled long edges. Long edges never
// join l1-adjacent vertices and both endpoints lie in the box.
struct LatticeGraph {
  ModelParams params;
  int64_t L = 0;
  IVec lo{};
  SeedSpec seed;
  std::vector<std::pair<IVec, IVec>> long_edges;

  // CSR over long edges, built at construction; BFS-ready.
  std::vector<int64_t> adj_offsets;
  std::vector<int64_t> adj;

  int64_t vertex_count() const;
  int64_t index_of(const IVec& v) const;
  IVec coord_of(int64_t idx) const;
  bool in_box(const IVec& v) const;
  void build_adjacency();
};

// Exact expected number of long edges: sum over displacement classes of
// N_v * (1 - exp(-beta |v|^{-s})).
double expected_long_edge_count(const ModelParams& p, int64_t L);

// Displacement-class sampler with geometric skipping: for each class v the
// admissible positions are scanned with skips ~ Geometric(p_v), so the cost is
// O(#classes + #edges), never O(L^{2d}). Streams are keyed by displacement.
LatticeGraph sample_lattice_graph(const ModelParams& p, int64_t L, const SeedSpec& seed,
                                  double budget = kDefaultEdgeBudget);

// Bernoulli-per-pair reference sampler; O(L^{2d}); refuses above the guard.
LatticeGraph sample_lattice_graph_naive(const ModelParams& p, int64_t L,
                                        const SeedSpec& seed,
                                        int64_t max_vertices = 4096);

struct DistanceField {
  IVec origin{};
  int d = 1;
  int64_t L = 0;
  IVec lo{};
  std::vector<int32_t> dist;  // indexed like the graph

  int32_t at(const LatticeGraph& g, const IVec& v) const;
};

// Exact unweighted shortest-path distances within the box (paths cannot leave
// the box; callers should keep targets at <= half the box radius).
DistanceField bfs_distance(const LatticeGraph& g, const IVec& origin);

// Distance from origin to a single target with early exit; if max_depth >= 0
// the search stops there and returns max_depth + 1 when the target is deeper.
int32_t bfs_distance_to(const LatticeGraph& g, const IVec& origin, const IVec& target,
                        int32_t max_depth = -1);

struct DistanceProfile {
  int64_t radius = 0;
  std::vector<int32_t> dist;  // offset -radius..radius => dist[offset+radius]
  std::vector<std::pair<int64_t, int64_t>> long_edges;  // 1-d coordinates
};

// d = 1 profile for the arc-diagram renderer.
DistanceProfile distance_profile(const LatticeGraph& g, const IVec& origin,
                                 int64_t radius);

// All-pairs shortest paths by Floyd-Warshall; reference oracle, <= 4096 vertices.
std::vector<int32_t> floyd_warshall_oracle(const LatticeGraph& g);

}  // namespace lrp
