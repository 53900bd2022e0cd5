#include "lrp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lrp {

namespace {

Vec displacement_vec(const IVec& v, int d) {
  Vec r = Vec::zero(d);
  for (int i = 0; i < d; ++i) r.x[i] = static_cast<double>(v[i]);
  return r;
}

int64_t l1_abs(const IVec& v, int d) {
  int64_t s = 0;
  for (int i = 0; i < d; ++i) s += std::llabs(v[i]);
  return s;
}

// Canonical half-space: first nonzero component positive.
bool lex_positive(const IVec& v, int d) {
  for (int i = 0; i < d; ++i) {
    if (v[i] > 0) return true;
    if (v[i] < 0) return false;
  }
  return false;
}

// Visits every displacement class once; f(v, n_positions, p_v).
template <typename F>
void for_each_class(const ModelParams& p, int64_t L, F&& f) {
  IVec v{};
  const int d = p.d;
  auto count_positions = [&]() {
    int64_t n = 1;
    for (int i = 0; i < d; ++i) n *= (L - std::llabs(v[i]));
    return n;
  };
  // Odometer over [-(L-1), L-1]^d.
  for (int i = 0; i < d; ++i) v[i] = -(L - 1);
  for (;;) {
    if (lex_positive(v, d) && l1_abs(v, d) >= 2) {
      double nl = norm_len(displacement_vec(v, d), p.norm);
      double pv = -std::expm1(-p.beta * std::pow(nl, -p.s));
      f(v, count_positions(), pv);
    }
    int axis = d - 1;
    while (axis >= 0) {
      if (++v[axis] <= L - 1) break;
      v[axis] = -(L - 1);
      --axis;
    }
    if (axis < 0) break;
  }
}

uint64_t encode_displacement(const IVec& v, int d, int64_t L) {
  uint64_t code = 0;
  uint64_t base = static_cast<uint64_t>(2 * L + 1);
  for (int i = 0; i < d; ++i)
    code = code * base + static_cast<uint64_t>(v[i] + L);
  return code;
}

}  // namespace

int64_t LatticeGraph::vertex_count() const {
  int64_t n = 1;
  for (int i = 0; i < params.d; ++i) n *= L;
  return n;
}

int64_t LatticeGraph::index_of(const IVec& v) const {
  int64_t idx = 0;
  for (int i = 0; i < params.d; ++i) idx = idx * L + (v[i] - lo[i]);
  return idx;
}

IVec LatticeGraph::coord_of(int64_t idx) const {
  IVec v{};
  for (int i = params.d - 1; i >= 0; --i) {
    v[i] = lo[i] + idx % L;
    idx /= L;
  }
  return v;
}

bool LatticeGraph::in_box(const IVec& v) const {
  for (int i = 0; i < params.d; ++i)
    if (v[i] < lo[i] || v[i] >= lo[i] + L) return false;
  return true;
}

void LatticeGraph::build_adjacency() {
  const int64_t n = vertex_count();
  std::vector<int64_t> deg(n, 0);
  for (const auto& [a, b] : long_edges) {
    ++deg[index_of(a)];
    ++deg[index_of(b)];
  }
  adj_offsets.assign(n + 1, 0);
  for (int64_t i = 0; i < n; ++i) adj_offsets[i + 1] = adj_offsets[i] + deg[i];
  adj.assign(adj_offsets[n], 0);
  std::vector<int64_t> cursor(adj_offsets.begin(), adj_offsets.end() - 1);
  for (const auto& [a, b] : long_edges) {
    int64_t ia = index_of(a), ib = index_of(b);
    adj[cursor[ia]++] = ib;
    adj[cursor[ib]++] = ia;
  }
}

double expected_long_edge_count(const ModelParams& p, int64_t L) {
  validate_params(p);
  double total = 0.0;
  for_each_class(p, L, [&](const IVec&, int64_t n, double pv) {
    total += static_cast<double>(n) * pv;
  });
  return total;
}

LatticeGraph sample_lattice_graph(const ModelParams& p, int64_t L, const SeedSpec& seed,
                                  double budget) {
  validate_params(p);
  if (L < 2) throw std::invalid_argument("L must be >= 2");
  double estimate = expected_long_edge_count(p, L);
  if (estimate > budget) throw BudgetError(estimate);

  LatticeGraph g;
  g.params = p;
  g.L = L;
  for (int i = 0; i < p.d; ++i) g.lo[i] = -(L / 2);
  g.seed = seed;
  g.long_edges.reserve(static_cast<std::size_t>(estimate * 1.1) + 16);

  const int d = p.d;
  const RngStream base(seed);
  for_each_class(p, L, [&](const IVec& v, int64_t n_pos, double pv) {
    if (pv <= 0.0) return;
    RngStream rng = base.child(encode_displacement(v, d, L));
    // Geometric skipping over the linearized admissible positions.
    int64_t j = -1;
    for (;;) {
      uint64_t skip = rng.geometric_skips(pv);
      if (skip > static_cast<uint64_t>(n_pos)) break;
      j += 1 + static_cast<int64_t>(skip);
      if (j >= n_pos) break;
      IVec a{};
      int64_t rem = j;
      for (int i = d - 1; i >= 0; --i) {
        int64_t span = L - std::llabs(v[i]);
        a[i] = g.lo[i] + std::max<int64_t>(0, -v[i]) + rem % span;
        rem /= span;
      }
      IVec b{};
      for (int i = 0; i < d; ++i) b[i] = a[i] + v[i];
      g.long_edges.emplace_back(a, b);
    }
  });
  g.build_adjacency();
  return g;
}

LatticeGraph sample_lattice_graph_naive(const ModelParams& p, int64_t L,
                                        const SeedSpec& seed, int64_t max_vertices) {
  validate_params(p);
  LatticeGraph g;
  g.params = p;
  g.L = L;
  for (int i = 0; i < p.d; ++i) g.lo[i] = -(L / 2);
  g.seed = seed;
  int64_t n = g.vertex_count();
  if (n > max_vertices)
    throw std::invalid_argument("naive sampler limited to " +
                                std::to_string(max_vertices) + " vertices");
  RngStream rng{seed};
  for (int64_t i = 0; i < n; ++i) {
    IVec a = g.coord_of(i);
    for (int64_t j = i + 1; j < n; ++j) {
      IVec b = g.coord_of(j);
      IVec v{};
      int64_t l1 = 0;
      for (int k = 0; k < p.d; ++k) {
        v[k] = b[k] - a[k];
        l1 += std::llabs(v[k]);
      }
      if (l1 <= 1) continue;
      double nl = norm_len(displacement_vec(v, p.d), p.norm);
      double pv = -std::expm1(-p.beta * std::pow(nl, -p.s));
      if (rng.uniform01() < pv) g.long_edges.emplace_back(a, b);
    }
  }
  g.build_adjacency();
  return g;
}

namespace {

// Shared BFS core. Returns when target_idx is settled (if >= 0).
void bfs_run(const LatticeGraph& g, int64_t origin_idx, std::vector<int32_t>& dist,
             int64_t target_idx, int32_t max_depth) {
  const int d = g.params.d;
  const int64_t n = g.vertex_count();
  dist.assign(n, -1);
  std::vector<int64_t> frontier, next;
  dist[origin_idx] = 0;
  frontier.push_back(origin_idx);
  int32_t depth = 0;
  // Strides per axis in the linear index.
  int64_t stride[kMaxDim];
  stride[d - 1] = 1;
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * g.L;
  while (!frontier.empty()) {
    if (target_idx >= 0 && dist[target_idx] >= 0) return;
    if (max_depth >= 0 && depth >= max_depth) return;
    ++depth;
    next.clear();
    for (int64_t u : frontier) {
      IVec cu = g.coord_of(u);
      for (int i = 0; i < d; ++i) {
        if (cu[i] > g.lo[i]) {
          int64_t w = u - stride[i];
          if (dist[w] < 0) {
            dist[w] = depth;
            next.push_back(w);
          }
        }
        if (cu[i] < g.lo[i] + g.L - 1) {
          int64_t w = u + stride[i];
          if (dist[w] < 0) {
            dist[w] = depth;
            next.push_back(w);
          }
        }
      }
      for (int64_t k = g.adj_offsets[u]; k < g.adj_offsets[u + 1]; ++k) {
        int64_t w = g.adj[k];
        if (dist[w] < 0) {
          dist[w] = depth;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
}

}  // namespace

int32_t DistanceField::at(const LatticeGraph& g, const IVec& v) const {
  return dist[g.index_of(v)];
}

DistanceField bfs_distance(const LatticeGraph& g, const IVec& origin) {
  if (!g.in_box(origin)) throw std::invalid_argument("bfs_distance: origin not in box");
  DistanceField f;
  f.origin = origin;
  f.d = g.params.d;
  f.L = g.L;
  f.lo = g.lo;
  bfs_run(g, g.index_of(origin), f.dist, -1, -1);
  return f;
}

int32_t bfs_distance_to(const LatticeGraph& g, const IVec& origin, const IVec& target,
                        int32_t max_depth) {
  if (!g.in_box(origin) || !g.in_box(target))
    throw std::invalid_argument("bfs_distance_to: endpoint not in box");
  std::vector<int32_t> dist;
  bfs_run(g, g.index_of(origin), dist, g.index_of(target), max_depth);
  int32_t d = dist[g.index_of(target)];
  if (d < 0) return max_depth >= 0 ? max_depth + 1 : -1;
  return d;
}

DistanceProfile distance_profile(const LatticeGraph& g, const IVec& origin,
                                 int64_t radius) {
  if (g.params.d != 1)
    throw std::invalid_argument("distance_profile: d = 1 only");
  if (origin[0] - radius < g.lo[0] || origin[0] + radius >= g.lo[0] + g.L)
    throw std::invalid_argument("distance_profile: radius exceeds box reach");
  DistanceField f = bfs_distance(g, origin);
  DistanceProfile prof;
  prof.radius = radius;
  prof.dist.resize(2 * radius + 1);
  for (int64_t off = -radius; off <= radius; ++off) {
    IVec v{};
    v[0] = origin[0] + off;
    prof.dist[off + radius] = f.at(g, v);
  }
  for (const auto& [a, b] : g.long_edges) {
    int64_t ax = a[0] - origin[0], bx = b[0] - origin[0];
    if (std::max(std::llabs(ax), std::llabs(bx)) <= radius)
      prof.long_edges.emplace_back(ax, bx);
  }
  return prof;
}

std::vector<int32_t> floyd_warshall_oracle(const LatticeGraph& g) {
  const int64_t n = g.vertex_count();
  if (n > 4096) throw std::invalid_argument("floyd_warshall_oracle: > 4096 vertices");
  const int32_t inf = INT32_MAX / 4;
  std::vector<int32_t> dist(n * n, inf);
  for (int64_t i = 0; i < n; ++i) dist[i * n + i] = 0;
  auto relax_edge = [&](int64_t a, int64_t b) {
    dist[a * n + b] = 1;
    dist[b * n + a] = 1;
  };
  const int d = g.params.d;
  int64_t stride[kMaxDim];
  stride[d - 1] = 1;
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * g.L;
  for (int64_t u = 0; u < n; ++u) {
    IVec cu = g.coord_of(u);
    for (int i = 0; i < d; ++i)
      if (cu[i] < g.lo[i] + g.L - 1) relax_edge(u, u + stride[i]);
  }
  for (const auto& [a, b] : g.long_edges) relax_edge(g.index_of(a), g.index_of(b));
  for (int64_t k = 0; k < n; ++k)
    for (int64_t i = 0; i < n; ++i) {
      int32_t dik = dist[i * n + k];
      if (dik >= inf) continue;
      const int32_t* row_k = &dist[k * n];
      int32_t* row_i = &dist[i * n];
      for (int64_t j = 0; j < n; ++j) {
        int32_t cand = dik + row_k[j];
        if (cand < row_i[j]) row_i[j] = cand;
      }
    }
  return dist;
}

}  // namespace lrp
