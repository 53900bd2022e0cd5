#include "lrp/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace lrp {

namespace {

struct SearchGraph {
  std::vector<Vec> pos;                       // 0 = source, 1 = target
  std::vector<std::pair<int32_t, int32_t>> edge_arcs;  // node index pairs
};

// Collects {x, y} + endpoints of edges admissible in the open ball.
SearchGraph build_graph(const EdgeSample& sample, const Vec& x, const Vec& y,
                        double R) {
  SearchGraph g;
  g.pos.push_back(x);
  g.pos.push_back(y);
  const Norm nm = sample.params.norm;
  for (const auto& e : sample.edges) {
    if (norm_len(e.u - x, nm) < R && norm_len(e.v - x, nm) < R) {
      int32_t iu = static_cast<int32_t>(g.pos.size());
      g.pos.push_back(e.u);
      g.pos.push_back(e.v);
      g.edge_arcs.emplace_back(iu, iu + 1);
    }
  }
  return g;
}

struct Label {
  double cost = 0.0;
  int32_t nedges = 0;
  int32_t parent = -1;
  bool via_edge = false;
  bool reached = false;
};

inline bool better(double c, int32_t ne, const Label& l) {
  return !l.reached || c < l.cost || (c == l.cost && ne < l.nedges);
}

// Assembles the canonical result from parent pointers: merge consecutive
// segment moves, resum value as n_edges + sum of segment lengths in path
// order, and fall back to the empty path when that does not beat it.
PathResult finalize(const SearchGraph& g, const std::vector<Label>& lab, Norm nm,
                    const Vec& x, const Vec& y) {
  const double direct = norm_len(y - x, nm);
  PathResult empty;
  empty.value = direct;
  empty.seg_len = direct;
  if (direct > 0.0) empty.path.push_back(PathStep{false, x, y});
  if (!lab[1].reached) return empty;

  std::vector<int32_t> chain;
  std::vector<bool> via;
  for (int32_t v = 1; v != 0; v = lab[v].parent) {
    chain.push_back(v);
    via.push_back(lab[v].via_edge);
    if (lab[v].parent < 0) return empty;  // defensive; source is reachable
  }
  chain.push_back(0);
  std::reverse(chain.begin(), chain.end());
  std::reverse(via.begin(), via.end());

  PathResult r;
  std::size_t i = 0;
  while (i + 1 < chain.size()) {
    if (via[i]) {
      r.path.push_back(PathStep{true, g.pos[chain[i]], g.pos[chain[i + 1]]});
      ++i;
    } else {
      std::size_t j = i;
      while (j + 1 < chain.size() && !via[j]) ++j;
      if (!(g.pos[chain[i]] == g.pos[chain[j]]))
        r.path.push_back(PathStep{false, g.pos[chain[i]], g.pos[chain[j]]});
      i = j;
    }
  }
  for (const auto& st : r.path) {
    if (st.is_edge)
      ++r.n_edges;
    else
      r.seg_len += norm_len(st.to - st.from, nm);
  }
  r.value = static_cast<double>(r.n_edges) + r.seg_len;
  if (r.value >= direct) return empty;
  return r;
}

using HeapItem = std::tuple<double, int32_t, int32_t>;  // cost, nedges, node

PathResult solve_1d(const SearchGraph& g, Norm nm, const Vec& x, const Vec& y) {
  const int32_t n = static_cast<int32_t>(g.pos.size());
  // Sorted order of node positions; consecutive arcs carry the gap cost.
  std::vector<int32_t> order(n);
  for (int32_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int32_t a, int32_t b) { return g.pos[a].x[0] < g.pos[b].x[0]; });
  std::vector<int32_t> rank(n);
  for (int32_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<Label> lab(n);
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
  lab[0] = Label{0.0, 0, -1, false, true};
  heap.emplace(0.0, 0, 0);
  const double direct = norm_len(y - x, nm);
  lab[1] = Label{direct, 0, 0, false, true};
  heap.emplace(direct, 0, 1);
  double cap = direct;

  // Edge arcs incident to each node (node 2k <-> 2k+1 offset by graph layout).
  std::vector<std::vector<int32_t>> adj(n);
  for (const auto& [a, b] : g.edge_arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  auto relax = [&](int32_t to, double c, int32_t ne, int32_t par, bool edge) {
    if (c > cap) return;
    if (better(c, ne, lab[to])) {
      lab[to] = Label{c, ne, par, edge, true};
      heap.emplace(c, ne, to);
      if (to == 1 && c < cap) cap = c;
    }
  };

  while (!heap.empty()) {
    auto [c, ne, u] = heap.top();
    heap.pop();
    if (!lab[u].reached || c != lab[u].cost || ne != lab[u].nedges) continue;
    if (u == 1) break;
    int32_t r = rank[u];
    if (r > 0) {
      int32_t v = order[r - 1];
      relax(v, c + (g.pos[u].x[0] - g.pos[v].x[0]), ne, u, false);
    }
    if (r + 1 < n) {
      int32_t v = order[r + 1];
      relax(v, c + (g.pos[v].x[0] - g.pos[u].x[0]), ne, u, false);
    }
    for (int32_t v : adj[u]) relax(v, c + 1.0, ne + 1, u, true);
  }
  return finalize(g, lab, nm, x, y);
}

PathResult solve_grid(const SearchGraph& g, Norm nm, const Vec& x, const Vec& y,
                      double R) {
  const int32_t n = static_cast<int32_t>(g.pos.size());
  const int d = x.d;
  const double h = std::max(R / 24.0, 1e-6);
  const int64_t cells_per_axis = static_cast<int64_t>(std::ceil(2.0 * R / h)) + 3;

  auto cell_of = [&](const Vec& p, int axis) {
    return static_cast<int64_t>(std::floor((p.x[axis] - (x.x[axis] - R)) / h)) + 1;
  };
  auto key_of = [&](const Vec& p) {
    int64_t k = 0;
    for (int i = 0; i < d; ++i) k = k * cells_per_axis + cell_of(p, i);
    return k;
  };
  std::unordered_map<int64_t, std::vector<int32_t>> grid;
  grid.reserve(static_cast<std::size_t>(n) * 2);
  for (int32_t i = 0; i < n; ++i) grid[key_of(g.pos[i])].push_back(i);

  std::vector<std::vector<int32_t>> adj(n);
  for (const auto& [a, b] : g.edge_arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::vector<Label> lab(n);
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
  lab[0] = Label{0.0, 0, -1, false, true};
  heap.emplace(0.0, 0, 0);
  const double direct = norm_len(y - x, nm);
  lab[1] = Label{direct, 0, 0, false, true};
  heap.emplace(direct, 0, 1);
  double cap = direct;

  auto relax = [&](int32_t to, double c, int32_t ne, int32_t par, bool edge) {
    if (c > cap) return;
    if (better(c, ne, lab[to])) {
      lab[to] = Label{c, ne, par, edge, true};
      heap.emplace(c, ne, to);
      if (to == 1 && c < cap) cap = c;
    }
  };

  std::array<int64_t, kMaxDim> cu{};
  while (!heap.empty()) {
    auto [c, ne, u] = heap.top();
    heap.pop();
    if (!lab[u].reached || c != lab[u].cost || ne != lab[u].nedges) continue;
    if (u == 1) break;
    for (int32_t v : adj[u]) relax(v, c + 1.0, ne + 1, u, true);
    // Ring enumeration around u's cell; ring k has Chebyshev cell distance k,
    // so any node there is at least (k-1)*h away in every supported norm.
    for (int i = 0; i < d; ++i) cu[i] = cell_of(g.pos[u], i);
    for (int64_t ring = 0; ring <= cells_per_axis; ++ring) {
      // Any node in ring >= 1 is at least (ring-1)*h away; cost-cap prune.
      if (c + static_cast<double>(ring - 1) * h > cap) break;
      std::array<int64_t, kMaxDim> off{};
      for (int i = 0; i < d; ++i) off[i] = -ring;
      for (;;) {
        int64_t cheb = 0;
        for (int i = 0; i < d; ++i) cheb = std::max(cheb, std::llabs(off[i]));
        if (cheb == ring) {
          int64_t key = 0;
          bool inside = true;
          for (int i = 0; i < d; ++i) {
            int64_t ci = cu[i] + off[i];
            if (ci < 0 || ci >= cells_per_axis) {
              inside = false;
              break;
            }
            key = key * cells_per_axis + ci;
          }
          if (inside) {
            auto it = grid.find(key);
            if (it != grid.end())
              for (int32_t v : it->second) {
                if (v == u) continue;
                relax(v, c + norm_len(g.pos[v] - g.pos[u], nm), ne, u, false);
              }
          }
        }
        int axis = d - 1;
        while (axis >= 0) {
          if (++off[axis] <= ring) break;
          off[axis] = -ring;
          --axis;
        }
        if (axis < 0) break;
      }
    }
  }
  return finalize(g, lab, nm, x, y);
}

}  // namespace

PathResult distance_in_ball(const EdgeSample& sample, const Vec& x, const Vec& y,
                            double ball_radius) {
  const Norm nm = sample.params.norm;
  if (x == y) {
    PathResult r;
    return r;
  }
  SearchGraph g = build_graph(sample, x, y, ball_radius);
  if (g.edge_arcs.empty()) {
    PathResult r;
    r.value = norm_len(y - x, nm);
    r.seg_len = r.value;
    r.path.push_back(PathStep{false, x, y});
    return r;
  }
  if (x.d == 1) return solve_1d(g, nm, x, y);
  return solve_grid(g, nm, x, y, ball_radius);
}

namespace {

void require_window(const EdgeSample& sample, const Vec& x, double R) {
  if (!ball_subset(Ball{x, R}, Ball{sample.window.center, sample.window.radius},
                   sample.params.norm))
    throw std::invalid_argument(
        "window too small: admissibility ball not contained in sample window");
}

}  // namespace

PathResult restricted_distance(const EdgeSample& sample, const Vec& x, const Vec& y) {
  const double R = 2.0 * norm_len(y - x, sample.params.norm);
  require_window(sample, x, R);
  return distance_in_ball(sample, x, y, R);
}

PathResult restricted_distance_k(const EdgeSample& sample, const Vec& x, const Vec& y,
                                 int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  DerivedConstants dc = derive_constants(sample.params);
  const double dist = norm_len(y - x, sample.params.norm);
  const double R = 2.0 * std::pow(dist, std::pow(dc.gamma_tilde, -k));
  require_window(sample, x, R);
  return distance_in_ball(sample, x, y, R);
}

PathResult brute_force_distance(const std::vector<ContinuumEdge>& edges, const Vec& x,
                                const Vec& y, const Ball& ball, Norm norm,
                                int n_small) {
  if (static_cast<int>(edges.size()) > n_small)
    throw std::invalid_argument("brute_force_distance: more than " +
                                std::to_string(n_small) + " edges");
  std::vector<ContinuumEdge> adm;
  for (const auto& e : edges)
    if (norm_len(e.u - ball.center, norm) < ball.radius &&
        norm_len(e.v - ball.center, norm) < ball.radius)
      adm.push_back(e);

  const int m = static_cast<int>(adm.size());
  PathResult best;
  best.value = norm_len(y - x, norm);
  best.n_edges = 0;
  best.seg_len = best.value;
  if (!(x == y)) best.path.push_back(PathStep{false, x, y});

  // seq[i] = (edge index, flipped); DFS over all sequences with a safe prune
  // on accumulated cost (every completion adds >= 0).
  std::vector<std::pair<int, bool>> seq;
  auto consider = [&](double cost_to_cur, const Vec& cur) {
    double total = cost_to_cur + norm_len(y - cur, norm);
    int ne = static_cast<int>(seq.size());
    if (total < best.value || (total == best.value && ne < best.n_edges)) {
      PathResult r;
      r.n_edges = ne;
      Vec at = x;
      for (auto [ei, flip] : seq) {
        Vec a = flip ? adm[ei].v : adm[ei].u;
        Vec b = flip ? adm[ei].u : adm[ei].v;
        if (!(at == a)) {
          r.path.push_back(PathStep{false, at, a});
          r.seg_len += norm_len(a - at, norm);
        }
        r.path.push_back(PathStep{true, a, b});
        at = b;
      }
      if (!(at == y)) {
        r.path.push_back(PathStep{false, at, y});
        r.seg_len += norm_len(y - at, norm);
      }
      r.value = static_cast<double>(r.n_edges) + r.seg_len;
      best = r;
    }
  };

  std::vector<bool> used(m, false);
  std::function<void(const Vec&, double)> dfs = [&](const Vec& cur, double cost) {
    consider(cost, cur);
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      for (int flip = 0; flip < 2; ++flip) {
        const Vec& a = flip ? adm[i].v : adm[i].u;
        const Vec& b = flip ? adm[i].u : adm[i].v;
        double c = cost + norm_len(a - cur, norm) + 1.0;
        if (c > best.value) continue;
        used[i] = true;
        seq.emplace_back(i, flip != 0);
        dfs(b, c);
        seq.pop_back();
        used[i] = false;
      }
    }
  };
  if (!(x == y)) dfs(x, 0.0);
  return best;
}

KLadderResult full_distance_estimate(const ModelParams& p, const Vec& x, const Vec& y,
                                     int k_max, const SeedSpec& seed, double budget) {
  validate_params(p);
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  DerivedConstants dc = derive_constants(p);
  const double dist = norm_len(y - x, p.norm);
  if (!(dist >= 1.0))
    throw std::invalid_argument("full_distance_estimate: requires |x - y| >= 1");

  auto radius_k = [&](int k) {
    return 2.0 * std::pow(dist, std::pow(dc.gamma_tilde, -k));
  };
  int k_use = 0;
  for (int k = k_max; k >= 0; --k) {
    Window w{x, std::max(1.0, radius_k(k))};
    double mu = expected_edge_mass_unclipped(p, w, 1.0, 2.0 * w.radius);
    if (mu <= budget) {
      k_use = k;
      break;
    }
    if (k == 0) throw BudgetError(mu);
  }

  Window big{x, std::max(1.0, radius_k(k_use))};
  EdgeSample sample = sample_continuum_edges(p, big, 1.0, seed, budget);

  KLadderResult out;
  out.truncated = k_use < k_max;
  for (int k = 0; k <= k_use; ++k) {
    Window inner{x, std::max(1.0, radius_k(k))};
    EdgeSample sub = subsample_window(sample, inner);
    out.values.push_back(distance_in_ball(sub, x, y, radius_k(k)).value);
  }
  int n = static_cast<int>(out.values.size());
  if (n >= 2) {
    double a = out.values[n - 2], b = out.values[n - 1];
    out.stabilized = std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(a));
  } else {
    out.stabilized = false;
  }
  return out;
}

}  // namespace lrp
