#include "seqloc/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <vector>

#include <Eigen/Dense>

namespace seqloc {

namespace {

struct AdjacencyView {
  std::vector<std::vector<std::pair<int, std::int64_t>>> nbrs;  // (vertex, mult)
  std::vector<std::int64_t> weighted_degree;
  std::vector<int> distinct_degree;
};

AdjacencyView build_adjacency(const Graph& g) {
  AdjacencyView a;
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  a.nbrs.resize(n);
  a.weighted_degree.assign(n, 0);
  a.distinct_degree.assign(n, 0);
  for (const Edge& e : g.edges()) {
    a.nbrs[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.mult);
    a.nbrs[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.mult);
    a.weighted_degree[static_cast<std::size_t>(e.u)] += e.mult;
    a.weighted_degree[static_cast<std::size_t>(e.v)] += e.mult;
    ++a.distinct_degree[static_cast<std::size_t>(e.u)];
    ++a.distinct_degree[static_cast<std::size_t>(e.v)];
  }
  for (auto& lst : a.nbrs) std::sort(lst.begin(), lst.end());
  return a;
}

// Connected components over positive-degree vertices, largest first
// (ties: smaller minimum vertex id first).  Vertices within a component
// are listed in BFS discovery order from its smallest id.
std::vector<std::vector<int>> components_by_size(const AdjacencyView& a) {
  const int n = static_cast<int>(a.nbrs.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)] || a.nbrs[static_cast<std::size_t>(v)].empty())
      continue;
    std::vector<int> comp;
    std::deque<int> queue{v};
    seen[static_cast<std::size_t>(v)] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (const auto& [w, mult] : a.nbrs[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& x, const auto& y) {
                     return x.size() > y.size();
                   });
  return comps;
}

std::vector<int> isolated_vertices(const AdjacencyView& a) {
  std::vector<int> iso;
  for (int v = 0; v < static_cast<int>(a.nbrs.size()); ++v)
    if (a.nbrs[static_cast<std::size_t>(v)].empty()) iso.push_back(v);
  return iso;
}

// BFS level structure rooted at `root`, levels by distance.
std::vector<std::vector<int>> level_structure(const AdjacencyView& a,
                                              int root) {
  std::vector<int> level(a.nbrs.size(), -1);
  std::vector<std::vector<int>> levels;
  level[static_cast<std::size_t>(root)] = 0;
  levels.push_back({root});
  while (true) {
    std::vector<int> next;
    for (int u : levels.back())
      for (const auto& [w, mult] : a.nbrs[static_cast<std::size_t>(u)])
        if (level[static_cast<std::size_t>(w)] < 0) {
          level[static_cast<std::size_t>(w)] = static_cast<int>(levels.size());
          next.push_back(w);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

// George-Liu pseudo-peripheral vertex: start at a minimum-degree vertex,
// repeatedly jump to a minimum-degree vertex in the deepest BFS level while
// the eccentricity grows.
int pseudo_peripheral(const AdjacencyView& a, const std::vector<int>& comp) {
  auto min_degree_vertex = [&](const std::vector<int>& vs) {
    int best = vs.front();
    for (int v : vs)
      if (a.distinct_degree[static_cast<std::size_t>(v)] <
              a.distinct_degree[static_cast<std::size_t>(best)] ||
          (a.distinct_degree[static_cast<std::size_t>(v)] ==
               a.distinct_degree[static_cast<std::size_t>(best)] &&
           v < best))
        best = v;
    return best;
  };
  int u = min_degree_vertex(comp);
  auto levels = level_structure(a, u);
  while (true) {
    const int v = min_degree_vertex(levels.back());
    auto v_levels = level_structure(a, v);
    if (v_levels.size() > levels.size()) {
      u = v;
      levels = std::move(v_levels);
    } else {
      return u;
    }
  }
}

std::vector<int> cuthill_mckee_component(const AdjacencyView& a,
                                         const std::vector<int>& comp) {
  const int start = pseudo_peripheral(a, comp);
  std::vector<bool> visited(a.nbrs.size(), false);
  std::vector<int> order;
  order.reserve(comp.size());
  std::deque<int> queue{start};
  visited[static_cast<std::size_t>(start)] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    order.push_back(u);
    std::vector<int> fresh;
    for (const auto& [w, mult] : a.nbrs[static_cast<std::size_t>(u)])
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = true;
        fresh.push_back(w);
      }
    std::sort(fresh.begin(), fresh.end(), [&](int x, int y) {
      const int dx = a.distinct_degree[static_cast<std::size_t>(x)];
      const int dy = a.distinct_degree[static_cast<std::size_t>(y)];
      return dx != dy ? dx < dy : x < y;
    });
    for (int w : fresh) queue.push_back(w);
  }
  return order;
}

}  // namespace

std::int64_t sequence_bandwidth(const Graph& g, const VertexSequence& s) {
  if (s.size() != g.num_vertices())
    throw ValidationError("sequence length does not match vertex count");
  std::int64_t bw = 0;
  for (const Edge& e : g.edges())
    bw = std::max<std::int64_t>(
        bw, std::abs(s.position(e.u) - s.position(e.v)));
  return bw;
}

OrderingResult spectral_ordering(const Graph& g) {
  if (g.num_edges() < 1)
    throw ValidationError("spectral ordering needs at least one edge");
  const AdjacencyView a = build_adjacency(g);
  const auto comps = components_by_size(a);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.num_vertices()));
  double fiedler_value = 0.0;

  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const std::vector<int>& comp = comps[ci];
    const int nc = static_cast<int>(comp.size());
    std::vector<int> local(a.nbrs.size(), -1);
    for (int i = 0; i < nc; ++i)
      local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;

    // Normalized Laplacian L = I - D^{-1/2} A D^{-1/2} (weighted degrees).
    Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(nc, nc);
    for (int i = 0; i < nc; ++i) {
      const int u = comp[static_cast<std::size_t>(i)];
      const double du =
          static_cast<double>(a.weighted_degree[static_cast<std::size_t>(u)]);
      for (const auto& [w, mult] : a.nbrs[static_cast<std::size_t>(u)]) {
        const int j = local[static_cast<std::size_t>(w)];
        const double dw =
            static_cast<double>(a.weighted_degree[static_cast<std::size_t>(w)]);
        lap(i, j) -= static_cast<double>(mult) / std::sqrt(du * dw);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("eigenvalue solver failed to converge");
    Eigen::VectorXd fiedler = solver.eigenvectors().col(1);
    if (ci == 0) fiedler_value = solver.eigenvalues()(1);

    // Seriate by the diffusion coordinate D^{-1/2} v rather than the raw
    // eigenvector v of the symmetric Laplacian: v carries a sqrt(degree)
    // factor that scrambles the order of vertices with unequal degrees.
    for (int i = 0; i < nc; ++i) {
      const int u = comp[static_cast<std::size_t>(i)];
      fiedler(i) /= std::sqrt(
          static_cast<double>(a.weighted_degree[static_cast<std::size_t>(u)]));
    }

    // Deterministic sign: first non-negligible entry is positive.
    for (int i = 0; i < nc; ++i) {
      if (std::abs(fiedler(i)) > 1e-12) {
        if (fiedler(i) < 0.0) fiedler = -fiedler;
        break;
      }
    }
    std::vector<int> idx(static_cast<std::size_t>(nc));
    for (int i = 0; i < nc; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
      if (fiedler(x) != fiedler(y)) return fiedler(x) < fiedler(y);
      return comp[static_cast<std::size_t>(x)] < comp[static_cast<std::size_t>(y)];
    });
    for (int i : idx) order.push_back(comp[static_cast<std::size_t>(i)]);
  }

  for (int v : isolated_vertices(a)) order.push_back(v);

  OrderingResult result;
  result.sequence = VertexSequence::from_order(order);
  result.method = "spectral";
  result.fiedler_value = fiedler_value;
  result.bandwidth = sequence_bandwidth(g, result.sequence);
  return result;
}

OrderingResult rcm_ordering(const Graph& g) {
  const AdjacencyView a = build_adjacency(g);
  const auto comps = components_by_size(a);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (const auto& comp : comps) {
    std::vector<int> cm = cuthill_mckee_component(a, comp);
    std::reverse(cm.begin(), cm.end());
    for (int v : cm) order.push_back(v);
  }
  for (int v : isolated_vertices(a)) order.push_back(v);

  OrderingResult result;
  result.sequence = VertexSequence::from_order(order);
  result.method = "rcm";
  result.fiedler_value = 0.0;
  result.bandwidth = sequence_bandwidth(g, result.sequence);
  return result;
}

}  // namespace seqloc
