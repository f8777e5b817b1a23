#include "riabc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <nlohmann/json.hpp>

#include "riabc/rng.hpp"

namespace riabc {

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edges)
    : m_(node_count), edges_(std::move(edges)) {
  if (m_ < 1) throw std::invalid_argument("graph needs at least one node");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.resize(m_);
  in_.resize(m_);
  for (const auto& [i, j] : edges_) {
    if (i < 0 || i >= m_ || j < 0 || j >= m_)
      throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    out_[i].push_back(j);
    in_[j].push_back(i);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["m"] = m_;
  auto arr = nlohmann::json::array();
  for (const auto& [a, b] : edges_) arr.push_back({a, b});
  j["edges"] = std::move(arr);
  return j;
}

Graph Graph::from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return Graph(j.at("m").get<int>(), std::move(edges));
}

Partition Partition::make(int node_count, std::vector<int> byzantine_ids) {
  Partition p;
  std::sort(byzantine_ids.begin(), byzantine_ids.end());
  if (std::adjacent_find(byzantine_ids.begin(), byzantine_ids.end()) !=
      byzantine_ids.end())
    throw std::invalid_argument("duplicate byzantine id");
  p.mask_.assign(node_count, 0);
  for (int id : byzantine_ids) {
    if (id < 0 || id >= node_count)
      throw std::invalid_argument("byzantine id out of range");
    p.mask_[id] = 1;
  }
  p.byzantine = std::move(byzantine_ids);
  for (int i = 0; i < node_count; ++i)
    if (!p.mask_[i]) p.honest.push_back(i);
  return p;
}

Graph generate_erdos_renyi(int m, double p, uint64_t seed) {
  if (m < 2) throw std::invalid_argument("erdos-renyi needs m >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must be in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (to_unit_double(rng.next_u64()) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(m, std::move(edges));
}

Graph make_complete(int m) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m) * (m - 1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) edges.emplace_back(i, j);
  return Graph(m, std::move(edges));
}

Graph make_ring_bridge(const Partition& part) {
  const auto& hs = part.honest;
  std::vector<std::pair<int, int>> edges;
  const int h = part.h();
  for (int k = 0; k < h; ++k) {
    if (h >= 2) edges.emplace_back(hs[k], hs[(k + 1) % h]);
  }
  for (int bz : part.byzantine) {
    for (int hn : hs) {
      edges.emplace_back(bz, hn);
      edges.emplace_back(hn, bz);
    }
  }
  return Graph(part.m(), std::move(edges));
}

HonestSubgraph honest_subgraph(const Graph& g, const Partition& part) {
  std::vector<int> to_original = part.honest;
  std::vector<int> to_sub(g.node_count(), -1);
  for (size_t k = 0; k < to_original.size(); ++k) to_sub[to_original[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [i, j] : g.edges()) {
    if (to_sub[i] >= 0 && to_sub[j] >= 0) edges.emplace_back(to_sub[i], to_sub[j]);
  }
  return {Graph(static_cast<int>(to_original.size()), std::move(edges)),
          std::move(to_original)};
}

namespace {

// BFS distances from src; unreachable nodes stay at -1.
std::vector<int> bfs_dist(const Graph& g, int src, bool reversed) {
  std::vector<int> dist(g.node_count(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    const auto& nbrs = reversed ? g.in_neighbors(u) : g.out_neighbors(u);
    for (int v : nbrs) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_strongly_connected(const Graph& g) {
  if (g.node_count() == 1) return true;
  auto fwd = bfs_dist(g, 0, false);
  if (std::any_of(fwd.begin(), fwd.end(), [](int d) { return d < 0; })) return false;
  auto bwd = bfs_dist(g, 0, true);
  return std::none_of(bwd.begin(), bwd.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.node_count(); ++s) {
    auto dist = bfs_dist(g, s, false);
    for (int d : dist) {
      if (d < 0)
        throw NotStronglyConnected("diameter undefined: graph is not strongly connected");
      best = std::max(best, d);
    }
  }
  return best;
}

Graph ReducedGraph::to_graph() const {
  const int m = static_cast<int>(kept_in.size());
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < m; ++j)
    for (int i : kept_in[j]) edges.emplace_back(i, j);
  return Graph(m, std::move(edges));
}

namespace {

// All size-k subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) return {{}};
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// In-neighbors of j in the complete graph on m nodes, ascending.
std::vector<int> complete_in_neighbors(int m, int j) {
  std::vector<int> nbrs;
  nbrs.reserve(m - 1);
  for (int i = 0; i < m; ++i)
    if (i != j) nbrs.push_back(i);
  return nbrs;
}

}  // namespace

std::vector<ReducedGraph> enumerate_reduced_graphs(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > 2)
    throw std::invalid_argument(
        "exhaustive reduced-graph enumeration is limited to n <= 2; use sampling");
  const int m = 2 * n + 1;
  const auto subsets = combinations(2 * n, n);
  const size_t base = subsets.size();
  size_t total = 1;
  for (int j = 0; j < m; ++j) total *= base;

  std::vector<ReducedGraph> out;
  out.reserve(total);
  std::vector<size_t> digit(m, 0);
  std::vector<std::vector<int>> in_nbrs(m);
  for (int j = 0; j < m; ++j) in_nbrs[j] = complete_in_neighbors(m, j);

  for (size_t idx = 0; idx < total; ++idx) {
    ReducedGraph rg;
    rg.n = n;
    rg.kept_in.resize(m);
    for (int j = 0; j < m; ++j) {
      for (int pos : subsets[digit[j]]) rg.kept_in[j].push_back(in_nbrs[j][pos]);
    }
    out.push_back(std::move(rg));
    for (int j = m - 1; j >= 0; --j) {
      if (++digit[j] < base) break;
      digit[j] = 0;
    }
  }
  return out;
}

std::vector<ReducedGraph> sample_reduced_graphs(int n, int k, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (k < 1) throw std::invalid_argument("sample count must be >= 1");
  const int m = 2 * n + 1;
  std::vector<std::vector<int>> in_nbrs(m);
  for (int j = 0; j < m; ++j) in_nbrs[j] = complete_in_neighbors(m, j);

  Rng rng(seed);
  std::vector<ReducedGraph> out;
  out.reserve(k);
  for (int s = 0; s < k; ++s) {
    ReducedGraph rg;
    rg.n = n;
    rg.kept_in.resize(m);
    for (int j = 0; j < m; ++j) {
      // Partial Fisher-Yates over the 2n in-neighbors; first n entries kept.
      auto pool = in_nbrs[j];
      for (int t = 0; t < n; ++t) {
        auto r = t + static_cast<int>(rng.below(pool.size() - t));
        std::swap(pool[t], pool[r]);
      }
      rg.kept_in[j].assign(pool.begin(), pool.begin() + n);
      std::sort(rg.kept_in[j].begin(), rg.kept_in[j].end());
    }
    out.push_back(std::move(rg));
  }
  return out;
}

std::vector<int> find_source_components(const Graph& g) {
  std::vector<int> sources;
  for (int s = 0; s < g.node_count(); ++s) {
    auto dist = bfs_dist(g, s, false);
    if (std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
      sources.push_back(s);
  }
  return sources;
}

std::pair<int, int> max_outdegree(const Graph& g) {
  int best_node = 0, best_deg = 0;
  for (int i = 0; i < g.node_count(); ++i) {
    int deg = static_cast<int>(g.out_neighbors(i).size());
    if (deg > best_deg) {
      best_deg = deg;
      best_node = i;
    }
  }
  return {best_node, best_deg};
}

}  // namespace riabc
