#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace riabc {

struct NotStronglyConnected : std::runtime_error {
  explicit NotStronglyConnected(const std::string& what)
      : std::runtime_error(what) {}
};

// Static directed communication graph. Edge (i, j) means i may send to j.
// Immutable after construction; no self-loops.
class Graph {
 public:
  Graph(int node_count, std::vector<std::pair<int, int>> edges);

  int node_count() const { return m_; }
  // Sorted lexicographically, deduplicated.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& out_neighbors(int i) const { return out_.at(i); }
  const std::vector<int>& in_neighbors(int i) const { return in_.at(i); }

  nlohmann::json to_json() const;
  static Graph from_json(const nlohmann::json& j);

 private:
  int m_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_, in_;
};

// Honest/Byzantine split of the node set.
struct Partition {
  std::vector<int> byzantine;  // sorted
  std::vector<int> honest;     // sorted

  static Partition make(int node_count, std::vector<int> byzantine_ids);

  int b() const { return static_cast<int>(byzantine.size()); }
  int h() const { return static_cast<int>(honest.size()); }
  int m() const { return b() + h(); }
  bool is_byzantine(int id) const { return mask_.at(id) != 0; }

 private:
  std::vector<char> mask_;
};

// Each ordered pair (i, j), i != j, is kept independently with probability p.
// Identical (m, p, seed) always yields the identical edge set.
Graph generate_erdos_renyi(int m, double p, uint64_t seed);

Graph make_complete(int m);

// Honest nodes form a directed cycle (one honest in-neighbor each); every
// Byzantine node has edges to and from every honest node.
Graph make_ring_bridge(const Partition& part);

struct HonestSubgraph {
  Graph graph;
  std::vector<int> to_original;  // subgraph id -> original id, order-preserving
};

HonestSubgraph honest_subgraph(const Graph& g, const Partition& part);

bool is_strongly_connected(const Graph& g);

// Max over ordered pairs of shortest-path length. Throws NotStronglyConnected
// when some pair has no path.
int diameter(const Graph& g);

// Complete graph on 2n+1 nodes with exactly n incoming edges removed per
// node, i.e. each node keeps exactly n in-edges.
struct ReducedGraph {
  int n = 0;
  // kept_in[j] = sorted in-neighbors retained by node j, |kept_in[j]| == n.
  std::vector<std::vector<int>> kept_in;

  Graph to_graph() const;
};

// All distinct reduced graphs for the complete graph on 2n+1 nodes, count
// C(2n,n)^(2n+1). Rejects n > 2: n=3 alone would be 20^7 graphs.
std::vector<ReducedGraph> enumerate_reduced_graphs(int n);

// k reduced graphs drawn uniformly (each node's kept in-edge set uniform
// among the C(2n,n) choices), deterministic per seed.
std::vector<ReducedGraph> sample_reduced_graphs(int n, int k, uint64_t seed);

// Nodes from which every node of g is reachable, ascending.
std::vector<int> find_source_components(const Graph& g);

// A node achieving the maximum out-degree, ties broken by lowest id.
std::pair<int, int> max_outdegree(const Graph& g);

}  // namespace riabc
