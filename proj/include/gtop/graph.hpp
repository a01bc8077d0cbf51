#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gtop/simplicial.hpp"

namespace gtop {

using VertexSet = std::vector<int>;

// Finite simple undirected graph on vertices 0..n-1. Connectivity is not
// required.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  // Throws InputError on loops and out-of-range endpoints; repeated edges
  // are ignored.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  // Sorted pairs with first < second.
  std::vector<std::pair<int, int>> edges() const;
  VertexSet neighbors(int v) const;
  int degree(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<char>> adj_;
};

// Bit i is vertex i. Valid for graphs with at most 64 vertices.
using VertexMask = std::uint64_t;
constexpr int kMaskVertexLimit = 64;

// Adjacency rows as bitmasks; throws InputError above kMaskVertexLimit.
std::vector<VertexMask> adjacency_masks(const Graph& g);
VertexMask full_mask(int n);
VertexSet mask_to_set(VertexMask mask);
VertexMask set_to_mask(const VertexSet& set);

// Vertices adjacent to every vertex of `a`; CN(∅) is the whole vertex set.
VertexSet common_neighbors(const Graph& g, const VertexSet& a);

// Every a in `a` adjacent to every b in `b`. Overlapping sides are an
// InputError.
bool is_complete_bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_connected(const Graph& g);

struct ChromaticOptions {
  int max_vertices = 20;
  bool force = false;
};
int greedy_clique_bound(const Graph& g);
int dsatur_bound(const Graph& g);
// Exact chromatic number: clique lower bound, DSATUR upper bound, then
// k-colorability backtracking in between. Throws GuardError above the limit.
int chromatic_number(const Graph& g, const ChromaticOptions& options = {});

// G⁺: a new vertex n adjacent to every old vertex.
Graph add_cone_vertex(const Graph& g);
Graph cone_k(const Graph& g, int k);

// Vertices are the k-subsets of {1..n} in colexicographic order.
Graph kneser_graph(int n, int k);
std::vector<VertexSet> kneser_vertex_labels(int n, int k);
Graph complete_graph(int n);
Graph cycle_graph(int n);

// Construction K -> G_K: x ~ y iff ν(x) = y or {x, ν(y)} is a face.
// Graph vertex i is the i-th vertex of the complex in sorted order.
Graph graph_from_z2_complex(const Z2Complex& z);

// One representative per isomorphism class of connected graphs on exactly n
// vertices (n <= 6), each in its lexicographically smallest labeling.
std::vector<Graph> connected_graph_classes(int n);

// Short stable descriptor such as "n=3 e=[0-1,0-2,1-2]".
std::string describe(const Graph& g);

}  // namespace gtop
