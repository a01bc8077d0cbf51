#include "gtop/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "gtop/errors.hpp"

namespace gtop {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  auto& cell = adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  if (cell) return;
  cell = 1;
  adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  VertexSet out;
  for (int u = 0; u < n_; ++u)
    if (adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > kMaskVertexLimit)
    throw InputError("graph has " + std::to_string(g.vertex_count()) +
                     " vertices; complex builders support at most 64");
  std::vector<VertexMask> rows(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : g.edges()) {
    rows[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    rows[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
  }
  return rows;
}

VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

VertexSet mask_to_set(VertexMask mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask set_to_mask(const VertexSet& set) {
  VertexMask mask = 0;
  for (int v : set) mask |= VertexMask{1} << v;
  return mask;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& a) {
  VertexSet out;
  for (int v : a) (void)g.neighbors(v);  // range check
  for (int v = 0; v < g.vertex_count(); ++v)
    if (std::all_of(a.begin(), a.end(), [&](int x) { return x != v && g.has_edge(x, v); }))
      out.push_back(v);
  return out;
}

bool is_complete_bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) throw InputError("shores overlap at vertex " + std::to_string(x));
  for (int x : a)
    for (int y : b)
      if (!g.has_edge(x, y)) return false;
  return true;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

int greedy_clique_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 1;
  // Grow a clique from every start vertex, preferring high degree.
  for (int start = 0; start < n; ++start) {
    VertexSet clique{start};
    VertexSet candidates = g.neighbors(start);
    while (!candidates.empty()) {
      const auto pick = *std::max_element(candidates.begin(), candidates.end(), [&](int a, int b) {
        return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a > b);
      });
      clique.push_back(pick);
      VertexSet next;
      for (int c : candidates)
        if (c != pick && g.has_edge(c, pick)) next.push_back(c);
      candidates = std::move(next);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

int dsatur_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::set<int>> seen(static_cast<std::size_t>(n));
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      const auto sv = seen[static_cast<std::size_t>(v)].size();
      const auto sp = seen[static_cast<std::size_t>(pick)].size();
      if (sv > sp || (sv == sp && g.degree(v) > g.degree(pick))) pick = v;
    }
    int c = 0;
    while (seen[static_cast<std::size_t>(pick)].contains(c)) ++c;
    color[static_cast<std::size_t>(pick)] = c;
    used = std::max(used, c + 1);
    for (int u : g.neighbors(pick)) seen[static_cast<std::size_t>(u)].insert(c);
  }
  return used;
}

namespace {

bool colorable(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto search = [&](auto&& self, int colored, int colors_used) -> bool {
    if (colored == n) return true;
    // Most saturated uncolored vertex next.
    int pick = -1;
    int best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      std::set<int> sat;
      for (int u : g.neighbors(v))
        if (color[static_cast<std::size_t>(u)] >= 0) sat.insert(color[static_cast<std::size_t>(u)]);
      if (static_cast<int>(sat.size()) > best_sat) {
        best_sat = static_cast<int>(sat.size());
        pick = v;
      }
    }
    // A fresh color is interchangeable with any other fresh color.
    const int limit = std::min(k, colors_used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int u : g.neighbors(pick))
        if (color[static_cast<std::size_t>(u)] == c) clash = true;
      if (clash) continue;
      color[static_cast<std::size_t>(pick)] = c;
      if (self(self, colored + 1, std::max(colors_used, c + 1))) return true;
      color[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  };
  return search(search, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g, const ChromaticOptions& options) {
  if (g.vertex_count() < 1) throw InputError("chromatic number needs at least one vertex");
  if (g.vertex_count() > options.max_vertices && !options.force)
    throw GuardError("exact chromatic number limited to " + std::to_string(options.max_vertices) +
                     " vertices (got " + std::to_string(g.vertex_count()) + "); use --force");
  const int lower = greedy_clique_bound(g);
  const int upper = dsatur_bound(g);
  for (int k = lower; k < upper; ++k)
    if (colorable(g, k)) return k;
  return upper;
}

Graph add_cone_vertex(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n + 1, g.edges());
  for (int v = 0; v < n; ++v) out.add_edge(v, n);
  return out;
}

Graph cone_k(const Graph& g, int k) {
  if (k < 0) throw InputError("cone count must be nonnegative");
  Graph out = g;
  for (int i = 0; i < k; ++i) out = add_cone_vertex(out);
  return out;
}

std::vector<VertexSet> kneser_vertex_labels(int n, int k) {
  if (k < 1 || n < 2 * k) throw InputError("Kneser graph needs n >= 2k >= 2");
  // Colex order on k-subsets of {1..n} is numeric order of their bitmasks.
  std::vector<VertexSet> out;
  VertexSet subset(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int max_exclusive) -> void {
    if (pos < 0) {
      out.push_back(subset);
      return;
    }
    for (int v = pos + 1; v < max_exclusive; ++v) {
      subset[static_cast<std::size_t>(pos)] = v;
      self(self, pos - 1, v);
    }
  };
  rec(rec, k - 1, n + 1);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

Graph kneser_graph(int n, int k) {
  const auto labels = kneser_vertex_labels(n, k);
  Graph g(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      VertexSet common;
      std::set_intersection(labels[i].begin(), labels[i].end(), labels[j].begin(), labels[j].end(),
                            std::back_inserter(common));
      if (common.empty()) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle graph needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph graph_from_z2_complex(const Z2Complex& z) {
  validate_z2(z);
  const auto& verts = z.complex.vertices();
  const int n = static_cast<int>(verts.size());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vertex x = verts[static_cast<std::size_t>(i)];
      const Vertex y = verts[static_cast<std::size_t>(j)];
      const Vertex ny = z.action(y);
      const Vertex nx = z.action(x);
      const bool pair = nx == y;
      const bool via_y = x != ny && z.complex.contains(Face{std::min(x, ny), std::max(x, ny)});
      const bool via_x = y != nx && z.complex.contains(Face{std::min(y, nx), std::max(y, nx)});
      if (pair || via_y || via_x) g.add_edge(i, j);
    }
  return g;
}

std::vector<Graph> connected_graph_classes(int n) {
  if (n < 1 || n > 6) throw InputError("connected graph classes are enumerated for 1 <= n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pair_index[static_cast<std::size_t>(pairs[i].first)][static_cast<std::size_t>(pairs[i].second)] =
        static_cast<int>(i);
    pair_index[static_cast<std::size_t>(pairs[i].second)][static_cast<std::size_t>(pairs[i].first)] =
        static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> canon;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint64_t best = mask;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1)
          image |= std::uint64_t{1}
                   << pair_index[static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[i].first)])]
                                [static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[i].second)])];
      best = std::min(best, image);
      if (best < mask) break;
    }
    if (best != mask) continue;
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (is_connected(g)) canon.insert(mask);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask : canon) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " e=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  out << ']';
  return out.str();
}

}  // namespace gtop
