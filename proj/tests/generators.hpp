#pragma once

// Seeded generators for the property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "gtop/graph.hpp"
#include "gtop/simplicial.hpp"

namespace gen {

inline gtop::SimplicialComplex random_complex(std::mt19937& rng, int vertices, int facets,
                                              int max_size) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::vector<int> pool(static_cast<std::size_t>(vertices));
  for (int i = 0; i < vertices; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<gtop::Face> list;
  for (int f = 0; f < facets; ++f) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const int size = std::min(size_dist(rng), vertices);
    list.emplace_back(pool.begin(), pool.begin() + size);
  }
  return gtop::SimplicialComplex::from_facets(list);
}

inline gtop::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  gtop::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace gen
