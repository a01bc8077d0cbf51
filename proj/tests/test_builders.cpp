#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "gtop/bounds.hpp"
#include "gtop/builders.hpp"
#include "gtop/errors.hpp"
#include "gtop/homology.hpp"
#include "oracles.hpp"

using namespace gtop;

namespace {

std::vector<Graph> sample_graphs() {
  std::vector<Graph> graphs = connected_graph_corpus(5);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) graphs.push_back(gen::random_graph(rng, 6, 0.55));
  graphs.push_back(Graph(3));
  return graphs;
}

}  // namespace

TEST_CASE("neighborhood complex matches the definition") {
  for (const Graph& g : sample_graphs()) {
    CHECK(neighborhood_complex(g) == SimplicialComplex::from_closed_faces(oracle::neighborhood_faces(g)));
  }
}

TEST_CASE("box complexes match the definition") {
  for (const Graph& g : sample_graphs()) {
    CHECK(box_complex(g).complex == SimplicialComplex::from_closed_faces(oracle::box_faces(g, true)));
    CHECK(box0_complex(g).complex == SimplicialComplex::from_closed_faces(oracle::box_faces(g, false)));
  }
}

TEST_CASE("neighborhood complex examples") {
  CHECK(neighborhood_complex(complete_graph(2)) == SimplicialComplex::from_facets({{0}, {1}}));
  CHECK(neighborhood_complex(complete_graph(3)) == SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}}));
  // Neighbors of i in C5 are i-1 and i+1, so N(C5) is the 5-cycle {i-1, i+1}.
  const auto n5 = neighborhood_complex(cycle_graph(5));
  CHECK(n5.f_vector() == std::vector<std::size_t>{5, 5});
  CHECK(n5.contains(Face{0, 2}));
  CHECK_FALSE(n5.contains(Face{0, 1}));
  CHECK(neighborhood_complex(Graph(2)).empty());
}

TEST_CASE("box complex examples") {
  CHECK(box_complex(Graph(1)).complex.empty());
  // K2: {0, 3} and {1, 2}, two disjoint edges.
  CHECK(box_complex(complete_graph(2)).complex == SimplicialComplex::from_facets({{0, 3}, {1, 2}}));
  CHECK(box_complex(complete_graph(3)).complex.f_vector() == std::vector<std::size_t>{6, 12, 6});
  // Edgeless graph: only the shores survive, and CN of a vertex is empty.
  CHECK(box_complex(Graph(2)).complex.empty());
}

TEST_CASE("box0 complex examples") {
  CHECK(box0_complex(Graph(1)).complex == SimplicialComplex::from_facets({{0}, {1}}));
  CHECK(box0_complex(complete_graph(2)).complex ==
        SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  for (const Graph& g : connected_graph_corpus(4)) {
    const int n = g.vertex_count();
    const auto z = box0_complex(g);
    Face shore0, shore1;
    for (int v = 0; v < n; ++v) {
      shore0.push_back(v);
      shore1.push_back(n + v);
    }
    CHECK(z.complex.contains(shore0));
    CHECK(z.complex.contains(shore1));
  }
}

TEST_CASE("box complex sits inside box0") {
  for (const Graph& g : sample_graphs()) {
    const auto b0 = box0_complex(g).complex;
    for (const Face& f : box_complex(g).complex.faces()) CHECK(b0.contains(f));
  }
}

TEST_CASE("cones over shores") {
  const auto bc = cones_over_shores_complex(complete_graph(2));
  // {0, 1} has no common neighbor, so each apex cones two points.
  CHECK(bc.complex == SimplicialComplex::from_facets({{0, 3}, {1, 2}, {0, 4}, {1, 4}, {2, 5}, {3, 5}}));
  CHECK(bc.action(4) == 5);
  CHECK(bc.records.at(4).shore == Shore::apex_x);
  for (const Graph& g : sample_graphs()) {
    if (g.edge_count() == 0) continue;
    const auto z = cones_over_shores_complex(g);
    CHECK(is_free_z2(z));
    CHECK(euler_characteristic(z.complex) == euler_characteristic(box0_complex(g).complex));
    CHECK(reduced_homology(z.complex) == reduced_homology(box0_complex(g).complex));
  }
}

TEST_CASE("hom complex cells") {
  // K2 has the cells ({0},{1}) and ({1},{0}), two points swapped.
  const auto cells = hom_k2_cells(complete_graph(2));
  CHECK(cells.size() == 2);
  const auto z = hom_k2_order_complex(complete_graph(2));
  CHECK(z.complex.f_vector() == std::vector<std::size_t>{2});
  CHECK(z.action(0) == 1);
  // K3: 6 ordered edges and 6 cells ({a},{b,c}) or ({b,c},{a}); a hexagon after ordering.
  const auto k3 = hom_k2_order_complex(complete_graph(3));
  CHECK(hom_k2_cells(complete_graph(3)).size() == 12);
  CHECK(k3.complex.f_vector() == std::vector<std::size_t>{12, 12});
  CHECK(reduced_homology(k3.complex).at(1).betti == 1);
  CHECK(hom_k2_order_complex(Graph(3)).complex.empty());
}

TEST_CASE("actions are free and swap shores") {
  for (const Graph& g : sample_graphs()) {
    const int n = g.vertex_count();
    for (const Z2Complex& z : {box_complex(g), box0_complex(g)}) {
      CHECK(is_free_z2(z));
      for (Vertex v : z.complex.vertices()) CHECK(z.action(v) == (v < n ? v + n : v - n));
    }
  }
}

TEST_CASE("shore subcomplex") {
  for (const Graph& g : sample_graphs()) {
    const auto z = box_complex(g);
    const auto n = neighborhood_complex(g);
    CHECK(shore_subcomplex(z, 0) == n);
    CHECK(shore_subcomplex(z, 1) == n);
  }
  CHECK_THROWS_AS(shore_subcomplex(box0_complex(complete_graph(3)), 0), InputError);
  CHECK_THROWS_AS(shore_subcomplex(box_complex(complete_graph(3)), 2), InputError);
}

TEST_CASE("shore labels") {
  CHECK(shore_label(4, {2, 0}) == 2);
  CHECK(shore_label(4, {2, 1}) == 6);
  CHECK_THROWS_AS(shore_label(4, {4, 0}), InputError);
  const Face f{0, 2, 5, 8};
  const auto [a, b] = decode_shores(4, f);
  CHECK(a == VertexSet{0, 2});
  CHECK(b == VertexSet{1});
}
