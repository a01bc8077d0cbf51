#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "gtop/bounds.hpp"
#include "gtop/errors.hpp"
#include "gtop/simplicial.hpp"

using namespace gtop;

namespace {

SimplicialComplex tetra_boundary() {
  return SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// Chains of the face poset counted by brute force over all face subsets.
std::vector<std::size_t> chain_counts(const SimplicialComplex& k) {
  const auto faces = k.faces();
  std::vector<std::size_t> counts;
  for (std::uint32_t mask = 1; mask < (1u << faces.size()); ++mask) {
    std::vector<Face> chosen;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (mask >> i & 1) chosen.push_back(faces[i]);
    bool chain = true;
    for (const auto& a : chosen)
      for (const auto& b : chosen)
        if (a != b && !is_subface(a, b) && !is_subface(b, a)) chain = false;
    if (!chain) continue;
    if (counts.size() < chosen.size()) counts.resize(chosen.size(), 0);
    ++counts[chosen.size() - 1];
  }
  return counts;
}

}  // namespace

TEST_CASE("closure of facets") {
  const auto k = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
  CHECK(k.faces() == std::vector<Face>{{1}, {2}, {3}, {1, 2}, {2, 3}});
  CHECK(k.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(k.dim() == 1);

  const auto empty = SimplicialComplex::from_facets({});
  CHECK(empty.empty());
  CHECK(empty.dim() == -1);
  CHECK(empty.size() == 0);

  CHECK(tetra_boundary().size() == 14);
  CHECK(tetra_boundary().f_vector() == std::vector<std::size_t>{4, 6, 4});

  CHECK_THROWS_AS(SimplicialComplex::from_facets({{1, 2}, {}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex::from_closed_faces({{1, 2}, {1}}), InputError);
}

TEST_CASE("closure is idempotent on random complexes") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = gen::random_complex(rng, 7, 5, 4);
    CHECK(SimplicialComplex::from_facets(k.facets()) == k);
    CHECK(SimplicialComplex::from_facets(k.faces()) == k);
  }
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(SimplicialComplex::from_facets({{0}})) == 1);
  CHECK(euler_characteristic(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}})) == 0);
  CHECK(euler_characteristic(tetra_boundary()) == 2);
  CHECK(euler_characteristic(SimplicialComplex{}) == 0);
}

TEST_CASE("barycentric subdivision") {
  const auto edge = barycentric_subdivision(SimplicialComplex::from_facets({{1, 2}}));
  CHECK(edge.complex.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(edge.vertex_faces == std::vector<Face>{{1}, {2}, {1, 2}});

  const auto solid = SimplicialComplex::from_facets({{0, 1, 2}});
  const auto expected = chain_counts(solid);
  CHECK(expected == std::vector<std::size_t>{7, 12, 6});
  CHECK(barycentric_subdivision(solid).complex.f_vector() == expected);

  CHECK(euler_characteristic(barycentric_subdivision(tetra_boundary()).complex) == 2);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = gen::random_complex(rng, 6, 4, 3);
    const auto sd = barycentric_subdivision(k);
    CHECK(euler_characteristic(sd.complex) == euler_characteristic(k));
    if (k.size() <= 16) CHECK(sd.complex.f_vector() == chain_counts(k));
  }
}

TEST_CASE("subdivided involution") {
  const auto s0 = subdivide_involution(sphere0_swap());
  CHECK(s0.complex == sphere0_swap().complex);
  CHECK(s0.action == sphere0_swap().action);

  // 4-cycle with antipodal map becomes an 8-cycle with antipodal map.
  const auto c8 = subdivide_involution(cycle_antipodal(4));
  CHECK(c8.complex.f_vector() == std::vector<std::size_t>{8, 8});
  for (Vertex v : c8.complex.vertices()) {
    int degree = 0;
    for (const Face& e : c8.complex.faces_of_dim(1))
      if (e[0] == v || e[1] == v) ++degree;
    CHECK(degree == 2);
  }
  // Antipodal: the image of every vertex is at cycle distance 4.
  for (Vertex v : c8.complex.vertices()) {
    std::map<Vertex, int> dist{{v, 0}};
    std::vector<Vertex> frontier{v};
    while (!frontier.empty()) {
      std::vector<Vertex> next;
      for (Vertex x : frontier)
        for (const Face& e : c8.complex.faces_of_dim(1)) {
          const Vertex y = e[0] == x ? e[1] : e[1] == x ? e[0] : -1;
          if (y >= 0 && !dist.contains(y)) {
            dist[y] = dist[x] + 1;
            next.push_back(y);
          }
        }
      frontier = next;
    }
    CHECK(dist.at(c8.action(v)) == 4);
  }
  CHECK(is_free_z2(subdivide_involution(octahedron_antipodal())));
  CHECK(is_free_z2(subdivide_involution(cycle_antipodal(6))));
}

TEST_CASE("suspension") {
  const auto s0 = suspension(SimplicialComplex{});
  CHECK(s0.f_vector() == std::vector<std::size_t>{2});

  const auto circle = suspension(SimplicialComplex::from_facets({{0}, {1}}));
  CHECK(circle.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(circle.dim() == 1);

  const auto points = SimplicialComplex::from_facets({{0}, {1}, {2}, {3}});
  const auto s = suspension(points);
  CHECK(s.f_vector() == std::vector<std::size_t>{6, 8});
  CHECK(euler_characteristic(s) == -2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = gen::random_complex(rng, 6, 4, 3);
    CHECK(euler_characteristic(suspension(k)) == 2 - euler_characteristic(k));
  }

  const auto zs = z2_suspension(cycle_antipodal(4));
  CHECK(is_free_z2(zs));
  CHECK(zs.action(4) == 5);
}

TEST_CASE("star") {
  const auto solid = SimplicialComplex::from_facets({{0, 1, 2}});
  CHECK(star(solid, Face{0}) == solid);

  const auto path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
  CHECK(star(path, Face{1}) == SimplicialComplex::from_facets({{1, 2}}));

  CHECK(star(tetra_boundary(), Face{1, 2}) == SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}}));
  CHECK_THROWS_AS(star(path, Face{1, 3}), InputError);
}

TEST_CASE("nerve") {
  CHECK(nerve({{0, {1, 2}}, {1, {3}}}) == SimplicialComplex::from_facets({{0}, {1}}));
  CHECK(nerve({{0, {1, 2}}, {1, {2, 3}}, {2, {3, 1}}}) ==
        SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}}));
  CHECK_THROWS_AS(nerve({{0, {}}}), InputError);

  // Closed vertex stars of the 4-cycle: opposite stars share the two other
  // vertices and every triple shares one vertex, so the nerve is the
  // boundary of a tetrahedron.
  const auto c4 = cycle_antipodal(4).complex;
  const auto faces = c4.faces();
  std::vector<NerveMember> family;
  for (Vertex v : c4.vertices()) {
    const auto s = star(c4, Face{v});
    NerveMember m{v, {}};
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (s.contains(faces[i])) m.elements.push_back(static_cast<int>(i));
    family.push_back(m);
  }
  CHECK(nerve(family) == SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

TEST_CASE("cone") {
  CHECK(cone(SimplicialComplex::from_facets({{0}, {1}}), 2) ==
        SimplicialComplex::from_facets({{0, 2}, {1, 2}}));
  CHECK(cone(SimplicialComplex{}, 5) == SimplicialComplex::from_facets({{5}}));
  CHECK(euler_characteristic(cone(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}}), 9)) == 1);
  CHECK_THROWS_AS(cone(SimplicialComplex::from_facets({{0, 1}}), 1), InputError);
}

TEST_CASE("isomorphism search") {
  const auto c4 = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto c4b = SimplicialComplex::from_facets({{7, 5}, {5, 9}, {9, 2}, {2, 7}});
  const auto p4 = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}});
  CHECK(isomorphic(c4, c4b));
  CHECK_FALSE(isomorphic(c4, p4));

  const auto sd = barycentric_subdivision(SimplicialComplex::from_facets({{0, 1, 2}})).complex;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<Vertex> perm(7);
    for (int i = 0; i < 7; ++i) perm[static_cast<std::size_t>(i)] = 10 + i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Face> relabeled;
    for (const Face& f : sd.faces()) {
      Face r;
      for (Vertex v : f) r.push_back(perm[static_cast<std::size_t>(v)]);
      relabeled.push_back(r);
    }
    CHECK(isomorphic(sd, SimplicialComplex::from_facets(relabeled)));
  }

  std::vector<Face> points;
  for (int i = 0; i < 13; ++i) points.push_back({i});
  const auto big = SimplicialComplex::from_facets(points);
  CHECK_THROWS_AS(isomorphic(big, big), GuardError);
  CHECK(isomorphic(big, big, {.max_vertices = 12, .force = true}));
}

TEST_CASE("z2 validation") {
  CHECK(is_free_z2(cycle_antipodal(4)));
  CHECK(is_free_z2(octahedron_antipodal()));
  // Swapping the endpoints of an edge fixes the edge setwise.
  Z2Complex edge{SimplicialComplex::from_facets({{0, 1}}), Involution({{0, 1}, {1, 0}}),
                 Provenance::generic, {}};
  CHECK_FALSE(is_free_z2(edge));
  CHECK_THROWS_AS(validate_z2(edge), InputError);
  // Not simplicial: the image of {0,1} is {2,3}, which is missing.
  Z2Complex broken{SimplicialComplex::from_facets({{0, 1}, {2}, {3}}),
                   Involution({{0, 2}, {2, 0}, {1, 3}, {3, 1}}), Provenance::generic, {}};
  CHECK_FALSE(is_free_z2(broken));
  CHECK_THROWS_AS(Involution({{0, 1}, {1, 2}, {2, 0}}), InputError);
}
