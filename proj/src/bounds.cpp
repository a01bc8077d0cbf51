#include "gtop/bounds.hpp"

#include <algorithm>
#include <map>

#include "gtop/builders.hpp"
#include "gtop/errors.hpp"
#include "gtop/io.hpp"

namespace gtop {

namespace {

json side(const HomologyProfile& p, std::optional<long long> euler = std::nullopt) {
  json j = {{"homology", profile_to_json(p)}};
  if (euler) j["euler"] = *euler;
  return j;
}

BoundReport make_bound(const Graph& g, const std::string& name, const SimplicialComplex& k,
                       int offset, const BoundOptions& options) {
  BoundReport report;
  if (options.exact) report.exact_chi = chromatic_number(g, options.chromatic);
  report.graph = describe(g);
  report.name = name;
  report.evidence = reduced_homology(k, options.homology);
  report.connectivity = homological_connectivity(k, report.evidence);
  report.value = report.connectivity + offset;
  if (k.empty()) {
    report.note = "degenerate input: the complex is empty";
  } else if (report.connectivity >= 1) {
    // Homology vanishing through degree >= 1 equals homotopy connectivity
    // only for simply connected spaces.
    report.caveat = pi1_trivial_heuristic(k) != Pi1Verdict::trivial;
    report.note = report.caveat ? "homological connectivity; simple connectivity not certified"
                                : "simple connectivity certified";
  }
  return report;
}

}  // namespace

BoundReport lovasz_bound(const Graph& g, const BoundOptions& options) {
  return make_bound(g, "lovasz", box_complex(g).complex, 3, options);
}

BoundReport sarkaria_bound(const Graph& g, const BoundOptions& options) {
  if (g.vertex_count() > options.box0_max_vertices && !options.force)
    throw GuardError("B0(G) on " + std::to_string(g.vertex_count()) + " vertices has over 2^" +
                     std::to_string(g.vertex_count() + 1) + " faces; limit is " +
                     std::to_string(options.box0_max_vertices) + " vertices, use --force");
  return make_bound(g, "sarkaria", box0_complex(g).complex, 2, options);
}

HomologyProfile suspension_shift(const HomologyProfile& profile, bool source_empty) {
  HomologyProfile out;
  if (source_empty) {
    out.dims.push_back({0, 1, {}});
    return out;
  }
  out.dims.push_back({0, 0, {}});
  for (const auto& g : profile.dims) out.dims.push_back({g.k + 1, g.betti, g.torsion});
  return out;
}

VerificationOutcome verify_suspension_relation(const Graph& g) {
  const auto box = box_complex(g);
  const auto box0 = box0_complex(g);
  const auto expected = suspension_shift(reduced_homology(box.complex), box.complex.empty());
  const auto observed = reduced_homology(box0.complex);
  const long long chi_box = euler_characteristic(box.complex);
  const long long chi_box0 = euler_characteristic(box0.complex);
  VerificationOutcome o;
  o.check = "suspension";
  o.input = describe(g);
  o.expected = side(expected, 2 - chi_box);
  o.observed = side(observed, chi_box0);
  o.passed = expected == observed && chi_box0 == 2 - chi_box;
  o.note = "B0(G) consistent with susp(B(G))";
  return o;
}

VerificationOutcome verify_shore_retract(const Graph& g) {
  const auto n = neighborhood_complex(g);
  const auto box = box_complex(g);
  const auto pn = reduced_homology(n);
  const auto pb = reduced_homology(box.complex);
  VerificationOutcome o;
  o.check = "shore";
  o.input = describe(g);
  o.expected = side(pn, euler_characteristic(n));
  o.observed = side(pb, euler_characteristic(box.complex));
  o.passed = pn == pb;
  o.note = "B(G) consistent with its shore N(G)";
  return o;
}

VerificationOutcome verify_even_euler(const Graph& g) {
  if (g.edge_count() == 0) throw InputError("even Euler check needs a graph with an edge");
  const auto box = box_complex(g);
  const long long chi = euler_characteristic(box.complex);
  // Orbits {σ, ν(σ)} of size two partition every layer of faces.
  bool paired = true;
  std::map<int, std::size_t> orbit_faces;
  for (int d = 0; d <= box.complex.dim(); ++d) {
    for (const Face& f : box.complex.faces_of_dim(d)) {
      const Face image = box.action(f);
      if (image == f || box.action(image) != f || !box.complex.contains(image)) paired = false;
      if (f < image) orbit_faces[d] += 2;
    }
    if (orbit_faces[d] != box.complex.faces_of_dim(d).size()) paired = false;
  }
  VerificationOutcome o;
  o.check = "euler";
  o.input = describe(g);
  o.expected = {{"euler_parity", "even"}, {"orbit_pairing", true}};
  o.observed = {{"euler", chi}, {"orbit_pairing", paired}, {"f_vector", box.complex.f_vector()}};
  o.passed = chi % 2 == 0 && paired;
  return o;
}

VerificationOutcome verify_construction_roundtrip(const Z2Complex& z) {
  validate_z2(z);
  const Graph g = graph_from_z2_complex(subdivide_involution(z));
  const auto pz = reduced_homology(z.complex);
  const auto pn = reduced_homology(neighborhood_complex(g));
  const auto pb = reduced_homology(box_complex(g).complex);
  VerificationOutcome o;
  o.check = "roundtrip";
  o.input = "f=" + json(z.complex.f_vector()).dump() + " graph " + describe(g);
  o.expected = side(pz, euler_characteristic(z.complex));
  o.observed = {{"neighborhood", profile_to_json(pn)}, {"box", profile_to_json(pb)}};
  o.passed = pn == pz && pb == pz;
  o.note = "N(G) and B(G) consistent with the input complex";
  return o;
}

VerificationOutcome verify_nerve_identity(const Z2Complex& z) {
  validate_z2(z);
  const Graph g = graph_from_z2_complex(z);
  const auto& verts = z.complex.vertices();
  std::vector<Face> relabeled;
  for (const Face& f : neighborhood_complex(g).faces()) {
    Face r;
    for (Vertex i : f) r.push_back(verts[static_cast<std::size_t>(i)]);
    relabeled.push_back(std::move(r));
  }
  const auto n_gk = SimplicialComplex::from_closed_faces(std::move(relabeled));

  // Stars as sets of face indices of K.
  const auto faces = z.complex.faces();
  std::vector<NerveMember> family;
  for (Vertex v : verts) {
    const auto s = star(z.complex, Face{v});
    NerveMember member{v, {}};
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (s.contains(faces[i])) member.elements.push_back(static_cast<int>(i));
    family.push_back(std::move(member));
  }
  const auto stars_nerve = nerve(family);

  VerificationOutcome o;
  o.check = "nerve";
  o.input = "f=" + json(z.complex.f_vector()).dump();
  o.expected = complex_to_json(stars_nerve);
  o.observed = complex_to_json(n_gk);
  o.passed = stars_nerve == n_gk;
  o.note = "exact face-set equality";
  return o;
}

VerificationOutcome verify_cone_graph(const Graph& g) {
  const Graph plus = add_cone_vertex(g);
  const auto box = box_complex(g);
  const auto expected = suspension_shift(reduced_homology(box.complex), box.complex.empty());
  const auto observed = reduced_homology(box_complex(plus).complex);
  VerificationOutcome o;
  o.check = "cone";
  o.input = describe(g);
  o.expected = side(expected);
  o.observed = side(observed);
  o.passed = expected == observed;
  const ChromaticOptions guard;
  if (plus.vertex_count() <= guard.max_vertices) {
    const int chi = chromatic_number(g, guard);
    const int chi_plus = chromatic_number(plus, guard);
    o.expected["chromatic"] = chi + 1;
    o.observed["chromatic"] = chi_plus;
    o.passed = o.passed && chi_plus == chi + 1;
  } else {
    o.note = "chromatic check skipped by the size guard";
  }
  return o;
}

VerificationOutcome verify_hom_equivalence(const Graph& g) {
  const auto pb = reduced_homology(box_complex(g).complex);
  const auto ph = reduced_homology(hom_k2_order_complex(g).complex);
  VerificationOutcome o;
  o.check = "hom";
  o.input = describe(g);
  o.expected = side(pb);
  o.observed = side(ph);
  o.passed = pb == ph;
  o.note = "Hom(K2,G) consistent with B(G)";
  return o;
}

std::optional<Graph> neighborhood_realizability_search(const SimplicialComplex& target, int n,
                                                       const SearchOptions& options) {
  if (n < 1) throw InputError("search needs n >= 1");
  if (n > options.max_n && !options.force)
    throw GuardError("neighborhood search limited to n <= " + std::to_string(options.max_n) +
                     " (2^(n choose 2) graphs); use --force");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (isomorphic(neighborhood_complex(g), target, {.max_vertices = 12, .force = true})) return g;
  }
  return std::nullopt;
}

Z2Complex sphere0_swap() {
  return {SimplicialComplex::from_facets({{0}, {1}}), Involution({{0, 1}, {1, 0}}),
          Provenance::generic, {}};
}

Z2Complex cycle_antipodal(int length) {
  if (length < 4 || length % 2 != 0) throw InputError("antipodal cycle needs an even length >= 4");
  std::vector<Face> edges;
  std::map<Vertex, Vertex> map;
  for (int i = 0; i < length; ++i) {
    edges.push_back({i, (i + 1) % length});
    map[i] = (i + length / 2) % length;
  }
  return {SimplicialComplex::from_facets(edges), Involution(std::move(map)), Provenance::generic, {}};
}

Z2Complex octahedron_antipodal() {
  std::vector<Face> triangles;
  for (int a : {0, 3})
    for (int b : {1, 4})
      for (int c : {2, 5}) triangles.push_back({a, b, c});
  std::map<Vertex, Vertex> map;
  for (int i = 0; i < 6; ++i) map[i] = (i + 3) % 6;
  return {SimplicialComplex::from_facets(triangles), Involution(std::move(map)), Provenance::generic,
          {}};
}

std::vector<Graph> connected_graph_corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto classes = connected_graph_classes(n);
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

}  // namespace gtop
