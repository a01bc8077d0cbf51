#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtop/graph.hpp"
#include "gtop/homology.hpp"
#include "gtop/simplicial.hpp"

namespace gtop {

// A chromatic lower bound read off the homological connectivity of a box
// complex.
struct BoundReport {
  std::string graph;
  std::string name;  // "lovasz" | "sarkaria"
  int value = 0;
  // Set when the value rests on homological rather than homotopy
  // connectivity and simple connectivity could not be certified.
  bool caveat = false;
  int connectivity = 0;
  std::string note;
  HomologyProfile evidence;
  std::optional<int> exact_chi;
};

struct BoundOptions {
  bool exact = false;  // also compute χ(G) under the chromatic guard
  ChromaticOptions chromatic;
  HomologyOptions homology;
  // B₀(G) holds two full simplices on n vertices, 2^(n+1) faces in all.
  int box0_max_vertices = 16;
  bool force = false;
};

// conn(B(G)) + 3.
BoundReport lovasz_bound(const Graph& g, const BoundOptions& options = {});
// conn(B₀(G)) + 2. Throws GuardError above box0_max_vertices unless forced.
BoundReport sarkaria_bound(const Graph& g, const BoundOptions& options = {});

struct VerificationOutcome {
  std::string check;
  std::string input;
  bool passed = false;
  // Observed tables of both sides of the comparison, always populated.
  nlohmann::json expected;
  nlohmann::json observed;
  std::string note;
};

// Expected H̃ of a suspension: degrees shift up by one; the suspension of
// the empty complex is S⁰.
HomologyProfile suspension_shift(const HomologyProfile& profile, bool source_empty);

// B₀(G) against susp(B(G)): shifted homology and χ(B₀) = 2 - χ(B).
VerificationOutcome verify_suspension_relation(const Graph& g);
// N(G) against B(G).
VerificationOutcome verify_shore_retract(const Graph& g);
// χ(B(G)) even, and the faces split into ν-orbits of size two.
// Throws InputError for edgeless graphs.
VerificationOutcome verify_even_euler(const Graph& g);
// G = G_{sd(Z)}; N(G) and B(G) against Z.
VerificationOutcome verify_construction_roundtrip(const Z2Complex& z);
// N(G_K) equals the nerve of the vertex stars of K, face for face.
VerificationOutcome verify_nerve_identity(const Z2Complex& z);
// B(G⁺) against susp(B(G)), and χ(G⁺) = χ(G) + 1 under the size guard.
VerificationOutcome verify_cone_graph(const Graph& g);
// Hom(K₂, G) order complex against B(G).
VerificationOutcome verify_hom_equivalence(const Graph& g);

struct SearchOptions {
  int max_n = 6;
  bool force = false;
};
// First labeled graph on n vertices whose neighborhood complex is isomorphic
// to `target`. Throws GuardError for n above the limit unless forced.
std::optional<Graph> neighborhood_realizability_search(const SimplicialComplex& target, int n,
                                                       const SearchOptions& options = {});

// Fixed free Z2 test complexes.
Z2Complex sphere0_swap();
Z2Complex cycle_antipodal(int length);  // length even, >= 4
Z2Complex octahedron_antipodal();

// Every connected graph class on 1..max_n vertices.
std::vector<Graph> connected_graph_corpus(int max_n);

}  // namespace gtop
