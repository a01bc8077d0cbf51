#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtop/bounds.hpp"
#include "gtop/graph.hpp"
#include "gtop/homology.hpp"
#include "gtop/simplicial.hpp"

namespace gtop {

using nlohmann::json;

// {"n": int, "edges": [[u, v], ...]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);
// First line "n", then one "u v" pair per line; '#' starts a comment.
Graph graph_from_edge_list(std::istream& in);

// {"vertices": [...], "facets": [[...], ...]}. Box-type complexes list their
// vertices as {"label", "v", "shore"} records and add "provenance".
json complex_to_json(const SimplicialComplex& k);
json z2_complex_to_json(const Z2Complex& z);
// Closure is applied on load; listed vertices become faces.
SimplicialComplex complex_from_json(const json& j);
// Throws InputError when the file has no valid involution.
Z2Complex z2_complex_from_json(const json& j);
bool has_involution(const json& j);

// {"dims": [{"k": int, "betti": int, "torsion": [int, ...]}, ...]}
json profile_to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const json& j);

json bound_to_json(const BoundReport& b);
json outcome_to_json(const VerificationOutcome& o);

// Reads a whole file; throws InputError when it cannot be opened or parsed.
json read_json_file(const std::string& path);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const json& j);

}  // namespace gtop
