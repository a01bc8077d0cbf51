#include "gtop/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "gtop/errors.hpp"

namespace gtop {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::generic: return "generic";
    case Provenance::box: return "box";
    case Provenance::box0: return "box0";
    case Provenance::box_cones: return "bc";
    case Provenance::hom_k2: return "hom";
  }
  return "generic";
}

Provenance provenance_from(const std::string& s) {
  if (s == "generic") return Provenance::generic;
  if (s == "box") return Provenance::box;
  if (s == "box0") return Provenance::box0;
  if (s == "bc") return Provenance::box_cones;
  if (s == "hom") return Provenance::hom_k2;
  throw InputError("unknown provenance '" + s + "'");
}

json shore_to_json(Shore s) {
  switch (s) {
    case Shore::zero: return 0;
    case Shore::one: return 1;
    case Shore::apex_x: return "apex-x";
    case Shore::apex_y: return "apex-y";
  }
  return 0;
}

Shore shore_from_json(const json& j) {
  if (j.is_number_integer()) {
    const int s = j.get<int>();
    if (s == 0) return Shore::zero;
    if (s == 1) return Shore::one;
  } else if (j.is_string()) {
    if (j == "apex-x") return Shore::apex_x;
    if (j == "apex-y") return Shore::apex_y;
  }
  throw InputError("invalid shore tag " + j.dump());
}

int parse_label(const json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == s.size() && used > 0) return v;
  }
  throw InputError("invalid vertex label " + j.dump());
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  return guarded("graph JSON", [&] {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair: " + e.dump());
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
  });
}

Graph graph_from_edge_list(std::istream& in) {
  std::string line;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    int a = 0;
    if (!(fields >> a)) continue;
    if (!g) {
      g.emplace(a);
      continue;
    }
    int b = 0;
    if (!(fields >> b)) throw InputError("edge line needs two vertices: '" + line + "'");
    g->add_edge(a, b);
  }
  if (!g) throw InputError("edge list is missing the vertex count line");
  return *g;
}

json complex_to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (const Face& f : k.facets()) facets.push_back(f);
  return {{"vertices", k.vertices()}, {"facets", facets}};
}

json z2_complex_to_json(const Z2Complex& z) {
  json j = complex_to_json(z.complex);
  json map = json::object();
  for (const auto& [v, w] : z.action.map()) map[std::to_string(v)] = std::to_string(w);
  j["involution"] = {{"map", map}};
  if (!z.records.empty()) {
    json verts = json::array();
    for (Vertex v : z.complex.vertices()) {
      const auto& rec = z.records.at(v);
      json r = {{"label", v}, {"shore", shore_to_json(rec.shore)}};
      r["v"] = rec.graph_vertex >= 0 ? json(rec.graph_vertex) : json(nullptr);
      verts.push_back(r);
    }
    j["vertices"] = verts;
  }
  if (z.provenance != Provenance::generic) j["provenance"] = provenance_name(z.provenance);
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  return guarded("complex JSON", [&] {
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
      Face face;
      for (const auto& v : f) face.push_back(parse_label(v));
      if (face.empty()) throw InputError("empty facet in complex JSON");
      facets.push_back(std::move(face));
    }
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices"))
        facets.push_back({v.is_object() ? parse_label(v.at("label")) : parse_label(v)});
    return SimplicialComplex::from_facets(facets);
  });
}

bool has_involution(const json& j) { return j.is_object() && j.contains("involution"); }

Z2Complex z2_complex_from_json(const json& j) {
  return guarded("complex JSON", [&] {
    Z2Complex z;
    z.complex = complex_from_json(j);
    if (!has_involution(j)) throw InputError("complex JSON has no involution");
    std::map<Vertex, Vertex> map;
    for (const auto& [key, value] : j.at("involution").at("map").items())
      map[parse_label(json(key))] = parse_label(value);
    z.action = Involution(std::move(map));
    if (j.contains("provenance")) z.provenance = provenance_from(j.at("provenance").get<std::string>());
    for (const auto& v : j.at("vertices")) {
      if (!v.is_object()) continue;
      VertexRecord rec;
      rec.shore = shore_from_json(v.at("shore"));
      rec.graph_vertex = v.at("v").is_null() ? -1 : v.at("v").get<int>();
      z.records[parse_label(v.at("label"))] = rec;
    }
    validate_z2(z);
    return z;
  });
}

json profile_to_json(const HomologyProfile& p) {
  json dims = json::array();
  for (const auto& g : p.dims) dims.push_back({{"k", g.k}, {"betti", g.betti}, {"torsion", g.torsion}});
  return {{"dims", dims}};
}

HomologyProfile profile_from_json(const json& j) {
  return guarded("homology JSON", [&] {
    HomologyProfile p;
    for (const auto& d : j.at("dims"))
      p.dims.push_back({d.at("k").get<int>(), d.at("betti").get<std::int64_t>(),
                        d.at("torsion").get<std::vector<std::int64_t>>()});
    return p;
  });
}

json bound_to_json(const BoundReport& b) {
  json j = {{"graph", b.graph},           {"name", b.name},
            {"value", b.value},           {"caveat", b.caveat},
            {"connectivity", b.connectivity}, {"note", b.note},
            {"evidence", profile_to_json(b.evidence)}};
  j["exact_chi"] = b.exact_chi ? json(*b.exact_chi) : json(nullptr);
  return j;
}

json outcome_to_json(const VerificationOutcome& o) {
  return {{"check", o.check},       {"input", o.input},       {"passed", o.passed},
          {"expected", o.expected}, {"observed", o.observed}, {"note", o.note}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gtop
