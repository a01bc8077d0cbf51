#include <doctest.h>

#include <sstream>

#include "gtop/bounds.hpp"
#include "gtop/builders.hpp"
#include "gtop/errors.hpp"
#include "gtop/io.hpp"
#include "oracles.hpp"

using namespace gtop;

TEST_CASE("graph round trip") {
  for (const Graph& g : {kneser_graph(5, 2), cycle_graph(7), Graph(3), complete_graph(1)}) {
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  CHECK(graph_to_json(complete_graph(2)).dump() == R"({"edges":[[0,1]],"n":2})");
}

TEST_CASE("graph JSON errors") {
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,1,1]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,"a"]]})")), InputError);
}

TEST_CASE("edge list") {
  std::istringstream in("# pentagon\n5\n0 1\n1 2  # spoke\n2 3\n\n3 4\n4 0\n");
  CHECK(graph_from_edge_list(in) == cycle_graph(5));
  std::istringstream bad("3\n0\n");
  CHECK_THROWS_AS(graph_from_edge_list(bad), InputError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(graph_from_edge_list(empty), InputError);
  std::istringstream range("3\n0 3\n");
  CHECK_THROWS_AS(graph_from_edge_list(range), InputError);
}

TEST_CASE("complex round trip") {
  for (const auto& k : {oracle::rp2(), SimplicialComplex::from_facets({{0}, {5, 7}}), SimplicialComplex{}}) {
    CHECK(complex_from_json(complex_to_json(k)) == k);
  }
  const auto j = json::parse(R"({"vertices":[9],"facets":[["1","2"],[2,3]]})");
  CHECK(complex_from_json(j) == SimplicialComplex::from_facets({{1, 2}, {2, 3}, {9}}));
  CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets":[[]]})")), InputError);
  CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets":[["x"]]})")), InputError);
}

TEST_CASE("z2 complex round trip") {
  for (const Z2Complex& z : {cycle_antipodal(4), box_complex(cycle_graph(5)),
                             cones_over_shores_complex(complete_graph(3)), hom_k2_order_complex(complete_graph(3))}) {
    const json j = z2_complex_to_json(z);
    CHECK(has_involution(j));
    const Z2Complex back = z2_complex_from_json(j);
    CHECK(back.complex == z.complex);
    CHECK(back.action == z.action);
    CHECK(back.provenance == z.provenance);
    CHECK(back.records.size() == z.records.size());
  }
  const json box = z2_complex_to_json(box_complex(complete_graph(2)));
  CHECK(box.at("provenance") == "box");
  CHECK(box.at("vertices")[2] == json::parse(R"({"label":2,"shore":1,"v":0})"));
  CHECK(box.at("involution").at("map").at("0") == "2");
  const json bc = z2_complex_to_json(cones_over_shores_complex(complete_graph(2)));
  CHECK(bc.at("vertices")[4] == json::parse(R"({"label":4,"shore":"apex-x","v":null})"));

  CHECK_FALSE(has_involution(complex_to_json(oracle::rp2())));
  CHECK_THROWS_AS(z2_complex_from_json(complex_to_json(oracle::rp2())), InputError);
  const auto fixed = json::parse(R"({"vertices":[0,1],"facets":[[0,1]],"involution":{"map":{"0":"1","1":"0"}}})");
  CHECK_THROWS_AS(z2_complex_from_json(fixed), InputError);
}

TEST_CASE("profile round trip") {
  const auto p = reduced_homology(oracle::rp2());
  CHECK(profile_from_json(profile_to_json(p)) == p);
  CHECK(profile_to_json(p).at("dims")[1] == json::parse(R"({"k":1,"betti":0,"torsion":[2]})"));
}

TEST_CASE("canonical output is stable") {
  const auto a = dump_canonical(z2_complex_to_json(box_complex(kneser_graph(5, 2))));
  const auto b = dump_canonical(z2_complex_to_json(box_complex(kneser_graph(5, 2))));
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(dump_canonical(json::parse(R"({"b":1,"a":2})")) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
  const auto report = bound_to_json(lovasz_bound(cycle_graph(5)));
  CHECK(report.at("value") == 3);
  CHECK(report.at("exact_chi").is_null());
  CHECK(outcome_to_json(verify_hom_equivalence(complete_graph(3))).at("passed") == true);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), InputError);
}
