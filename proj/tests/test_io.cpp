#include <doctest.h>

#include <random>

#include "grouplines/io.hpp"
#include "grouplines/power_graph.hpp"
#include "oracle.hpp"

using namespace grouplines;

TEST_CASE("graph JSON is bit-exact") {
  Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(1, 2);
  CHECK(graph_to_json(g) == R"({"n":3,"labels":[],"edges":[[0,2],[1,2]]})");
  g.set_labels({"e", "a", "a^2"});
  CHECK(graph_to_json(g) == R"({"n":3,"labels":["e","a","a^2"],"edges":[[0,2],[1,2]]})");
  CHECK(graph_to_json(Graph()) == R"({"n":0,"labels":[],"edges":[]})");
}

TEST_CASE("graph JSON round trip") {
  std::mt19937_64 rng(oracle::default_seed() + 20);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = rng() % 12;
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    if (t % 2) {
      std::vector<std::string> labels;
      for (Vertex v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v * 7));
      g.set_labels(labels);
    }
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  const Graph pg = build_group_graph(make_group(parse_group_spec("quaternion:2")), GroupGraphKind::kPower);
  CHECK(graph_from_json(graph_to_json(pg)) == pg);
  // Endpoint order and whitespace are not significant on input.
  CHECK(graph_from_json(" { \"n\" : 2, \"edges\" : [ [1, 0] ] } ") == complete_graph(2));
}

TEST_CASE("malformed graph JSON") {
  for (const char* bad : {
           "", "[]", "{", "null", R"({"edges":[]})", R"({"n":-1,"edges":[]})",
           R"({"n":2.5,"edges":[]})", R"({"n":2})", R"({"n":2,"edges":{}})",
           R"({"n":2,"edges":[[0,2]]})", R"({"n":2,"edges":[[0,-1]]})", R"({"n":2,"edges":[[1,1]]})",
           R"({"n":2,"edges":[[0,1],[1,0]]})", R"({"n":2,"edges":[[0]]})",
           R"({"n":2,"edges":[["0","1"]]})", R"({"n":2,"labels":["x"],"edges":[]})",
           R"({"n":1,"labels":[7],"edges":[]})", R"({"n":1,"labels":"x","edges":[]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(graph_from_json(bad), GraphFormatError);
  }
}

TEST_CASE("DOT output") {
  Graph g = path_graph(3);
  g.set_labels({"e", "a \"1\"", "b"});
  CHECK(graph_to_dot(g) ==
        "graph G {\n  \"e\";\n  \"a \\\"1\\\"\";\n  \"b\";\n  \"e\" -- \"a \\\"1\\\"\";\n"
        "  \"a \\\"1\\\"\" -- \"b\";\n}\n");
  CHECK(graph_to_dot(complete_graph(2)) == "graph G {\n  \"0\";\n  \"1\";\n  \"0\" -- \"1\";\n}\n");
}

TEST_CASE("certificate JSON") {
  LineCertificate no;
  no.forbidden = ForbiddenWitness{1, Embedding{{3, 0, 8, 10}}};
  CHECK(certificate_to_json(no, false) ==
        R"({"mode":"line","verdict":"not-line","root":null,"forbidden":{"index":1,"map":[3,0,8,10]}})");
  LineCertificate yes;
  yes.verdict = true;
  yes.root = complete_graph(2);
  CHECK(certificate_to_json(yes, true) ==
        R"({"mode":"co-line","verdict":"line","root":{"n":2,"labels":[],"edges":[[0,1]]},"forbidden":null})");
}
