#include "bondsem/circuit.hpp"

#include <doctest.h>

#include <random>

#include "bondsem/json_io.hpp"
#include "test_util.hpp"

using namespace bondsem;

namespace {

// The running four-node example: nodes A,B,C,D with a doubled edge A-B,
// edges A-C, C-B, C-D, one input on A and outputs on B and D.
Circuit example_circuit() {
  return Circuit::make(4, {{0, 1}, {0, 1}, {0, 2}, {2, 1}, {2, 3}}, {0}, {1, 3});
}

Circuit random_circuit(int inputs, int outputs, std::mt19937_64& rng) {
  int nodes = 1 + static_cast<int>(rng() % 5);
  std::vector<std::pair<int, int>> edges;
  int edge_count = static_cast<int>(rng() % 7);
  for (int e = 0; e < edge_count; ++e)
    edges.emplace_back(static_cast<int>(rng() % nodes), static_cast<int>(rng() % nodes));
  std::vector<int> in(inputs), out(outputs);
  for (int& n : in) n = static_cast<int>(rng() % nodes);
  for (int& n : out) n = static_cast<int>(rng() % nodes);
  return Circuit::make(nodes, std::move(edges), std::move(in), std::move(out));
}

}  // namespace

TEST_CASE("make validates node indices") {
  CHECK_NOTHROW(Circuit::make(1, {}, {0}, {0}));
  CHECK_NOTHROW(Circuit::make(0, {}, {}, {}));
  CHECK_THROWS_WITH_AS(Circuit::make(2, {{0, 2}}, {}, {}), doctest::Contains("index 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(Circuit::make(2, {}, {2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit::make(2, {}, {}, {-1}), std::invalid_argument);
}

TEST_CASE("connected components") {
  CHECK(example_circuit().connected_components().component_count == 1);

  Circuit edgeless = Circuit::make(3, {}, {}, {});
  ComponentMap pi0 = edgeless.connected_components();
  CHECK(pi0.component_count == 3);
  CHECK(pi0.assignment == std::vector<int>{0, 1, 2});

  Circuit loop = Circuit::make(1, {{0, 0}}, {}, {});
  CHECK(loop.connected_components().component_count == 1);

  // Quotienting by the component map again yields the identity assignment.
  Circuit quotient = Circuit::make(pi0.component_count, {}, {}, {});
  ComponentMap again = quotient.connected_components();
  for (int i = 0; i < again.component_count; ++i) CHECK(again.assignment[i] == i);
}

TEST_CASE("underlying corelation of the example circuit") {
  CHECK(example_circuit().underlying_corelation() ==
        Corelation::make(1, 2, {{0, 1, 2}}));
}

TEST_CASE("corestriction discards unreachable components") {
  // One isolated internal node; boundary all on node 0.
  Circuit c = Circuit::make(2, {}, {0}, {0});
  CHECK(c.underlying_corelation() == Corelation::make(1, 1, {{0, 1}}));
  CHECK(Circuit::make(0, {}, {}, {}).underlying_corelation() == Corelation::identity(0));
}

TEST_CASE("composition glues along the shared boundary") {
  // Second stage of the running example: nodes A',B',C', edges A'-B', C'-B',
  // inputs on A' and C', outputs on B' and C'.
  Circuit first = example_circuit();
  Circuit second = Circuit::make(3, {{0, 1}, {2, 1}}, {0, 2}, {1, 2});
  Circuit glued = compose_circuits(second, first);
  CHECK(glued.node_count() == 5);
  CHECK(glued.underlying_corelation() ==
        compose(second.underlying_corelation(), first.underlying_corelation()));

  Circuit point_l = Circuit::make(1, {}, {}, {0});
  Circuit point_r = Circuit::make(1, {}, {0}, {});
  Circuit glued_points = compose_circuits(point_r, point_l);
  CHECK(glued_points.node_count() == 1);
  CHECK(glued_points.underlying_corelation() == Corelation::identity(0));

  CHECK_THROWS_AS(compose_circuits(first, second), std::invalid_argument);
}

TEST_CASE("identity circuits act as units through the corelation functor") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 30; ++round) {
    int inputs = static_cast<int>(rng() % 3), outputs = static_cast<int>(rng() % 3);
    Circuit f = random_circuit(inputs, outputs, rng);
    std::vector<int> boundary(outputs);
    for (int i = 0; i < outputs; ++i) boundary[i] = i;
    Circuit id_out = Circuit::make(outputs, {}, boundary, boundary);
    CHECK(compose_circuits(id_out, f).underlying_corelation() == f.underlying_corelation());
  }
}

TEST_CASE("tensor stacks disjointly") {
  Circuit first = example_circuit();
  Circuit second = Circuit::make(3, {{0, 1}, {2, 1}}, {0, 2}, {1, 2});
  Circuit stacked = tensor_circuits(first, second);
  CHECK(stacked.node_count() == first.node_count() + second.node_count());
  CHECK(stacked.edges().size() == first.edges().size() + second.edges().size());
  CHECK(stacked.input_arity() == 3);
  CHECK(stacked.output_arity() == 4);
  CHECK(stacked.underlying_corelation() ==
        tensor(first.underlying_corelation(), second.underlying_corelation()));

  Circuit empty = Circuit::make(0, {}, {}, {});
  CHECK(tensor_circuits(first, empty).underlying_corelation() ==
        first.underlying_corelation());
}

TEST_CASE("functoriality on random circuits") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 150; ++round) {
    int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4),
        c = static_cast<int>(rng() % 4);
    Circuit f = random_circuit(a, b, rng);
    Circuit g = random_circuit(b, c, rng);
    CHECK(compose_circuits(g, f).underlying_corelation() ==
          compose(g.underlying_corelation(), f.underlying_corelation()));
    CHECK(tensor_circuits(f, g).underlying_corelation() ==
          tensor(f.underlying_corelation(), g.underlying_corelation()));
  }
}

TEST_CASE("json round trip and dot output") {
  Circuit c = example_circuit();
  nlohmann::json j = to_json(c);
  Circuit back = circuit_from_json(j);
  CHECK(back.node_count() == c.node_count());
  CHECK(back.edges() == c.edges());
  CHECK(back.underlying_corelation() == c.underlying_corelation());

  std::string dot = c.to_dot();
  CHECK(dot.find("graph circuit") != std::string::npos);
  CHECK(dot.find("in0") != std::string::npos);
  CHECK(dot.find("out1") != std::string::npos);

  CHECK_THROWS_AS(circuit_from_json(nlohmann::json{{"nodes", 1}}), nlohmann::json::exception);
}
