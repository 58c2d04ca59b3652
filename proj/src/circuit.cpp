#include "bondsem/circuit.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bondsem {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_node(int idx, int node_count, const char* what) {
  if (idx < 0 || idx >= node_count)
    throw std::invalid_argument(std::string("circuit: ") + what + " index " + std::to_string(idx) +
                                " out of range [0," + std::to_string(node_count) + ")");
}

// Numbers union-find classes 0..k-1 in order of first appearance.
std::pair<int, std::vector<int>> quotient(UnionFind& uf, int n) {
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> assignment(n);
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    if (label[root] < 0) label[root] = next++;
    assignment[i] = label[root];
  }
  return {next, std::move(assignment)};
}

}  // namespace

Circuit Circuit::make(int node_count, std::vector<std::pair<int, int>> edges,
                      std::vector<int> input_map, std::vector<int> output_map) {
  if (node_count < 0) throw std::invalid_argument("circuit: negative node count");
  for (const auto& [s, t] : edges) {
    check_node(s, node_count, "edge source");
    check_node(t, node_count, "edge target");
  }
  for (int n : input_map) check_node(n, node_count, "input");
  for (int n : output_map) check_node(n, node_count, "output");
  Circuit c;
  c.nodes_ = node_count;
  c.edges_ = std::move(edges);
  c.inputs_ = std::move(input_map);
  c.outputs_ = std::move(output_map);
  return c;
}

ComponentMap Circuit::connected_components() const {
  UnionFind uf(nodes_);
  for (const auto& [s, t] : edges_) uf.unite(s, t);  // direction ignored
  auto [count, assignment] = quotient(uf, nodes_);
  return ComponentMap{count, std::move(assignment)};
}

Corelation Circuit::underlying_corelation() const {
  ComponentMap pi0 = connected_components();
  std::map<int, std::vector<int>> blocks_by_component;
  const int in_arity = input_arity();
  for (int i = 0; i < in_arity; ++i) blocks_by_component[pi0.assignment[inputs_[i]]].push_back(i);
  for (int j = 0; j < output_arity(); ++j)
    blocks_by_component[pi0.assignment[outputs_[j]]].push_back(in_arity + j);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(blocks_by_component.size());
  for (auto& [component, members] : blocks_by_component) blocks.push_back(std::move(members));
  return Corelation::make(in_arity, output_arity(), std::move(blocks));
}

Circuit compose_circuits(const Circuit& g, const Circuit& f) {
  if (f.output_arity() != g.input_arity())
    throw std::invalid_argument("compose_circuits: output arity " +
                                std::to_string(f.output_arity()) + " != input arity " +
                                std::to_string(g.input_arity()));
  const int fn = f.node_count();
  UnionFind uf(fn + g.node_count());
  for (int y = 0; y < f.output_arity(); ++y) uf.unite(f.output_map()[y], fn + g.input_map()[y]);
  auto [count, assignment] = quotient(uf, fn + g.node_count());

  std::vector<std::pair<int, int>> edges;
  edges.reserve(f.edges().size() + g.edges().size());
  for (const auto& [s, t] : f.edges()) edges.emplace_back(assignment[s], assignment[t]);
  for (const auto& [s, t] : g.edges()) edges.emplace_back(assignment[fn + s], assignment[fn + t]);
  std::vector<int> inputs, outputs;
  for (int n : f.input_map()) inputs.push_back(assignment[n]);
  for (int n : g.output_map()) outputs.push_back(assignment[fn + n]);
  return Circuit::make(count, std::move(edges), std::move(inputs), std::move(outputs));
}

Circuit tensor_circuits(const Circuit& f, const Circuit& g) {
  const int fn = f.node_count();
  std::vector<std::pair<int, int>> edges = f.edges();
  for (const auto& [s, t] : g.edges()) edges.emplace_back(fn + s, fn + t);
  std::vector<int> inputs = f.input_map();
  for (int n : g.input_map()) inputs.push_back(fn + n);
  std::vector<int> outputs = f.output_map();
  for (int n : g.output_map()) outputs.push_back(fn + n);
  return Circuit::make(fn + g.node_count(), std::move(edges), std::move(inputs),
                       std::move(outputs));
}

std::string Circuit::to_dot() const {
  std::ostringstream os;
  os << "graph circuit {\n  rankdir=LR;\n";
  for (int n = 0; n < nodes_; ++n) os << "  n" << n << " [shape=point, width=0.12];\n";
  for (size_t e = 0; e < edges_.size(); ++e)
    os << "  n" << edges_[e].first << " -- n" << edges_[e].second << ";\n";
  for (size_t i = 0; i < inputs_.size(); ++i) {
    os << "  in" << i << " [shape=circle, label=\"x" << i << "\", color=purple];\n";
    os << "  in" << i << " -- n" << inputs_[i] << " [style=bold, color=purple];\n";
  }
  for (size_t j = 0; j < outputs_.size(); ++j) {
    os << "  out" << j << " [shape=doublecircle, label=\"y" << j << "\", color=purple];\n";
    os << "  n" << outputs_[j] << " -- out" << j << " [style=bold, color=purple];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bondsem
