#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bondsem/corelation.hpp"

namespace bondsem {

struct ComponentMap {
  int component_count = 0;
  std::vector<int> assignment;  // node index -> component index, surjective
};

/// A circuit: a finite graph plus boundary maps sending each input/output
/// element to a node. Circuits are not canonicalized and carry no equality;
/// they are compared through their underlying corelations only.
class Circuit {
 public:
  Circuit() = default;

  static Circuit make(int node_count, std::vector<std::pair<int, int>> edges,
                      std::vector<int> input_map, std::vector<int> output_map);

  int node_count() const { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& input_map() const { return inputs_; }
  const std::vector<int>& output_map() const { return outputs_; }
  int input_arity() const { return static_cast<int>(inputs_.size()); }
  int output_arity() const { return static_cast<int>(outputs_.size()); }

  /// Connected components of the underlying undirected graph.
  ComponentMap connected_components() const;

  /// Boundary elements mapped through connected components; components not
  /// touched by the boundary are discarded.
  Corelation underlying_corelation() const;

  std::string to_dot() const;

 private:
  int nodes_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> inputs_, outputs_;
};

/// f first, then g: nodes glued along the shared boundary (pushout).
Circuit compose_circuits(const Circuit& g, const Circuit& f);
Circuit tensor_circuits(const Circuit& f, const Circuit& g);

}  // namespace bondsem
