#include "bondsem/json_io.hpp"

namespace bondsem {

nlohmann::json to_json(const Corelation& c) {
  return {{"dom", c.dom_size()}, {"cod", c.cod_size()}, {"blocks", c.blocks()}};
}

Corelation corelation_from_json(const nlohmann::json& j) {
  return Corelation::make(j.at("dom").get<int>(), j.at("cod").get<int>(),
                          j.at("blocks").get<std::vector<std::vector<int>>>());
}

nlohmann::json to_json(const Circuit& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [s, t] : c.edges()) edges.push_back({s, t});
  return {{"nodes", c.node_count()},
          {"edges", edges},
          {"inputs", c.input_map()},
          {"outputs", c.output_map()}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("circuit json: each edge must be a [source, target] pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Circuit::make(j.at("nodes").get<int>(), std::move(edges),
                       j.at("inputs").get<std::vector<int>>(),
                       j.at("outputs").get<std::vector<int>>());
}

nlohmann::json to_json(const LinearRelation& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const Vec& row : r.space().basis()) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const Rat& x : row) jrow.push_back(rat_to_string(x));
    basis.push_back(std::move(jrow));
  }
  return {{"dom_dim", r.dom_dim()}, {"cod_dim", r.cod_dim()}, {"basis", basis}};
}

LinearRelation relation_from_json(const nlohmann::json& j) {
  Mat rows;
  for (const auto& jrow : j.at("basis")) {
    Vec row;
    for (const auto& cell : jrow) row.push_back(rat_from_string(cell.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return LinearRelation::from_span(j.at("dom_dim").get<int>(), j.at("cod_dim").get<int>(),
                                   std::move(rows));
}

}  // namespace bondsem
