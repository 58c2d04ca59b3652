#pragma once

#include <json.hpp>

#include "bondsem/circuit.hpp"
#include "bondsem/corelation.hpp"
#include "bondsem/linrel.hpp"

namespace bondsem {

// {"dom": m, "cod": n, "blocks": [[...], ...]} with blocks in canonical order.
nlohmann::json to_json(const Corelation& c);
Corelation corelation_from_json(const nlohmann::json& j);

// {"nodes": n, "edges": [[s,t],...], "inputs": [...], "outputs": [...]}
nlohmann::json to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

// {"dom_dim": a, "cod_dim": b, "basis": [["p/q", ...], ...]}
nlohmann::json to_json(const LinearRelation& r);
LinearRelation relation_from_json(const nlohmann::json& j);

}  // namespace bondsem
