#pragma once

#include <vector>

#include "bondsem/corelation.hpp"

namespace bondsem {

/// All corelations 2*ports_in -> 2*ports_out reachable by well-typed
/// corel-port terms with at most max_leaves leaves. Leaves are the eight
/// port generators plus id(0..2) and sigma(1,1), sigma(1,2), sigma(2,1)
/// in port units. The search runs over evaluated values level by leaf
/// count, which is sound because evaluation is functorial. The result is
/// sorted canonically and deterministic.
std::vector<Corelation> enumerate_port_corelations(int ports_in, int ports_out, int max_leaves);

}  // namespace bondsem
