#include "bondsem/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bondsem {

std::vector<Corelation> enumerate_port_corelations(int ports_in, int ports_out, int max_leaves) {
  if (ports_in < 0 || ports_out < 0 || max_leaves < 1)
    throw std::invalid_argument("enumerate: arities must be >= 0 and max_leaves >= 1");

  // levels[k] holds the values whose minimal term size is exactly k leaves.
  // Combining minimal representatives is enough: any value of a larger term
  // is also the value of one whose factors are minimal.
  std::vector<std::set<Corelation>> levels(max_leaves + 1);
  std::set<Corelation> seen;
  auto emit = [&](int level, const Corelation& c) {
    if (seen.insert(c).second) levels[level].insert(c);
  };

  for (const char* g : {"m2", "i2", "d2", "e2", "mu2", "iota2", "delta2", "eps2"})
    emit(1, Corelation::port_generator(g));
  for (int n = 0; n <= 2; ++n) emit(1, Corelation::identity(2 * n));
  emit(1, Corelation::braiding(2, 2));
  emit(1, Corelation::braiding(2, 4));
  emit(1, Corelation::braiding(4, 2));

  for (int k = 2; k <= max_leaves; ++k) {
    for (int k1 = 1; k1 < k; ++k1) {
      const int k2 = k - k1;
      for (const Corelation& u : levels[k1]) {
        for (const Corelation& v : levels[k2]) {
          emit(k, tensor(u, v));
          if (u.cod_size() == v.dom_size()) emit(k, compose(v, u));
        }
      }
    }
  }

  std::vector<Corelation> result;
  for (const auto& level : levels)
    for (const Corelation& c : level)
      if (c.dom_size() == 2 * ports_in && c.cod_size() == 2 * ports_out) result.push_back(c);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace bondsem
