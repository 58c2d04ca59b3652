#pragma once

#include <compare>
#include <string_view>
#include <vector>

namespace bondsem {

/// A corelation m -> n: a partition of the flat boundary index set
/// {0..m-1} (inputs) + {m..m+n-1} (outputs). Blocks are kept canonical
/// (members ascending, blocks ordered by least member), so equality and
/// ordering are structural. Values are immutable.
class Corelation {
 public:
  Corelation() = default;

  /// Validates that blocks partition the full boundary index set; the error
  /// message names the offending index.
  static Corelation make(int dom_size, int cod_size, std::vector<std::vector<int>> blocks);
  static Corelation identity(int n);
  /// a+b -> b+a, input i < a connected to output b+i, input a+j to output j.
  static Corelation braiding(int a, int b);
  /// Wire-level generators: m, i, d, e, cup, cap.
  static Corelation generator(std::string_view name);
  /// Port-level generators: m2, i2, d2, e2, mu2, iota2, delta2, eps2.
  static Corelation port_generator(std::string_view name);

  int dom_size() const { return dom_; }
  int cod_size() const { return cod_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  Corelation dagger() const;

  bool operator==(const Corelation&) const = default;
  auto operator<=>(const Corelation&) const = default;

 private:
  Corelation(int dom, int cod, std::vector<std::vector<int>> canonical_blocks)
      : dom_(dom), cod_(cod), blocks_(std::move(canonical_blocks)) {}

  int dom_ = 0, cod_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// f first, then g; the shared boundary is glued and blocks that end up
/// touching only the middle are discarded (corestriction).
Corelation compose(const Corelation& g, const Corelation& f);
Corelation tensor(const Corelation& f, const Corelation& g);

inline bool equal(const Corelation& f, const Corelation& g) { return f == g; }

}  // namespace bondsem
