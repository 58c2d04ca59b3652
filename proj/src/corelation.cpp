#include "bondsem/corelation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

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

std::vector<std::vector<int>> canonicalize(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

Corelation Corelation::make(int dom_size, int cod_size, std::vector<std::vector<int>> blocks) {
  if (dom_size < 0 || cod_size < 0)
    throw std::invalid_argument("corelation: negative boundary size");
  const int total = dom_size + cod_size;
  std::vector<char> seen(total, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("corelation: empty block");
    for (int idx : block) {
      if (idx < 0 || idx >= total)
        throw std::invalid_argument("corelation: index " + std::to_string(idx) +
                                    " out of range [0," + std::to_string(total) + ")");
      if (seen[idx])
        throw std::invalid_argument("corelation: index " + std::to_string(idx) +
                                    " appears in two blocks");
      seen[idx] = 1;
    }
  }
  for (int idx = 0; idx < total; ++idx)
    if (!seen[idx])
      throw std::invalid_argument("corelation: index " + std::to_string(idx) +
                                  " missing from the partition");
  return Corelation(dom_size, cod_size, canonicalize(std::move(blocks)));
}

Corelation Corelation::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return Corelation(n, n, std::move(blocks));
}

Corelation Corelation::braiding(int a, int b) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(a + b);
  for (int i = 0; i < a; ++i) blocks.push_back({i, (a + b) + b + i});
  for (int j = 0; j < b; ++j) blocks.push_back({a + j, (a + b) + j});
  return Corelation(a + b, b + a, canonicalize(std::move(blocks)));
}

Corelation Corelation::generator(std::string_view name) {
  if (name == "m") return Corelation(2, 1, {{0, 1, 2}});
  if (name == "i") return Corelation(0, 1, {{0}});
  if (name == "d") return Corelation(1, 2, {{0, 1, 2}});
  if (name == "e") return Corelation(1, 0, {{0}});
  if (name == "cap") return Corelation(0, 2, {{0, 1}});
  if (name == "cup") return Corelation(2, 0, {{0, 1}});
  throw std::invalid_argument("unknown wire generator: " + std::string(name));
}

Corelation Corelation::port_generator(std::string_view name) {
  const Corelation id1 = identity(1);
  const Corelation swap = braiding(1, 1);
  const Corelation cup = compose(generator("e"), generator("m"));
  const Corelation cap = compose(generator("d"), generator("i"));
  if (name == "m2") return tensor(tensor(id1, cup), id1);
  if (name == "i2") return cap;
  if (name == "d2") return tensor(tensor(id1, cap), id1);
  if (name == "e2") return cup;
  if (name == "mu2")
    return compose(tensor(generator("m"), generator("m")), tensor(tensor(id1, swap), id1));
  if (name == "iota2") return tensor(generator("i"), generator("i"));
  if (name == "delta2")
    return compose(tensor(tensor(id1, swap), id1), tensor(generator("d"), generator("d")));
  if (name == "eps2") return tensor(generator("e"), generator("e"));
  throw std::invalid_argument("unknown port generator: " + std::string(name));
}

Corelation Corelation::dagger() const {
  std::vector<std::vector<int>> blocks = blocks_;
  for (auto& block : blocks)
    for (int& idx : block) idx = idx < dom_ ? cod_ + idx : idx - dom_;
  return Corelation(cod_, dom_, canonicalize(std::move(blocks)));
}

Corelation compose(const Corelation& g, const Corelation& f) {
  if (f.cod_size() != g.dom_size())
    throw std::invalid_argument("compose: codomain " + std::to_string(f.cod_size()) +
                                " != domain " + std::to_string(g.dom_size()));
  const int a = f.dom_size(), b = f.cod_size(), c = g.cod_size();
  UnionFind uf(a + b + c);
  for (const auto& block : f.blocks())
    for (size_t k = 1; k < block.size(); ++k) uf.unite(block[0], block[k]);
  for (const auto& block : g.blocks())
    for (size_t k = 1; k < block.size(); ++k) uf.unite(a + block[0], a + block[k]);

  // Collect classes, keep boundary members, renumber C down past the middle.
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < a; ++i) classes[uf.find(i)].push_back(i);
  for (int j = 0; j < c; ++j) classes[uf.find(a + b + j)].push_back(a + j);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : classes) blocks.push_back(std::move(members));
  return Corelation::make(a, c, std::move(blocks));
}

Corelation tensor(const Corelation& f, const Corelation& g) {
  const int fa = f.dom_size(), fb = f.cod_size();
  const int ga = g.dom_size(), gb = g.cod_size();
  std::vector<std::vector<int>> blocks = f.blocks();
  for (auto& block : blocks)
    for (int& idx : block)
      if (idx >= fa) idx += ga;
  for (auto block : g.blocks()) {
    for (int& idx : block) idx = idx < ga ? fa + idx : fa + fb + idx;
    blocks.push_back(std::move(block));
  }
  return Corelation::make(fa + ga, fb + gb, std::move(blocks));
}

}  // namespace bondsem
