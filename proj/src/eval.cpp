#include "bondsem/eval.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace bondsem {

namespace {

int wires_per_object(const Signature& sig) { return sig.name == "corel-wire" ? 1 : 2; }

const std::map<std::string, std::string, std::less<>>& bond_to_port() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"M", "m2"},   {"I", "i2"},     {"D", "d2"},     {"E", "e2"},
      {"Mp", "mu2"}, {"Ip", "iota2"}, {"Dp", "delta2"}, {"Ep", "eps2"}};
  return table;
}

Corelation corel_generator_image(const Signature& sig, const std::string& name) {
  if (sig.name == "corel-wire") return Corelation::generator(name);
  if (sig.name == "corel-port") return Corelation::port_generator(name);
  if (sig.name == "bond") return Corelation::port_generator(bond_to_port().at(name));
  throw std::invalid_argument("no corelation semantics for signature " + sig.name);
}

// Coordinates per prop object in the linear-relation semantics.
int coords_per_object(const Signature& sig) {
  if (sig.name == "bond") return 2;        // one (effort, flow) pair per port
  if (sig.name == "corel-wire") return 2;  // one (potential, current) pair per wire
  if (sig.name == "corel-port") return 4;  // two terminal pairs per port
  throw std::invalid_argument("no relation semantics for signature " + sig.name);
}

LinearRelation lagrel_generator_image(const Signature& sig, const std::string& name) {
  if (sig.name == "bond") return LinearRelation::pair_generator(name);
  if (sig.name == "corel-wire") return black_box(Corelation::generator(name));
  if (sig.name == "corel-port") return black_box(Corelation::port_generator(name));
  throw std::invalid_argument("no relation semantics for signature " + sig.name);
}

// Block swap of a coordinates after b coordinates, each object cw wide.
LinearRelation lagrel_braiding(int a, int b, int cw) {
  std::vector<int> perm(cw * (a + b));
  for (int i = 0; i < cw * a; ++i) perm[i] = cw * b + i;
  for (int j = 0; j < cw * b; ++j) perm[cw * a + j] = j;
  return LinearRelation::permutation(perm);
}

}  // namespace

Corelation eval_corel(const Term& t, const Signature& sig) {
  const int w = wires_per_object(sig);
  switch (t.kind()) {
    case Term::Kind::generator:
      return corel_generator_image(sig, t.gen_name());
    case Term::Kind::identity:
      return Corelation::identity(w * t.object());
    case Term::Kind::braiding:
      return Corelation::braiding(w * t.braid_left(), w * t.braid_right());
    case Term::Kind::compose:
      return compose(eval_corel(t.after(), sig), eval_corel(t.before(), sig));
    case Term::Kind::tensor:
      return tensor(eval_corel(t.left(), sig), eval_corel(t.right(), sig));
  }
  throw std::logic_error("unreachable");
}

LinearRelation eval_lagrel(const Term& t, const Signature& sig) {
  const int cw = coords_per_object(sig);
  switch (t.kind()) {
    case Term::Kind::generator:
      return lagrel_generator_image(sig, t.gen_name());
    case Term::Kind::identity:
      return LinearRelation::identity(cw * t.object());
    case Term::Kind::braiding:
      return lagrel_braiding(t.braid_left(), t.braid_right(), cw);
    case Term::Kind::compose:
      return rel_compose(eval_lagrel(t.after(), sig), eval_lagrel(t.before(), sig));
    case Term::Kind::tensor:
      return rel_tensor(eval_lagrel(t.left(), sig), eval_lagrel(t.right(), sig));
  }
  throw std::logic_error("unreachable");
}

LinearRelation black_box(const Corelation& c) {
  const int dom = c.dom_size(), cod = c.cod_size();
  const int ambient = 2 * (dom + cod);
  Mat constraints;
  for (const auto& block : c.blocks()) {
    // Potentials agree across the block.
    for (size_t k = 1; k < block.size(); ++k) {
      Vec row(ambient, Rat(0));
      row[2 * block[0]] = 1;
      row[2 * block[k]] = -1;
      constraints.push_back(std::move(row));
    }
    // Input currents sum to output currents.
    Vec row(ambient, Rat(0));
    for (int t : block) row[2 * t + 1] = t < dom ? 1 : -1;
    constraints.push_back(std::move(row));
  }
  return LinearRelation::from_constraints(2 * dom, 2 * cod, constraints);
}

LinearRelation alpha(int n) {
  if (n < 0) throw std::invalid_argument("alpha: negative port count");
  // V = phi2 - phi1, I = I1 = -I2 on coordinates (V, I, phi1, I1, phi2, I2).
  static const LinearRelation alpha1 = LinearRelation::from_constraints(
      2, 4,
      {{1, 0, 1, 0, -1, 0},
       {0, 1, 0, -1, 0, 0},
       {0, 1, 0, 0, 0, 1}});
  LinearRelation result = LinearRelation::identity(0);
  for (int j = 0; j < n; ++j) result = rel_tensor(result, alpha1);
  return result;
}

NaturalityReport check_naturality(const Term& t) {
  const Signature& sig = Signature::bond();
  auto [m, n] = typecheck(t, sig);
  LinearRelation effort_flow = eval_lagrel(t, sig);
  LinearRelation potential_current = black_box(eval_corel(t, sig));
  NaturalityReport report;
  report.term = t;
  report.dom = m;
  report.cod = n;
  report.lhs = rel_compose(alpha(n), effort_flow);
  report.rhs = rel_compose(potential_current, alpha(m));
  report.equal = report.lhs == report.rhs;
  return report;
}

namespace {

Term random_leaf(std::mt19937_64& rng, const std::vector<std::string>& gens) {
  int roll = static_cast<int>(rng() % 10);
  if (roll < 7) return Term::gen(gens[rng() % gens.size()]);
  if (roll < 9) return Term::id(static_cast<int>(rng() % 3));
  return Term::braid(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2));
}

Term random_build(int size, std::mt19937_64& rng, const std::vector<std::string>& gens,
                  const Signature& sig) {
  if (size <= 1) return random_leaf(rng, gens);
  const bool composable = size >= 3;
  if (!composable || rng() % 2 == 0) {
    int s1 = 1 + static_cast<int>(rng() % (size - 1));
    Term l = random_build(s1, rng, gens, sig);
    Term r = random_build(size - s1, rng, gens, sig);
    return Term::ten(l, r);
  }
  // Compose branch reserves one leaf for the identity that repairs arities;
  // id(0) keeps the leaf count exact when no repair is needed.
  int budget = size - 1;
  int s1 = 1 + static_cast<int>(rng() % (budget - 1));
  Term first = random_build(s1, rng, gens, sig);
  Term second = random_build(budget - s1, rng, gens, sig);
  int c1 = typecheck(first, sig).second;
  int d2 = typecheck(second, sig).first;
  if (c1 < d2)
    first = Term::ten(first, Term::id(d2 - c1));
  else
    second = Term::ten(second, Term::id(c1 - d2));
  return Term::comp(second, first);
}

}  // namespace

Term random_term(int size, std::uint64_t seed, const Signature& sig) {
  if (size < 1) throw std::invalid_argument("random_term: size must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::string> gens;
  gens.reserve(sig.generators.size());
  for (const auto& [name, arity] : sig.generators) gens.push_back(name);
  return random_build(size, rng, gens, sig);
}

}  // namespace bondsem
