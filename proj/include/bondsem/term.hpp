#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

namespace bondsem {

/// Generator table of a prop presentation; arities are counted in the
/// signature's own object units (ports for "bond" and "corel-port",
/// wires for "corel-wire").
struct Signature {
  std::string name;
  std::map<std::string, std::pair<int, int>, std::less<>> generators;

  std::pair<int, int> arity(std::string_view gen) const;

  static const Signature& bond();        // M I D E Mp Ip Dp Ep
  static const Signature& corel_wire();  // m i d e
  static const Signature& corel_port();  // m2 i2 d2 e2 mu2 iota2 delta2 eps2
  static const Signature& by_name(std::string_view name);
};

/// Immutable term of the free prop on a signature: generators, identities,
/// braidings, composition and tensor. Copies share structure.
class Term {
 public:
  enum class Kind { generator, identity, braiding, compose, tensor };

  Term() : Term(id(0)) {}

  static Term gen(std::string name);
  static Term id(int n);
  static Term braid(int a, int b);
  /// before first, then after.
  static Term comp(Term after, Term before);
  static Term ten(Term left, Term right);

  Kind kind() const { return node_->kind; }
  const std::string& gen_name() const { return node_->name; }
  int object() const { return node_->a; }       // identity
  int braid_left() const { return node_->a; }   // braiding
  int braid_right() const { return node_->b; }  // braiding
  Term after() const { return Term(node_->x); }
  Term before() const { return Term(node_->y); }
  Term left() const { return Term(node_->x); }
  Term right() const { return Term(node_->y); }

  /// Number of generator/identity/braiding leaves.
  int leaf_count() const;

  bool operator==(const Term& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    int a = 0, b = 0;
    std::shared_ptr<const Node> x, y;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Returns (dom, cod) in object units; throws std::invalid_argument naming
/// the offending subterm path on unknown generators or arity mismatches.
std::pair<int, int> typecheck(const Term& t, const Signature& sig);

/// Prefix S-expression encoding used by fixtures, e.g. (comp (gen E) (gen M)).
std::string to_sexpr(const Term& t);
Term term_from_sexpr(std::string_view text);

}  // namespace bondsem
