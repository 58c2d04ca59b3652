#include "bondsem/term.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bondsem {

std::pair<int, int> Signature::arity(std::string_view gen) const {
  auto it = generators.find(gen);
  if (it == generators.end())
    throw std::invalid_argument("unknown generator '" + std::string(gen) + "' in signature " +
                                name);
  return it->second;
}

const Signature& Signature::bond() {
  static const Signature sig{"bond",
                             {{"M", {2, 1}},
                              {"I", {0, 1}},
                              {"D", {1, 2}},
                              {"E", {1, 0}},
                              {"Mp", {2, 1}},
                              {"Ip", {0, 1}},
                              {"Dp", {1, 2}},
                              {"Ep", {1, 0}}}};
  return sig;
}

const Signature& Signature::corel_wire() {
  static const Signature sig{"corel-wire",
                             {{"m", {2, 1}}, {"i", {0, 1}}, {"d", {1, 2}}, {"e", {1, 0}}}};
  return sig;
}

const Signature& Signature::corel_port() {
  static const Signature sig{"corel-port",
                             {{"m2", {2, 1}},
                              {"i2", {0, 1}},
                              {"d2", {1, 2}},
                              {"e2", {1, 0}},
                              {"mu2", {2, 1}},
                              {"iota2", {0, 1}},
                              {"delta2", {1, 2}},
                              {"eps2", {1, 0}}}};
  return sig;
}

const Signature& Signature::by_name(std::string_view name) {
  if (name == "bond") return bond();
  if (name == "corel-wire") return corel_wire();
  if (name == "corel-port") return corel_port();
  throw std::invalid_argument("unknown signature: " + std::string(name));
}

Term Term::gen(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::generator;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::id(int n) {
  if (n < 0) throw std::invalid_argument("identity: negative object");
  auto node = std::make_shared<Node>();
  node->kind = Kind::identity;
  node->a = n;
  return Term(std::move(node));
}

Term Term::braid(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("braiding: negative object");
  auto node = std::make_shared<Node>();
  node->kind = Kind::braiding;
  node->a = a;
  node->b = b;
  return Term(std::move(node));
}

Term Term::comp(Term after, Term before) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::compose;
  node->x = after.node_;
  node->y = before.node_;
  return Term(std::move(node));
}

Term Term::ten(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::tensor;
  node->x = left.node_;
  node->y = right.node_;
  return Term(std::move(node));
}

int Term::leaf_count() const {
  switch (kind()) {
    case Kind::compose:
      return after().leaf_count() + before().leaf_count();
    case Kind::tensor:
      return left().leaf_count() + right().leaf_count();
    default:
      return 1;
  }
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::generator:
      return gen_name() == other.gen_name();
    case Kind::identity:
      return object() == other.object();
    case Kind::braiding:
      return braid_left() == other.braid_left() && braid_right() == other.braid_right();
    case Kind::compose:
      return after() == other.after() && before() == other.before();
    case Kind::tensor:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

namespace {

std::pair<int, int> typecheck_at(const Term& t, const Signature& sig, const std::string& path) {
  switch (t.kind()) {
    case Term::Kind::generator:
      try {
        return sig.arity(t.gen_name());
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " (at " + path + ")");
      }
    case Term::Kind::identity:
      return {t.object(), t.object()};
    case Term::Kind::braiding:
      return {t.braid_left() + t.braid_right(), t.braid_left() + t.braid_right()};
    case Term::Kind::compose: {
      auto [bd, bc] = typecheck_at(t.before(), sig, path + ".before");
      auto [ad, ac] = typecheck_at(t.after(), sig, path + ".after");
      if (bc != ad)
        throw std::invalid_argument("arity mismatch at " + path + ": codomain " +
                                    std::to_string(bc) + " != domain " + std::to_string(ad));
      return {bd, ac};
    }
    case Term::Kind::tensor: {
      auto [ld, lc] = typecheck_at(t.left(), sig, path + ".left");
      auto [rd, rc] = typecheck_at(t.right(), sig, path + ".right");
      return {ld + rd, lc + rc};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::pair<int, int> typecheck(const Term& t, const Signature& sig) {
  return typecheck_at(t, sig, "root");
}

namespace {

void write_sexpr(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::generator:
      os << "(gen " << t.gen_name() << ")";
      return;
    case Term::Kind::identity:
      os << "(id " << t.object() << ")";
      return;
    case Term::Kind::braiding:
      os << "(braid " << t.braid_left() << " " << t.braid_right() << ")";
      return;
    case Term::Kind::compose:
      os << "(comp ";
      write_sexpr(os, t.after());
      os << " ";
      write_sexpr(os, t.before());
      os << ")";
      return;
    case Term::Kind::tensor:
      os << "(tensor ";
      write_sexpr(os, t.left());
      os << " ";
      write_sexpr(os, t.right());
      os << ")";
      return;
  }
}

struct SexprReader {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("sexpr: expected '" + std::string(1, c) + "' at offset " +
                                  std::to_string(pos));
    ++pos;
  }
  std::string atom() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (start == pos) throw std::invalid_argument("sexpr: expected atom at offset " +
                                                  std::to_string(pos));
    return std::string(text.substr(start, pos - start));
  }
  int number() {
    std::string a = atom();
    try {
      size_t used = 0;
      int v = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      return v;
    } catch (...) {
      throw std::invalid_argument("sexpr: expected number, got '" + a + "'");
    }
  }

  Term term() {
    expect('(');
    std::string head = atom();
    Term result = Term::id(0);
    if (head == "gen") {
      result = Term::gen(atom());
    } else if (head == "id") {
      result = Term::id(number());
    } else if (head == "braid") {
      int a = number();
      result = Term::braid(a, number());
    } else if (head == "comp") {
      Term after = term();
      result = Term::comp(after, term());
    } else if (head == "tensor") {
      Term left = term();
      result = Term::ten(left, term());
    } else {
      throw std::invalid_argument("sexpr: unknown head '" + head + "'");
    }
    expect(')');
    return result;
  }
};

}  // namespace

std::string to_sexpr(const Term& t) {
  std::ostringstream os;
  write_sexpr(os, t);
  return os.str();
}

Term term_from_sexpr(std::string_view text) {
  SexprReader r{text};
  Term t = r.term();
  r.skip_ws();
  if (r.pos != text.size())
    throw std::invalid_argument("sexpr: trailing input at offset " + std::to_string(r.pos));
  return t;
}

}  // namespace bondsem
