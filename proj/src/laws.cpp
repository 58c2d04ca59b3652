#include "bondsem/laws.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "bondsem/eval.hpp"
#include "bondsem/json_io.hpp"
#include "bondsem/sweep.hpp"

namespace bondsem {

namespace {

Term G(const std::string& name) { return Term::gen(name); }
Term Id(int n) { return Term::id(n); }
Term Br(int a, int b) { return Term::braid(a, b); }
Term C(Term after, Term before) { return Term::comp(std::move(after), std::move(before)); }
Term T(Term l, Term r) { return Term::ten(std::move(l), std::move(r)); }

// The monoid/comonoid quadruple of one Frobenius structure on object 1.
struct Quad {
  std::string tag;   // prefix for equation names
  std::string mult, unit, comult, counit;
};

void add(std::vector<Equation>& out, const std::string& sig, const std::string& name, Term lhs,
         Term rhs, const std::string& note) {
  out.push_back(Equation{name, std::move(lhs), std::move(rhs), sig, note});
}

// Monoid + comonoid + Frobenius + special + extra for q; commutativity or
// symmetry are added by the callers that need them.
void frobenius_family(std::vector<Equation>& out, const std::string& sig, const Quad& q) {
  Term mu = G(q.mult), io = G(q.unit), de = G(q.comult), ep = G(q.counit);
  auto n = [&](const char* s) { return q.tag + "/" + s; };
  add(out, sig, n("assoc"), C(mu, T(mu, Id(1))), C(mu, T(Id(1), mu)),
      "associativity of the multiplication");
  add(out, sig, n("unit-left"), C(mu, T(io, Id(1))), Id(1), "left unit law");
  add(out, sig, n("unit-right"), C(mu, T(Id(1), io)), Id(1), "right unit law");
  add(out, sig, n("coassoc"), C(T(de, Id(1)), de), C(T(Id(1), de), de),
      "coassociativity of the comultiplication");
  add(out, sig, n("counit-left"), C(T(ep, Id(1)), de), Id(1), "left counit law");
  add(out, sig, n("counit-right"), C(T(Id(1), ep), de), Id(1), "right counit law");
  add(out, sig, n("frobenius-left"), C(T(Id(1), mu), T(de, Id(1))), C(de, mu),
      "Frobenius law, left form");
  add(out, sig, n("frobenius-right"), C(T(mu, Id(1)), T(Id(1), de)), C(de, mu),
      "Frobenius law, right form");
  add(out, sig, n("special"), C(mu, de), Id(1), "special law: multiply after comultiply");
  add(out, sig, n("extra"), C(ep, io), Id(0), "extra law: counit after unit");
}

void commutative_laws(std::vector<Equation>& out, const std::string& sig, const Quad& q) {
  add(out, sig, q.tag + "/commutative", C(G(q.mult), Br(1, 1)), G(q.mult),
      "commutativity of the multiplication");
  add(out, sig, q.tag + "/cocommutative", C(Br(1, 1), G(q.comult)), G(q.comult),
      "cocommutativity of the comultiplication");
}

void symmetric_laws(std::vector<Equation>& out, const std::string& sig, const Quad& q) {
  Term em = C(G(q.counit), G(q.mult));
  Term di = C(G(q.comult), G(q.unit));
  add(out, sig, q.tag + "/symmetric", C(em, Br(1, 1)), em, "symmetry of counit after multiply");
  add(out, sig, q.tag + "/cosymmetric", C(Br(1, 1), di), di, "symmetry of comultiply after unit");
}

// Relaxed compatibility between a monoid and a comonoid: the multiplicative
// law is kept and the unit/counit laws are replaced by the three-object
// weak forms (each in its two braid variants).
void weak_bimonoid_family(std::vector<Equation>& out, const std::string& sig, const Quad& q) {
  Term mu = G(q.mult), io = G(q.unit), de = G(q.comult), ep = G(q.counit);
  auto n = [&](const char* s) { return q.tag + "/" + s; };
  add(out, sig, n("compat"), C(de, mu),
      C(T(mu, mu), C(T(Id(1), T(Br(1, 1), Id(1))), T(de, de))),
      "multiplication-comultiplication compatibility");
  Term em = C(ep, mu);
  Term lhs2 = C(em, T(mu, Id(1)));
  add(out, sig, n("weak-counit-a"), lhs2, C(T(em, em), T(Id(1), T(de, Id(1)))),
      "weak counit law, plain comultiplication");
  add(out, sig, n("weak-counit-b"), lhs2, C(T(em, em), T(Id(1), T(C(Br(1, 1), de), Id(1)))),
      "weak counit law, braided comultiplication");
  Term di = C(de, io);
  Term lhs3 = C(T(de, Id(1)), di);
  add(out, sig, n("weak-unit-a"), lhs3, C(T(Id(1), T(mu, Id(1))), T(di, di)),
      "weak unit law, plain multiplication");
  add(out, sig, n("weak-unit-b"), lhs3, C(T(Id(1), T(C(mu, Br(1, 1)), Id(1))), T(di, di)),
      "weak unit law, braided multiplication");
}

// Strict bimonoid compatibility: the laws that are too strong for
// corelation junctions but hold for the mixed structures on k^2.
void bimonoid_family(std::vector<Equation>& out, const std::string& sig, const Quad& q) {
  Term mu = G(q.mult), io = G(q.unit), de = G(q.comult), ep = G(q.counit);
  auto n = [&](const char* s) { return q.tag + "/" + s; };
  add(out, sig, n("compat"), C(de, mu),
      C(T(mu, mu), C(T(Id(1), T(Br(1, 1), Id(1))), T(de, de))),
      "multiplication-comultiplication compatibility");
  add(out, sig, n("counit-mult"), C(ep, mu), T(ep, ep), "counit absorbs the multiplication");
  add(out, sig, n("unit-comult"), C(de, io), T(io, io), "unit duplicates under comultiplication");
  add(out, sig, n("counit-unit"), C(ep, io), Id(0), "counit after unit");
}

std::vector<Equation> build_registry(std::string_view suite) {
  std::vector<Equation> out;
  const std::string wire = "corel-wire", port = "corel-port", bond = "bond";

  if (suite == "wire-frobenius") {
    Quad q{"wire", "m", "i", "d", "e"};
    frobenius_family(out, wire, q);
    commutative_laws(out, wire, q);
    return out;
  }
  if (suite == "series") {
    Quad q{"series", "m2", "i2", "d2", "e2"};
    frobenius_family(out, port, q);
    symmetric_laws(out, port, q);
    return out;
  }
  if (suite == "parallel") {
    Quad q{"parallel", "mu2", "iota2", "delta2", "eps2"};
    frobenius_family(out, port, q);
    commutative_laws(out, port, q);
    return out;
  }
  if (suite == "weak-bimonoid") {
    weak_bimonoid_family(out, port, Quad{"par-ser", "mu2", "iota2", "d2", "e2"});
    weak_bimonoid_family(out, port, Quad{"ser-par", "m2", "i2", "delta2", "eps2"});
    add(out, port, "extra-cross/eps-i", C(G("eps2"), G("i2")), Id(0),
        "parallel counit after series unit");
    add(out, port, "extra-cross/e-iota", C(G("e2"), G("iota2")), Id(0),
        "series counit after parallel unit");
    add(out, port, "junction-swap", C(G("m2"), G("delta2")), C(G("mu2"), G("d2")),
        "series after parallel equals parallel after series");
    Term t1 = C(G("m2"), G("delta2"));
    add(out, port, "junction-swap/idempotent", C(t1, t1), t1,
        "the swapped-junction composite is idempotent");
    return out;
  }
  if (suite == "lagrel-frobenius") {
    Quad zero_junction{"zero-junction", "Mp", "Ip", "Dp", "Ep"};
    Quad one_junction{"one-junction", "M", "I", "D", "E"};
    frobenius_family(out, bond, zero_junction);
    commutative_laws(out, bond, zero_junction);
    frobenius_family(out, bond, one_junction);
    commutative_laws(out, bond, one_junction);
    return out;
  }
  if (suite == "lagrel-bimonoid") {
    bimonoid_family(out, bond, Quad{"mixed-zero-one", "Mp", "Ip", "D", "E"});
    bimonoid_family(out, bond, Quad{"mixed-one-zero", "M", "I", "Dp", "Ep"});
    return out;
  }
  if (suite == "lagrel-inverse") {
    Term j1 = C(G("Mp"), G("D"));
    Term j2 = C(G("M"), G("Dp"));
    add(out, bond, "inverse/right", C(j1, j2), Id(1),
        "round trip through both junction composites");
    add(out, bond, "inverse/left", C(j2, j1), Id(1),
        "round trip through both junction composites, other order");
    return out;
  }
  if (suite == "bondgraph-presentation") {
    Quad one_junction{"one-junction", "M", "I", "D", "E"};
    Quad zero_junction{"zero-junction", "Mp", "Ip", "Dp", "Ep"};
    frobenius_family(out, bond, one_junction);
    symmetric_laws(out, bond, one_junction);
    frobenius_family(out, bond, zero_junction);
    symmetric_laws(out, bond, zero_junction);
    weak_bimonoid_family(out, bond, Quad{"weak-one-zero", "M", "I", "Dp", "Ep"});
    weak_bimonoid_family(out, bond, Quad{"weak-zero-one", "Mp", "Ip", "D", "E"});
    add(out, bond, "extra-cross/E-Ip", C(G("E"), G("Ip")), Id(0),
        "one-junction counit after zero-junction unit");
    add(out, bond, "extra-cross/Ep-I", C(G("Ep"), G("I")), Id(0),
        "zero-junction counit after one-junction unit");
    Term p1 = C(G("Mp"), C(G("D"), C(G("M"), G("Dp"))));
    Term p2 = C(G("M"), C(G("Dp"), C(G("Mp"), G("D"))));
    add(out, bond, "idempotent/zero-one", C(p1, p1), p1,
        "the four-junction ladder is idempotent");
    add(out, bond, "idempotent/one-zero", C(p2, p2), p2,
        "the four-junction ladder is idempotent, other order");
    return out;
  }
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::corel ? "corel" : "lagrel"; }

Backend backend_by_name(std::string_view name) {
  if (name == "corel") return Backend::corel;
  if (name == "lagrel") return Backend::lagrel;
  throw std::invalid_argument("unknown backend: " + std::string(name));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "wire-frobenius", "series",          "parallel",       "weak-bimonoid",
      "lagrel-frobenius", "lagrel-bimonoid", "lagrel-inverse", "bondgraph-presentation"};
  return names;
}

std::vector<Equation> law_registry(std::string_view suite) { return build_registry(suite); }

Verdict check_equation(const Equation& eq, Backend backend) {
  const Signature& sig = Signature::by_name(eq.signature);
  Verdict v;
  v.equation = eq.name;
  v.backend = backend_name(backend);
  if (backend == Backend::corel) {
    Corelation lhs = eval_corel(eq.lhs, sig);
    Corelation rhs = eval_corel(eq.rhs, sig);
    v.holds = lhs == rhs;
    if (!v.holds) v.counterexample = {to_json(lhs).dump(), to_json(rhs).dump()};
  } else {
    LinearRelation lhs = eval_lagrel(eq.lhs, sig);
    LinearRelation rhs = eval_lagrel(eq.rhs, sig);
    v.holds = lhs == rhs;
    if (!v.holds) v.counterexample = {to_json(lhs).dump(), to_json(rhs).dump()};
  }
  return v;
}

std::vector<Verdict> run_suite(std::string_view suite, Backend backend, int threads) {
  std::vector<Equation> eqs = law_registry(suite);
  return sweep_map(
      static_cast<int>(eqs.size()), [&](int i) { return check_equation(eqs[i], backend); },
      threads);
}

std::string dump_suite(std::string_view suite) {
  std::vector<Equation> eqs = law_registry(suite);
  std::ostringstream os;
  os << "(suite \"" << suite << "\" (sig " << (eqs.empty() ? "bond" : eqs.front().signature)
     << ")\n";
  for (const Equation& eq : eqs) {
    os << "  (law \"" << eq.name << "\"\n";
    os << "    " << to_sexpr(eq.lhs) << "\n";
    os << "    " << to_sexpr(eq.rhs) << "\n";
    os << "    \"" << eq.note << "\")\n";
  }
  os << ")\n";
  return os.str();
}

namespace {

struct FixtureReader {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("fixture: expected '" + std::string(1, c) + "' at offset " +
                                  std::to_string(pos));
    ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  std::string atom() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != '"')
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  std::string quoted() {
    expect('"');
    size_t start = pos;
    while (pos < text.size() && text[pos] != '"') ++pos;
    if (pos >= text.size()) throw std::invalid_argument("fixture: unterminated string");
    std::string s(text.substr(start, pos - start));
    ++pos;
    return s;
  }
  // Consumes one balanced S-expression and returns its text.
  std::string balanced() {
    skip_ws();
    size_t start = pos;
    expect('(');
    int depth = 1;
    while (pos < text.size() && depth > 0) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) throw std::invalid_argument("fixture: unbalanced parentheses");
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

std::vector<Equation> parse_suite_fixture(std::string_view text) {
  FixtureReader r{text};
  r.expect('(');
  if (r.atom() != "suite") throw std::invalid_argument("fixture: expected (suite ...)");
  r.quoted();  // suite name
  r.expect('(');
  if (r.atom() != "sig") throw std::invalid_argument("fixture: expected (sig ...)");
  std::string sig = r.atom();
  r.expect(')');
  std::vector<Equation> eqs;
  while (r.peek_is('(')) {
    r.expect('(');
    if (r.atom() != "law") throw std::invalid_argument("fixture: expected (law ...)");
    Equation eq;
    eq.name = r.quoted();
    eq.lhs = term_from_sexpr(r.balanced());
    eq.rhs = term_from_sexpr(r.balanced());
    eq.note = r.quoted();
    eq.signature = sig;
    r.expect(')');
    eqs.push_back(std::move(eq));
  }
  r.expect(')');
  return eqs;
}

}  // namespace bondsem
