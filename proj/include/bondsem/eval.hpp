#pragma once

#include <cstdint>

#include "bondsem/circuit.hpp"
#include "bondsem/corelation.hpp"
#include "bondsem/linrel.hpp"
#include "bondsem/term.hpp"

namespace bondsem {

/// Evaluates a term into corelations. One prop object maps to one wire for
/// "corel-wire" and to two wires (a port) for "corel-port" and "bond".
Corelation eval_corel(const Term& t, const Signature& sig);

/// Evaluates a term into linear relations.
/// "bond": one (effort, flow) pair per port. "corel-wire": one (potential,
/// current) pair per wire. "corel-port": two pairs per port (the black-box
/// image of the port generators).
LinearRelation eval_lagrel(const Term& t, const Signature& sig);

/// The behavior of an ideal-wire corelation: each terminal carries a
/// (potential, current) pair; per block all potentials agree and the input
/// currents sum to the output currents. Always Lagrangian.
LinearRelation black_box(const Corelation& c);

/// Effort/flow to potential/current translation on n ports: per port,
/// V = phi2 - phi1 and I = I1 = -I2. A relation k^2n -> k^4n with
/// alpha(n).dagger() a left inverse.
LinearRelation alpha(int n);

struct NaturalityReport {
  Term term;
  int dom = 0, cod = 0;       // port arities of the term
  LinearRelation lhs;         // alpha(cod) . F(term)
  LinearRelation rhs;         // black_box(G(term)) . alpha(dom)
  bool equal = false;
};

/// Checks the square alpha_n . F(t) = KiG(t) . alpha_m for a bond term.
NaturalityReport check_naturality(const Term& t);

/// Deterministic well-typed random term with exactly `size` leaves.
Term random_term(int size, std::uint64_t seed, const Signature& sig);

}  // namespace bondsem
