#pragma once

#include <string_view>
#include <vector>

#include "bondsem/subspace.hpp"

namespace bondsem {

/// A linear relation Q^dom -> Q^cod: a subspace of Q^(dom+cod) whose first
/// dom coordinates belong to the domain. Values are immutable; composition,
/// tensor and dagger return fresh canonical relations.
class LinearRelation {
 public:
  LinearRelation() = default;
  LinearRelation(int dom_dim, int cod_dim, Subspace space);

  static LinearRelation identity(int dim);
  /// Span of the given rows inside Q^(dom+cod).
  static LinearRelation from_span(int dom_dim, int cod_dim, Mat rows);
  /// Solution set of constraint_rows . v = 0 inside Q^(dom+cod).
  static LinearRelation from_constraints(int dom_dim, int cod_dim, const Mat& constraint_rows);
  /// Graph of the coordinate permutation i -> perm[i] (a bijection on 0..n-1).
  static LinearRelation permutation(const std::vector<int>& perm);

  /// Scalar generators on Q: dup, del, codup, codel, add, zero, coadd, cozero.
  static LinearRelation scalar_generator(std::string_view name);
  /// Junction generators on interleaved (effort, flow) pairs: M, I, D, E,
  /// Mp, Ip, Dp, Ep, plus "braid" (the pair swap on two ports).
  static LinearRelation pair_generator(std::string_view name);

  int dom_dim() const { return dom_; }
  int cod_dim() const { return cod_; }
  const Subspace& space() const { return space_; }
  int dim() const { return space_.dim(); }

  LinearRelation dagger() const;

  /// True iff the subspace equals its own orthogonal complement for the
  /// symplectic form that is conjugated (negated) on the domain pairs.
  /// Requires dom_dim and cod_dim even; throws otherwise.
  bool is_lagrangian() const;

  bool operator==(const LinearRelation&) const = default;

 private:
  int dom_ = 0, cod_ = 0;
  Subspace space_;
};

/// r first, then s.
LinearRelation rel_compose(const LinearRelation& s, const LinearRelation& r);
LinearRelation rel_tensor(const LinearRelation& r, const LinearRelation& s);

/// Block-diagonal symplectic form on interleaved pairs; signs[j] = +1 for the
/// standard form on pair j and -1 for the conjugate.
Mat symplectic_form(int pair_count, const std::vector<int>& signs);

/// Evaluates the pairwise form on two vectors of length 2*signs.size().
Rat symplectic_eval(const Vec& u, const Vec& v, const std::vector<int>& signs);

}  // namespace bondsem
