#pragma once

#include "bondsem/matrix.hpp"

namespace bondsem {

/// A subspace of Q^n, held as a reduced-row-echelon basis. RREF is a normal
/// form, so two Subspace values describe the same subspace exactly when they
/// compare equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(int ambient_dim, Mat rows);
  static Subspace from_constraints(int ambient_dim, const Mat& constraint_rows);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;

  /// Orthogonal complement with respect to the bilinear form x . form . y^T.
  Subspace orthogonal(const Mat& form) const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(int ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_ = 0;
  Mat basis_;  // RREF, no zero rows
};

}  // namespace bondsem
