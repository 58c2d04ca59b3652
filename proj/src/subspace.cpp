#include "bondsem/subspace.hpp"

#include <stdexcept>

namespace bondsem {

Subspace Subspace::span(int ambient_dim, Mat rows) {
  if (ambient_dim < 0) throw std::invalid_argument("span: negative ambient dimension");
  for (Vec& row : rows) {
    if (static_cast<int>(row.size()) != ambient_dim)
      throw std::invalid_argument("span: row length does not match ambient dimension");
    // Exact equality relies on canonical scalars; caller-built mpq values
    // are not reduced automatically.
    for (Rat& x : row) {
      if (x.get_den() == 0) throw std::invalid_argument("span: zero denominator");
      x.canonicalize();
    }
  }
  rref_in_place(rows);
  return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::from_constraints(int ambient_dim, const Mat& constraint_rows) {
  return span(ambient_dim, nullspace(constraint_rows, ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("contains: vector length mismatch");
  Vec w = v;
  for (const Vec& row : basis_) {
    int p = 0;
    while (row[p] == 0) ++p;
    if (w[p] != 0) {
      Rat f = w[p];
      for (int c = p; c < ambient_; ++c) w[c] -= f * row[c];
    }
  }
  for (const Rat& x : w)
    if (x != 0) return false;
  return true;
}

Subspace Subspace::orthogonal(const Mat& form) const {
  // v is orthogonal to every basis vector b iff (basis . form) . v = 0.
  return from_constraints(ambient_, mat_mul(basis_, form));
}

}  // namespace bondsem
