#pragma once

#include <vector>

#include "bondsem/rational.hpp"

namespace bondsem {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// Gauss-Jordan elimination to reduced row-echelon form: pivots are 1, pivot
// columns are cleared above and below and strictly increase row by row.
// Zero rows are removed. Returns the rank.
int rref_in_place(Mat& m);

// Basis of {v : constraints . v = 0} as rows of length ambient_dim.
// The rows of `constraints` must each have length ambient_dim.
Mat nullspace(Mat constraints, int ambient_dim);

Mat mat_mul(const Mat& a, const Mat& b);

}  // namespace bondsem
