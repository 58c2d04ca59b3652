#include "bondsem/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace bondsem {

int rref_in_place(Mat& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    if (m[rank][col] != 1) {
      Rat inv = m[rank][col];
      for (Rat& x : m[rank]) x /= inv;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  m.resize(rank);
  return rank;
}

Mat nullspace(Mat constraints, int ambient_dim) {
  for (const Vec& row : constraints)
    if (static_cast<int>(row.size()) != ambient_dim)
      throw std::invalid_argument("nullspace: constraint row length mismatch");
  const int rank = rref_in_place(constraints);

  std::vector<int> pivot_col(rank);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (constraints[r][c] == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }

  Mat basis;
  basis.reserve(ambient_dim - rank);
  for (int free_col = 0; free_col < ambient_dim; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(ambient_dim, Rat(0));
    v[free_col] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -constraints[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  assert(b.size() == a[0].size() || a[0].empty());
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(a[0].size());
  const int m = k == 0 ? 0 : static_cast<int>(b[0].size());
  Mat out(n, Vec(m, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (int c = 0; c < m; ++c) out[i][c] += a[i][j] * b[j][c];
    }
  return out;
}

}  // namespace bondsem
