#pragma once

#include <random>
#include <vector>

#include "ainfp/field.hpp"
#include "ainfp/sparse.hpp"

namespace testutil {

using namespace ainfp;

inline SparseMatrix random_matrix(const Field& F, int rows, int cols,
                                  std::mt19937_64& rng, double density = 0.4) {
  SparseMatrix M(rows, cols);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<long> coef(1, F.rational() ? 9 : std::max(2L, F.p) - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if (u(rng) < density) {
        long c = coef(rng);
        if (F.rational() && sign(rng)) c = -c;
        M.set(F, i, j, F.from_long(c));
      }
  return M;
}

// dense Gaussian elimination rank, independent of the sparse reduction path
inline int dense_rank(const Field& F, const SparseMatrix& M) {
  std::vector<std::vector<Scalar>> A(M.rows, std::vector<Scalar>(M.cols, F.zero()));
  for (int j = 0; j < M.cols; ++j)
    for (auto& [i, v] : M.col[j]) A[i][j] = v;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (!F.is_zero(A[i][c])) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(A[r], A[piv]);
    Scalar inv = F.inv(A[r][c]);
    for (int j = c; j < M.cols; ++j) A[r][j] = F.mul(inv, A[r][j]);
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || F.is_zero(A[i][c])) continue;
      Scalar f = A[i][c];
      for (int j = c; j < M.cols; ++j)
        A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace testutil
