#pragma once

#include <optional>
#include <vector>

#include "ainfp/field.hpp"

namespace ainfp {

// Sparse column vector: (row, coeff) pairs sorted by row, no zero coeffs.
using SparseVec = std::vector<std::pair<int, Scalar>>;

// y + c*x
SparseVec axpy(const Field& F, const SparseVec& y, const Scalar& c, const SparseVec& x);
SparseVec scaled(const Field& F, const Scalar& c, const SparseVec& x);
Scalar coeff_at(const SparseVec& v, int row);
SparseVec unit_vec(const Field& F, int row);

struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<SparseVec> col;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
  void set(const Field& F, int r, int c, const Scalar& v);
};

SparseMatrix matmul(const Field& F, const SparseMatrix& A, const SparseMatrix& B);
SparseVec apply(const Field& F, const SparseMatrix& A, const SparseVec& x);
SparseMatrix transpose(const SparseMatrix& A);
SparseMatrix identity_matrix(const Field& F, int n);
SparseMatrix hconcat(const SparseMatrix& A, const SparseMatrix& B);
bool equal_matrix(const SparseMatrix& A, const SparseMatrix& B);

// Standard left-to-right column reduction: R = M * V with V invertible
// upper-triangular (unit diagonal) and distinct nonzero columns of R having
// distinct pivots (lowest... largest row index of the last nonzero entry).
struct Reduction {
  SparseMatrix R, V;
  std::vector<int> low;    // per column: pivot row of R, or -1 if zero
  std::vector<int> owner;  // per row: column owning that pivot, or -1
};

Reduction column_reduce(const Field& F, const SparseMatrix& M);

int rank(const Field& F, const SparseMatrix& M);

// Solve M x = b exactly; nullopt iff b is outside the column span.
std::optional<SparseVec> solve(const Field& F, const SparseMatrix& M, const SparseVec& b);

// Cached reduction for solving many right-hand sides against a fixed M.
struct LinSolver {
  Field F;
  Reduction red;
  explicit LinSolver(const Field& f, const SparseMatrix& M) : F(f), red(column_reduce(f, M)) {}
  std::optional<SparseVec> solve(const SparseVec& b) const;
  // residual of b after eliminating by R's pivots (zero iff b in column span)
  SparseVec reduce_only(const SparseVec& b) const;
};

// Growing column space with rank queries: add() reduces the vector against
// the current pivots and keeps it iff it increases the rank.
struct IncrementalRank {
  Field F;
  std::map<int, SparseVec> piv;  // pivot row -> reduced column
  explicit IncrementalRank(const Field& f) : F(f) {}
  // returns true (and stores) iff v was independent of the current span
  bool add(SparseVec v);
  // residual after reduction, without storing
  SparseVec residual(SparseVec v) const;
  bool contains(const SparseVec& v) const { return residual(v).empty(); }
  int rank() const { return (int)piv.size(); }
};

}  // namespace ainfp
