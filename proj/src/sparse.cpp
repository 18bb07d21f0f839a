#include "ainfp/sparse.hpp"

#include <stdexcept>

namespace ainfp {

SparseVec axpy(const Field& F, const SparseVec& y, const Scalar& c, const SparseVec& x) {
  if (F.is_zero(c)) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      Scalar v = F.mul(c, x[j].second);
      if (!F.is_zero(v)) out.emplace_back(x[j].first, v);
      ++j;
    } else {
      Scalar v = F.add(y[i].second, F.mul(c, x[j].second));
      if (!F.is_zero(v)) out.emplace_back(y[i].first, v);
      ++i; ++j;
    }
  }
  return out;
}

SparseVec scaled(const Field& F, const Scalar& c, const SparseVec& x) {
  SparseVec out;
  if (F.is_zero(c)) return out;
  out.reserve(x.size());
  for (auto& [r, v] : x) {
    Scalar w = F.mul(c, v);
    if (!F.is_zero(w)) out.emplace_back(r, w);
  }
  return out;
}

Scalar coeff_at(const SparseVec& v, int row) {
  for (auto& [r, c] : v)
    if (r == row) return c;
  return {};
}

SparseVec unit_vec(const Field& F, int row) { return {{row, F.one()}}; }

void SparseMatrix::set(const Field& F, int r, int c, const Scalar& v) {
  auto& cc = col[c];
  auto it = cc.begin();
  while (it != cc.end() && it->first < r) ++it;
  if (it != cc.end() && it->first == r) {
    if (F.is_zero(v)) cc.erase(it); else it->second = v;
  } else if (!F.is_zero(v)) {
    cc.insert(it, {r, v});
  }
}

SparseMatrix matmul(const Field& F, const SparseMatrix& A, const SparseMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matmul shape mismatch");
  SparseMatrix C(A.rows, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    SparseVec acc;
    for (auto& [k, v] : B.col[j]) acc = axpy(F, acc, v, A.col[k]);
    C.col[j] = std::move(acc);
  }
  return C;
}

SparseVec apply(const Field& F, const SparseMatrix& A, const SparseVec& x) {
  SparseVec acc;
  for (auto& [k, v] : x) acc = axpy(F, acc, v, A.col[k]);
  return acc;
}

SparseMatrix transpose(const SparseMatrix& A) {
  SparseMatrix T(A.cols, A.rows);
  for (int j = 0; j < A.cols; ++j)
    for (auto& [i, v] : A.col[j]) T.col[i].emplace_back(j, v);
  return T;
}

SparseMatrix identity_matrix(const Field& F, int n) {
  SparseMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.col[i] = unit_vec(F, i);
  return I;
}

SparseMatrix hconcat(const SparseMatrix& A, const SparseMatrix& B) {
  if (A.rows != B.rows) throw std::invalid_argument("hconcat shape mismatch");
  SparseMatrix C(A.rows, A.cols + B.cols);
  for (int j = 0; j < A.cols; ++j) C.col[j] = A.col[j];
  for (int j = 0; j < B.cols; ++j) C.col[A.cols + j] = B.col[j];
  return C;
}

bool equal_matrix(const SparseMatrix& A, const SparseMatrix& B) {
  return A.rows == B.rows && A.cols == B.cols && A.col == B.col;
}

Reduction column_reduce(const Field& F, const SparseMatrix& M) {
  Reduction out;
  out.R = M;
  out.V = identity_matrix(F, M.cols);
  out.low.assign(M.cols, -1);
  out.owner.assign(M.rows, -1);
  for (int j = 0; j < M.cols; ++j) {
    auto& cj = out.R.col[j];
    while (!cj.empty()) {
      int piv = cj.back().first;
      int k = out.owner[piv];
      if (k < 0) break;
      Scalar c = F.neg(F.div(cj.back().second, out.R.col[k].back().second));
      out.R.col[j] = axpy(F, out.R.col[j], c, out.R.col[k]);
      out.V.col[j] = axpy(F, out.V.col[j], c, out.V.col[k]);
    }
    if (!cj.empty()) {
      out.low[j] = cj.back().first;
      out.owner[cj.back().first] = j;
    }
  }
  return out;
}

int rank(const Field& F, const SparseMatrix& M) {
  Reduction red = column_reduce(F, M);
  int r = 0;
  for (int j = 0; j < M.cols; ++j)
    if (red.low[j] >= 0) ++r;
  return r;
}

SparseVec LinSolver::reduce_only(const SparseVec& b) const {
  SparseVec r = b;
  while (!r.empty()) {
    int k = red.owner[r.back().first];
    if (k < 0) break;
    Scalar c = F.neg(F.div(r.back().second, red.R.col[k].back().second));
    r = axpy(F, r, c, red.R.col[k]);
  }
  return r;
}

std::optional<SparseVec> LinSolver::solve(const SparseVec& b) const {
  SparseVec r = b, x;
  while (!r.empty()) {
    int k = red.owner[r.back().first];
    if (k < 0) return std::nullopt;
    Scalar c = F.div(r.back().second, red.R.col[k].back().second);
    r = axpy(F, r, F.neg(c), red.R.col[k]);
    x = axpy(F, x, c, red.V.col[k]);
  }
  return x;
}

std::optional<SparseVec> solve(const Field& F, const SparseMatrix& M, const SparseVec& b) {
  return LinSolver(F, M).solve(b);
}

SparseVec IncrementalRank::residual(SparseVec v) const {
  while (!v.empty()) {
    auto it = piv.find(v.back().first);
    if (it == piv.end()) break;
    Scalar c = F.neg(F.div(v.back().second, it->second.back().second));
    v = axpy(F, v, c, it->second);
  }
  return v;
}

bool IncrementalRank::add(SparseVec v) {
  v = residual(std::move(v));
  if (v.empty()) return false;
  piv[v.back().first] = std::move(v);
  return true;
}

}  // namespace ainfp
