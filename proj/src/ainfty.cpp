#include "ainfp/ainfty.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ainfp {

namespace {

Scalar sgn(const Field& F, int e) {
  return ((e % 2) + 2) % 2 ? F.neg(F.one()) : F.one();
}

std::string tuple_str(const std::vector<BasisElt>& basis, const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += basis[t[i]].name;
  }
  return s + ")";
}

// ordered compositions of n into parts >= 1
std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) { out.push_back(cur); return; }
    for (int part = 1; part <= rem; ++part) {
      cur.push_back(part);
      rec(rem - part);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

// enumerate all index tuples of length n over dim values
void for_each_tuple(int dim, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(n, 0);
  if (dim == 0) return;
  while (true) {
    fn(t);
    int pos = n - 1;
    while (pos >= 0 && ++t[pos] == dim) t[pos--] = 0;
    if (pos < 0) break;
  }
}

// sum over r+s+t=n of (-1)^{r+st+s(|a_1|+..+|a_r|)} outer_{r+1+t}(1^r x inner_s x 1^t),
// with inner arity capped at innerCap (for the recursive gauge solve)
SparseVec inner_outer_sum(const Field& F, const std::vector<BasisElt>& basis,
                          const std::vector<Tensor>& inner, int innerN, int innerCap,
                          const std::vector<Tensor>& outer, int outerN,
                          const std::vector<int>& tuple) {
  int n = (int)tuple.size();
  SparseVec acc;
  for (int r = 0; r < n; ++r)
    for (int s = 1; r + s <= n; ++s) {
      int t = n - r - s;
      if (s > innerN || s > innerCap || r + 1 + t > outerN) continue;
      std::vector<int> sub(tuple.begin() + r, tuple.begin() + r + s);
      auto it = inner[s].find(sub);
      if (it == inner[s].end() || it->second.empty()) continue;
      std::vector<SparseVec> args(r + 1 + t);
      for (int k = 0; k < r; ++k) args[k] = unit_vec(F, tuple[k]);
      args[r] = it->second;
      for (int k = 0; k < t; ++k) args[r + 1 + k] = unit_vec(F, tuple[r + s + k]);
      SparseVec term = apply_tensor(F, outer[r + 1 + t], args);
      if (term.empty()) continue;
      int pre = 0;
      for (int k = 0; k < r; ++k) pre += basis[tuple[k]].degree;
      acc = axpy(F, acc, sgn(F, r + s * t + s * pre), term);
    }
  return acc;
}

// sum over i_1+..+i_q=n of (-1)^{w+koszul} m'_q (f_{i_1} x .. x f_{i_q})
SparseVec morphism_rhs(const Field& F, const std::vector<BasisElt>& basis,
                       const ANStructure& dst, const std::vector<Tensor>& f, int fN,
                       const std::vector<int>& tuple) {
  int n = (int)tuple.size();
  SparseVec acc;
  for (auto& comp : compositions(n)) {
    int q = (int)comp.size();
    if (q > dst.N) continue;
    bool absent = false;
    for (int ij : comp)
      if (ij > fN) { absent = true; break; }
    if (absent) continue;
    std::vector<SparseVec> blocks(q);
    int at = 0, exp = 0, predeg = 0;
    bool zero = false;
    for (int j = 0; j < q && !zero; ++j) {
      std::vector<int> sub(tuple.begin() + at, tuple.begin() + at + comp[j]);
      auto it = f[comp[j]].find(sub);
      if (it == f[comp[j]].end() || it->second.empty()) zero = true;
      else blocks[j] = it->second;
      exp += (q - 1 - j) * (comp[j] - 1);       // w with j counted from 0
      if (j > 0) exp += (comp[j] - 1) * predeg; // Koszul: |f_i| = 1-i = i-1 mod 2
      for (int k = 0; k < comp[j]; ++k) predeg += basis[tuple[at + k]].degree;
      at += comp[j];
    }
    if (zero) continue;
    SparseVec term = dst.apply(q, blocks);
    if (!term.empty()) acc = axpy(F, acc, sgn(F, exp), term);
  }
  return acc;
}

}  // namespace

SparseVec apply_tensor(const Field& F, const Tensor& T, const std::vector<SparseVec>& args) {
  SparseVec acc;
  std::vector<int> tuple(args.size());
  std::function<void(size_t, const Scalar&)> rec = [&](size_t pos, const Scalar& c) {
    if (pos == args.size()) {
      auto it = T.find(tuple);
      if (it != T.end()) acc = axpy(F, acc, c, it->second);
      return;
    }
    for (auto& [i, v] : args[pos]) {
      tuple[pos] = i;
      rec(pos + 1, F.mul(c, v));
    }
  };
  rec(0, F.one());
  return acc;
}

std::optional<std::string> check_stasheff(const ANStructure& A, int n) {
  std::optional<std::string> fail;
  for_each_tuple(A.dim(), n, [&](const std::vector<int>& tuple) {
    if (fail) return;
    SparseVec acc =
        inner_outer_sum(A.field, A.basis, A.ops, A.N, n, A.ops, A.N, tuple);
    if (!acc.empty())
      fail = "associativity identity " + std::to_string(n) + " fails at " +
             tuple_str(A.basis, tuple);
  });
  return fail;
}

SparseVec morphism_defect(const ANStructure& src, const ANStructure& dst,
                          const ANMorphism& f, const std::vector<int>& tuple) {
  int n = (int)tuple.size();
  SparseVec lhs =
      inner_outer_sum(src.field, src.basis, src.ops, src.N, n, f.f, f.N, tuple);
  SparseVec rhs = morphism_rhs(src.field, src.basis, dst, f.f, f.N, tuple);
  return axpy(src.field, lhs, src.field.neg(src.field.one()), rhs);
}

std::optional<std::string> check_morphism(const ANStructure& src, const ANStructure& dst,
                                          const ANMorphism& f, int n) {
  std::optional<std::string> fail;
  for_each_tuple(src.dim(), n, [&](const std::vector<int>& tuple) {
    if (fail) return;
    if (!morphism_defect(src, dst, f, tuple).empty())
      fail = "morphism identity " + std::to_string(n) + " fails at " +
             tuple_str(src.basis, tuple);
  });
  return fail;
}

SparseVec Contraction::project(const SparseVec& x) const {
  std::map<int, SparseVec> by_slice;
  for (auto& [r, c] : x) by_slice[slice_of[r]].emplace_back(r, c);
  SparseVec out;
  for (auto& [s, v] : by_slice) {
    auto& S = slices.at(s);
    auto sol = S.solver->solve(v);
    if (!sol) throw std::logic_error("contraction: vector outside slice span");
    int base = (int)(S.bnd.size() + S.pre.size());
    for (auto& [idx, c] : *sol)
      if (idx >= base) out.emplace_back(S.cls[idx - base].second, c);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseVec Contraction::homotopy(const SparseVec& x) const {
  std::map<int, SparseVec> by_slice;
  for (auto& [r, c] : x) by_slice[slice_of[r]].emplace_back(r, c);
  SparseVec out;
  for (auto& [s, v] : by_slice) {
    auto& S = slices.at(s);
    auto sol = S.solver->solve(v);
    if (!sol) throw std::logic_error("contraction: vector outside slice span");
    for (auto& [idx, c] : *sol)
      if (idx < (int)S.bnd.size()) out = axpy(field, out, c, S.pre[idx]);
  }
  return out;
}

Interval TransferResult::class_interval(int k) const {
  auto [b, s] = classes[k];
  return {pers.bars[b].p2, rs.slices[s]};
}

TransferResult transfer(const FilteredDgAlgebra& A, int N, uint64_t seed) {
  if (N < 1) throw std::invalid_argument("transfer: N must be >= 1");
  TransferResult T;
  T.pers = compute_persistence(A, seed);
  T.rs = rees(A);
  const Field& F = A.field;
  const ReesAlgebra& R = T.rs;
  int rdim = R.alg.dim();

  Contraction& C = T.contraction;
  C.field = F;
  C.slice_of.resize(rdim);
  for (int r = 0; r < rdim; ++r) C.slice_of[r] = R.origin[r].first;

  // class basis: slices in ascending order, bars in reduction order
  auto shift = [&](int s, const SparseVec& v) {
    SparseVec out;
    for (auto& [j, c] : v) out.emplace_back(R.index.at({s, j}), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  for (size_t s = 0; s < R.slices.size(); ++s) {
    double p = R.slices[s];
    Contraction::Slice S;
    std::vector<int> cols;
    for (int r = 0; r < rdim; ++r)
      if (C.slice_of[r] == (int)s) cols.push_back(r);
    SparseMatrix D(rdim, (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j) D.col[j] = R.alg.d[cols[j]];
    auto red = column_reduce(F, D);
    for (size_t j = 0; j < cols.size(); ++j)
      if (red.low[j] >= 0) {
        S.bnd.push_back(red.R.col[j]);
        SparseVec u;
        for (auto& [lj, c] : red.V.col[j]) u.emplace_back(cols[lj], c);
        std::sort(u.begin(), u.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        S.pre.push_back(u);
      }
    for (size_t b = 0; b < T.pers.bars.size(); ++b) {
      auto& bar = T.pers.bars[b];
      if (!(bar.p2 < p && p <= bar.p1)) continue;
      int k = (int)T.classes.size();
      T.classes.push_back({(int)b, (int)s});
      SparseVec chain = shift((int)s, bar.cocycle);
      S.cls.push_back({chain, k});
      C.iota.push_back(chain);
      std::ostringstream os;
      os << "h" << bar.degree << "(";
      if (bar.p2 == kMinusInf) os << "-inf"; else os << bar.p2;
      os << "," << bar.p1 << "]@" << p;
      T.minimal.basis.push_back({os.str(), bar.degree, p});
    }
    SparseMatrix M(rdim, (int)(S.bnd.size() + S.pre.size() + S.cls.size()));
    int at = 0;
    for (auto& v : S.bnd) M.col[at++] = v;
    for (auto& v : S.pre) M.col[at++] = v;
    for (auto& [v, k] : S.cls) M.col[at++] = v;
    S.solver = std::make_shared<LinSolver>(F, M);
    C.slices[(int)s] = std::move(S);
  }

  // ambient Rees dg algebra as an A_N structure
  T.ambient.field = F;
  T.ambient.basis = R.alg.basis;
  T.ambient.N = N;
  T.ambient.ops.assign(N + 1, {});
  for (int j = 0; j < rdim; ++j)
    if (!R.alg.d[j].empty()) T.ambient.ops[1][{j}] = R.alg.d[j];
  if (N >= 2)
    for (auto& [jk, v] : R.alg.prod)
      T.ambient.ops[2][{jk.first, jk.second}] = v;

  T.minimal.field = F;
  T.minimal.N = N;
  T.minimal.ops.assign(N + 1, {});
  T.inclusion.N = N;
  T.inclusion.f.assign(N + 1, {});
  for (size_t k = 0; k < T.classes.size(); ++k)
    T.inclusion.f[1][{(int)k}] = C.iota[k];

  // homotopy transfer: lambda_n = sum over s of (-1)^{s+1} m_2(q lambda_s x
  // q lambda_{n-s}) with q lambda_1 = -id and q = homotopy otherwise; the
  // transferred operation is project(lambda_n) and the morphism component is
  // homotopy(lambda_n) on included class representatives
  struct Elt {
    SparseVec v;
    int deg;
  };
  std::function<Elt(const std::vector<Elt>&)> lam, qlam;
  lam = [&](const std::vector<Elt>& args) -> Elt {
    int n = (int)args.size();
    int degsum = 0;
    for (auto& a : args) degsum += a.deg;
    SparseVec acc;
    for (int s = 1; s < n; ++s) {
      Elt L = qlam({args.begin(), args.begin() + s});
      Elt Rt = qlam({args.begin() + s, args.end()});
      if (L.v.empty() || Rt.v.empty()) continue;
      int pre = 0;
      for (int k = 0; k < s; ++k) pre += args[k].deg;
      int exp = (s + 1) + (n - s + 1) * pre;  // |q lambda_m| = 1 - m
      acc = axpy(F, acc, sgn(F, exp), R.alg.mul_vec(L.v, Rt.v));
    }
    return {acc, degsum + 2 - n};
  };
  qlam = [&](const std::vector<Elt>& args) -> Elt {
    if (args.size() == 1)
      return {scaled(F, F.neg(F.one()), args[0].v), args[0].deg};
    Elt l = lam(args);
    return {C.homotopy(l.v), l.deg - 1};
  };

  int H = (int)T.classes.size();
  for (int n = 2; n <= N; ++n)
    for_each_tuple(H, n, [&](const std::vector<int>& tuple) {
      std::vector<Elt> args;
      for (int k : tuple) args.push_back({C.iota[k], T.minimal.basis[k].degree});
      Elt l = lam(args);
      if (l.v.empty()) return;
      SparseVec mval = C.project(l.v);
      if (!mval.empty()) T.minimal.ops[n][tuple] = mval;
      SparseVec fval = scaled(F, F.neg(F.one()), C.homotopy(l.v));
      if (!fval.empty()) T.inclusion.f[n][tuple] = fval;
    });
  return T;
}

ANStructure gauge_transform(const ANStructure& M, const ANMorphism& g) {
  const Field& F = M.field;
  int dim = M.dim();
  if (g.N < 1 || (int)g.f.size() <= 1)
    throw std::invalid_argument("gauge_transform: missing linear part");
  SparseMatrix G(dim, dim);
  for (int k = 0; k < dim; ++k) {
    auto it = g.f[1].find({k});
    if (it != g.f[1].end()) G.col[k] = it->second;
  }
  LinSolver inv(F, G);
  ANStructure out;
  out.field = F;
  out.basis = M.basis;
  out.N = M.N;
  out.ops.assign(M.N + 1, {});
  for (int n = 1; n <= M.N; ++n) {
    bool ok = true;
    for_each_tuple(dim, n, [&](const std::vector<int>& tuple) {
      if (!ok) return;
      SparseVec rhs = morphism_rhs(F, M.basis, M, g.f, g.N, tuple);
      SparseVec lhs_partial =
          inner_outer_sum(F, M.basis, out.ops, out.N, n - 1, g.f, g.N, tuple);
      SparseVec val = axpy(F, rhs, F.neg(F.one()), lhs_partial);
      if (val.empty()) return;
      auto sol = inv.solve(val);
      if (!sol) { ok = false; return; }
      out.ops[n][tuple] = *sol;
    });
    if (!ok) throw std::invalid_argument("gauge_transform: linear part not invertible");
  }
  return out;
}

}  // namespace ainfp
