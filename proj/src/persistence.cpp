#include "ainfp/persistence.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ainfp {

namespace {

SparseVec remap(const SparseVec& v, const std::vector<int>& to) {
  SparseVec out;
  out.reserve(v.size());
  for (auto& [i, c] : v) out.emplace_back(to[i], c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// local coords (positions into coords) -> underlying indices
SparseVec to_underlying(const std::vector<int>& coords, const SparseVec& v) {
  SparseVec out;
  out.reserve(v.size());
  for (auto& [i, c] : v) out.emplace_back(coords[i], c);
  return out;
}

// underlying -> local; entries outside coords are dropped when allow_drop,
// otherwise they throw
SparseVec to_local(const std::vector<int>& coords, const SparseVec& v, bool allow_drop) {
  SparseVec out;
  for (auto& [i, c] : v) {
    auto it = std::lower_bound(coords.begin(), coords.end(), i);
    if (it == coords.end() || *it != i) {
      if (allow_drop) continue;
      throw std::logic_error("vector leaves the subquotient span");
    }
    out.emplace_back((int)(it - coords.begin()), c);
  }
  return out;
}

}  // namespace

Persistence compute_persistence(const FilteredDgAlgebra& A, uint64_t seed) {
  Persistence P;
  P.field = A.field;
  P.A = A;
  P.scale = A.critical_scale();
  int n = A.dim();

  // entry order: adams descending, degree descending, index ascending;
  // a nonzero seed shuffles within (adams, degree) tie groups
  std::vector<int> ord(n);
  for (int i = 0; i < n; ++i) ord[i] = i;
  std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
    if (A.basis[a].adams != A.basis[b].adams) return A.basis[a].adams > A.basis[b].adams;
    if (A.basis[a].degree != A.basis[b].degree) return A.basis[a].degree > A.basis[b].degree;
    return a < b;
  });
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    size_t lo = 0;
    while (lo < ord.size()) {
      size_t hi = lo + 1;
      while (hi < ord.size() && A.basis[ord[hi]].adams == A.basis[ord[lo]].adams &&
             A.basis[ord[hi]].degree == A.basis[ord[lo]].degree)
        ++hi;
      std::shuffle(ord.begin() + lo, ord.begin() + hi, rng);
      lo = hi;
    }
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[ord[i]] = i;

  SparseMatrix D(n, n);
  for (int j = 0; j < n; ++j) D.col[j] = remap(A.d[ord[j]], pos);
  Reduction red = column_reduce(A.field, D);

  for (int j = 0; j < n; ++j) {
    if (red.low[j] >= 0) {
      int i = red.low[j];
      double p1 = A.basis[ord[i]].adams, p2 = A.basis[ord[j]].adams;
      if (p1 == p2) continue;  // class appears and dies at the same value
      RelBar bar;
      bar.degree = A.basis[ord[i]].degree;
      bar.p1 = p1;
      bar.p2 = p2;
      bar.cocycle = remap(red.R.col[j], ord);
      bar.witness = remap(red.V.col[j], ord);
      P.bars.push_back(std::move(bar));
    } else if (red.owner[j] < 0) {
      RelBar bar;
      bar.degree = A.basis[ord[j]].degree;
      bar.p1 = A.basis[ord[j]].adams;
      bar.p2 = kMinusInf;
      bar.cocycle = remap(red.V.col[j], ord);
      P.bars.push_back(std::move(bar));
    }
  }
  std::stable_sort(P.bars.begin(), P.bars.end(), [](const RelBar& a, const RelBar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.p1 != b.p1) return a.p1 < b.p1;
    return a.p2 < b.p2;
  });
  return P;
}

Barcode Persistence::barcode(int degree) const {
  Barcode B;
  for (auto& b : bars)
    if (b.degree == degree) B.add(degree, b.interval());
  return B;
}

Barcode Persistence::barcode_all() const {
  Barcode B;
  for (auto& b : bars) B.add(b.degree, b.interval());
  return B;
}

double Persistence::successor(double p) const {
  auto it = std::upper_bound(scale.begin(), scale.end(), p);
  return it == scale.end() ? kPlusInf : *it;
}

const std::vector<SparseVec>& Persistence::kernel_basis(int n, double p) const {
  auto key = std::make_pair(n, p);
  auto it = kernel_cache_.find(key);
  if (it != kernel_cache_.end()) return it->second;
  std::vector<int> cols;
  for (int j = 0; j < A.dim(); ++j)
    if (A.basis[j].degree == n && A.basis[j].adams >= p) cols.push_back(j);
  SparseMatrix M(A.dim(), (int)cols.size());
  for (size_t j = 0; j < cols.size(); ++j) M.col[j] = A.d[cols[j]];
  Reduction red = column_reduce(field, M);
  std::vector<SparseVec> ker;
  for (size_t j = 0; j < cols.size(); ++j)
    if (red.low[j] < 0) {
      SparseVec v;
      for (auto& [k, c] : red.V.col[j]) v.emplace_back(cols[k], c);
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ker.push_back(std::move(v));
    }
  return kernel_cache_.emplace(key, std::move(ker)).first->second;
}

const std::vector<SparseVec>& Persistence::image_basis(int n, double p) const {
  auto key = std::make_pair(n, p);
  auto it = image_cache_.find(key);
  if (it != image_cache_.end()) return it->second;
  IncrementalRank ir(field);
  std::vector<SparseVec> im;
  for (int j = 0; j < A.dim(); ++j)
    if (A.basis[j].degree == n - 1 && A.basis[j].adams >= p && !A.d[j].empty())
      if (ir.add(A.d[j])) im.push_back(A.d[j]);
  return image_cache_.emplace(key, std::move(im)).first->second;
}

long Persistence::beta(int n, double p, double pp) const {
  if (p < pp) throw std::invalid_argument("beta needs p >= p'");
  if (p == kPlusInf) return 0;  // F^{+inf} = 0
  IncrementalRank ir(field);
  for (auto& v : image_basis(n, pp)) ir.add(v);
  long r = 0;
  for (auto& v : kernel_basis(n, p))
    if (ir.add(v)) ++r;
  return r;
}

std::map<std::pair<double, double>, long> Persistence::mu_bounded(int n) const {
  std::map<std::pair<double, double>, long> mu;
  for (double p1 : scale)
    for (double p2 : scale) {
      if (!(p2 < p1)) continue;
      double sp1 = successor(p1), sp2 = successor(p2);
      long m = beta(n, p1, sp2) - (sp1 == kPlusInf ? 0 : beta(n, sp1, sp2)) -
               beta(n, p1, p2) + (sp1 == kPlusInf ? 0 : beta(n, sp1, p2));
      if (m != 0) mu[{p1, p2}] = m;
    }
  return mu;
}

std::map<double, long> Persistence::mu_unbounded(int n) const {
  std::map<double, long> mu;
  for (double p1 : scale) {
    double sp1 = successor(p1);
    long m = beta(n, p1, kMinusInf) - (sp1 == kPlusInf ? 0 : beta(n, sp1, kMinusInf));
    if (m != 0) mu[p1] = m;
  }
  return mu;
}

Barcode Persistence::barcode_from_ranks(int n) const {
  Barcode B;
  for (auto& [k, m] : mu_bounded(n)) B.add(n, {k.second, k.first}, m);
  for (auto& [p1, m] : mu_unbounded(n)) B.add(n, {kMinusInf, p1}, m);
  return B;
}

long Persistence::beta_from_bars(int n, double p, double pp) const {
  long r = 0;
  for (auto& b : bars)
    if (b.degree == n && b.p1 >= p &&
        (b.p2 < pp || (pp == kMinusInf && b.p2 == kMinusInf)))
      ++r;
  return r;
}

Barcode homology_barcode(const Field& F, const FilteredSimplicialComplex& X) {
  // basis ordered by (appearance ascending, dimension ascending, lex)
  std::vector<std::pair<std::vector<int>, double>> simp(X.simplices.begin(), X.simplices.end());
  std::stable_sort(simp.begin(), simp.end(), [](auto& a, auto& b) {
    if (a.second != b.second) return a.second < b.second;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < simp.size(); ++i) pos[simp[i].first] = (int)i;
  int n = (int)simp.size();
  SparseMatrix D(n, n);
  for (int j = 0; j < n; ++j) {
    auto& verts = simp[j].first;
    if (verts.size() < 2) continue;
    SparseVec col;
    for (size_t i = 0; i < verts.size(); ++i) {
      std::vector<int> face = verts;
      face.erase(face.begin() + i);
      col.emplace_back(pos[face], (i % 2) ? F.neg(F.one()) : F.one());
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    D.col[j] = std::move(col);
  }
  Reduction red = column_reduce(F, D);
  Barcode B;
  for (int j = 0; j < n; ++j) {
    if (red.low[j] >= 0) {
      int i = red.low[j];
      double birth = simp[i].second, death = simp[j].second;
      if (birth == death) continue;
      B.add((int)simp[i].first.size() - 1, {birth, death});
    } else if (red.owner[j] < 0) {
      B.add((int)simp[j].first.size() - 1, {simp[j].second, kPlusInf});
    }
  }
  return B;
}

DualityReport check_duality(const Field& F, const FilteredSimplicialComplex& X) {
  DualityReport rep;
  Barcode hom = homology_barcode(F, X);
  Persistence per = compute_persistence(cochain_algebra(F, X));
  Barcode coh = per.barcode_all();

  auto fail = [&](const std::string& what) {
    rep.pass = false;
    if (rep.counterexample.empty()) rep.counterexample = what;
  };

  // clause 1: no unbounded-below homology bars, no unbounded-above
  // cohomology bars
  for (auto& [k, m] : hom.entries)
    if (k.second.lower == kMinusInf)
      fail("homology bar unbounded below in degree " + std::to_string(k.first));
  for (auto& [k, m] : coh.entries)
    if (k.second.upper == kPlusInf)
      fail("cohomology bar unbounded above in degree " + std::to_string(k.first));
  rep.notes.push_back(rep.pass ? "clause 1 (boundedness sides): pass"
                               : "clause 1 (boundedness sides): FAIL");

  // clause 2: bounded homology bars in degree n = bounded cohomology bars in
  // degree n+1
  bool c2 = true;
  {
    std::map<std::pair<int, Interval>, long> hb, cb;
    for (auto& [k, m] : hom.entries)
      if (k.second.upper != kPlusInf) hb[{k.first, k.second}] += m;
    for (auto& [k, m] : coh.entries)
      if (k.second.lower != kMinusInf) cb[{k.first - 1, k.second}] += m;
    if (hb != cb) {
      c2 = false;
      fail("bounded-bar multisets differ between homology n and cohomology n+1");
    }
  }
  rep.notes.push_back(c2 ? "clause 2 (bounded bars, degree shift): pass"
                         : "clause 2 (bounded bars, degree shift): FAIL");

  // clause 3: unbounded-above homology bars (b,+inf] in degree n correspond
  // to unbounded-below cohomology bars (-inf,b] in degree n
  bool c3 = true;
  {
    std::map<std::pair<int, double>, long> hu, cu;
    for (auto& [k, m] : hom.entries)
      if (k.second.upper == kPlusInf) hu[{k.first, k.second.lower}] += m;
    for (auto& [k, m] : coh.entries)
      if (k.second.lower == kMinusInf) cu[{k.first, k.second.upper}] += m;
    if (hu != cu) {
      c3 = false;
      fail("unbounded families do not match under the complement bijection");
    }
  }
  rep.notes.push_back(c3 ? "clause 3 (complement bijection): pass"
                         : "clause 3 (complement bijection): FAIL");
  return rep;
}

Subquotient subquotient(const FilteredDgAlgebra& A, double lo, double hi) {
  Subquotient S;
  for (int j = 0; j < A.dim(); ++j)
    if (A.basis[j].adams >= lo && A.basis[j].adams < hi) S.coords.push_back(j);
  int n = (int)S.coords.size();
  SparseMatrix D(n, n);
  for (int j = 0; j < n; ++j)
    D.col[j] = to_local(S.coords, A.d[S.coords[j]], /*allow_drop=*/true);
  Reduction red = column_reduce(A.field, D);
  IncrementalRank ir(A.field);
  for (int j = 0; j < n; ++j)
    if (red.low[j] >= 0) {
      S.B.push_back(red.R.col[j]);
      S.U.push_back(red.V.col[j]);
      ir.add(red.R.col[j]);
    }
  for (int j = 0; j < n; ++j)
    if (red.low[j] < 0 && ir.add(red.V.col[j])) {
      S.H.push_back(red.V.col[j]);
      int deg = red.V.col[j].empty() ? 0 : A.basis[S.coords[red.V.col[j].front().first]].degree;
      S.hdeg.push_back(deg);
    }
  return S;
}

SparseVec Subquotient::class_coords(const Field& F, const SparseVec& cycle) const {
  // solve [U | B | H] x = cycle and read off the H block
  int n = (int)coords.size();
  int nu = (int)U.size(), nb = (int)B.size(), nh = (int)H.size();
  SparseMatrix M(n, nu + nb + nh);
  for (int j = 0; j < nu; ++j) M.col[j] = U[j];
  for (int j = 0; j < nb; ++j) M.col[nu + j] = B[j];
  for (int j = 0; j < nh; ++j) M.col[nu + nb + j] = H[j];
  auto x = solve(F, M, cycle);
  if (!x) throw std::logic_error("class_coords: vector not in the span");
  SparseVec out;
  for (auto& [i, c] : *x)
    if (i >= nu + nb) out.emplace_back(i - nu - nb, c);
  return out;
}

ExactCoupleSlice exact_couple_slice(const FilteredDgAlgebra& A, double pprime, double p) {
  if (pprime > p) throw std::invalid_argument("exact_couple_slice needs p' <= p");
  const Field& F = A.field;
  ExactCoupleSlice S;
  S.pprime = pprime;
  S.p = p;
  S.Dp = subquotient(A, p, kPlusInf);
  S.Dpp = subquotient(A, pprime, kPlusInf);
  S.E = subquotient(A, pprime, p);

  int dp = (int)S.Dp.H.size(), dpp = (int)S.Dpp.H.size(), de = (int)S.E.H.size();
  S.i = SparseMatrix(dpp, dp);
  S.j = SparseMatrix(de, dpp);
  S.k = SparseMatrix(dp, de);
  for (int c = 0; c < dp; ++c) {
    SparseVec glob = to_underlying(S.Dp.coords, S.Dp.H[c]);
    S.i.col[c] = S.Dpp.class_coords(F, to_local(S.Dpp.coords, glob, false));
  }
  for (int c = 0; c < dpp; ++c) {
    SparseVec glob = to_underlying(S.Dpp.coords, S.Dpp.H[c]);
    S.j.col[c] = S.E.class_coords(F, to_local(S.E.coords, glob, /*allow_drop=*/true));
  }
  for (int c = 0; c < de; ++c) {
    // snake connecting map: lift the class, apply d, land in F^p
    SparseVec lift = to_underlying(S.E.coords, S.E.H[c]);
    SparseVec dl = A.d_vec(lift);
    for (auto& [idx, coefv] : dl)
      if (A.basis[idx].adams < p)
        throw std::logic_error("snake image not in F^p");
    S.k.col[c] = S.Dp.class_coords(F, to_local(S.Dp.coords, dl, false));
  }

  // exactness at the three vertices: composites vanish and ranks add up
  auto zero = [&](const SparseMatrix& M) {
    for (auto& c : M.col)
      if (!c.empty()) return false;
    return true;
  };
  int ri = rank(F, S.i), rj = rank(F, S.j), rk = rank(F, S.k);
  bool ok = zero(matmul(F, S.j, S.i)) && zero(matmul(F, S.k, S.j)) &&
            zero(matmul(F, S.i, S.k)) && ri == dpp - rj && rj == de - rk && rk == dp - ri;
  S.exact = ok;
  std::ostringstream os;
  os << "dims D^p=" << dp << " D^p'=" << dpp << " E=" << de << "; ranks i=" << ri
     << " j=" << rj << " k=" << rk << (ok ? "; exact" : "; NOT exact");
  S.note = os.str();
  return S;
}

}  // namespace ainfp
