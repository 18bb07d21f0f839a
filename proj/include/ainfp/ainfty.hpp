#pragma once

#include <memory>
#include <optional>

#include "ainfp/dg_algebra.hpp"
#include "ainfp/persistence.hpp"

namespace ainfp {

// k-ary operation on a graded basis: input tuple of basis indices -> output
// vector (absent tuple = 0). Outputs may live on a different basis than the
// inputs (morphism components).
using Tensor = std::map<std::vector<int>, SparseVec>;

// multilinear extension of T to vector arguments
SparseVec apply_tensor(const Field& F, const Tensor& T, const std::vector<SparseVec>& args);

// A_N algebra: operations m_1..m_N with |m_i| = 2 - i; m_1 = d. A minimal
// structure has ops[1] empty.
struct ANStructure {
  Field field;
  std::vector<BasisElt> basis;
  int N = 1;
  std::vector<Tensor> ops;  // ops[i] = m_i, 1 <= i <= N; ops[0] unused

  int dim() const { return (int)basis.size(); }
  SparseVec apply(int i, const std::vector<SparseVec>& args) const {
    return apply_tensor(field, ops[i], args);
  }
};

// n-th associativity identity: sum over r+s+t=n of
//   (-1)^{r+st} m_{r+1+t} (1^r x m_s x 1^t) = 0,
// evaluated on basis tuples with the sign (-1)^{s(|a_1|+..+|a_r|)} for moving
// m_s past the first r inputs. Returns a witness line on failure.
std::optional<std::string> check_stasheff(const ANStructure& A, int n);

// morphism f: src -> dst given by components f_i: src^{x i} -> dst, |f_i| = 1-i
struct ANMorphism {
  int N = 1;
  std::vector<Tensor> f;  // f[i], 1 <= i <= N; f[0] unused
};

// n-th morphism identity: sum over r+s+t=n of
//   (-1)^{r+st} f_{r+1+t} (1^r x m_s x 1^t)
//     = sum over i_1+..+i_q=n of (-1)^w m'_q (f_{i_1} x .. x f_{i_q}),
// with w = sum_j (q-j)(i_j-1) plus the usual evaluation signs.
std::optional<std::string> check_morphism(const ANStructure& src, const ANStructure& dst,
                                          const ANMorphism& f, int n);

// LHS minus RHS of the n-th morphism identity on one basis tuple (n =
// tuple size); zero for all tuples iff the identity holds
SparseVec morphism_defect(const ANStructure& src, const ANStructure& dst,
                          const ANMorphism& f, const std::vector<int>& tuple);

// Homotopy retraction of a filtered dg algebra onto chosen cohomology
// representatives: iota includes classes, project reads off class
// coordinates, homotopy has degree -1 with d h + h d = id - iota project.
// Built slicewise on a Rees algebra (the differential preserves slices).
struct Contraction {
  Field field;
  std::vector<SparseVec> iota;  // class index -> chain
  SparseVec project(const SparseVec& x) const;
  SparseVec homotopy(const SparseVec& x) const;

  // decomposition columns per slice: [boundaries | preimages | classes],
  // where d(pre[k]) = bnd[k]; cls[k] holds (chain, class index)
  struct Slice {
    std::vector<SparseVec> bnd, pre;
    std::vector<std::pair<SparseVec, int>> cls;  // (chain, class index)
    std::shared_ptr<LinSolver> solver;           // over [bnd | pre | cls]
  };
  std::map<int, Slice> slices;    // keyed by slice index of the Rees algebra
  std::vector<int> slice_of;      // rees index -> slice index
};

// Minimal A_N structure on the persistent cohomology of the Rees algebra of
// A, via homotopy transfer, together with the inclusion morphism into the
// Rees dg algebra (viewed as an A_N structure with m_1 = d, m_2 = product).
struct TransferResult {
  Persistence pers;
  ReesAlgebra rs;
  Contraction contraction;
  std::vector<std::pair<int, int>> classes;  // (bar index, slice index)
  ANStructure minimal;   // basis = classes
  ANStructure ambient;   // basis = rees basis
  ANMorphism inclusion;  // minimal -> ambient, f_1 = iota

  // truncated interval of class k: bar (p2,p1] cut down to (p2, slice value]
  Interval class_interval(int k) const;
};

TransferResult transfer(const FilteredDgAlgebra& A, int N, uint64_t seed = 0);

// Transport of structure along a gauge g with invertible linear part: the
// unique structure M' on the same basis making g an A_N morphism M' -> M.
ANStructure gauge_transform(const ANStructure& M, const ANMorphism& g);

}  // namespace ainfp
