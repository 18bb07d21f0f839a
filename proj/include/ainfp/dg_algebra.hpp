#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfp/complex.hpp"
#include "ainfp/field.hpp"
#include "ainfp/sparse.hpp"

namespace ainfp {

struct BasisElt {
  std::string name;
  int degree = 0;
  double adams = 0.0;  // appearance threshold: e lies in F^p iff adams >= p
};

// Finite dimensional filtered dg algebra given by structure constants.
struct FilteredDgAlgebra {
  Field field;
  std::vector<BasisElt> basis;
  std::vector<SparseVec> d;                      // d[j] = d(e_j)
  std::map<std::pair<int, int>, SparseVec> prod; // (j,k) -> e_j * e_k (absent = 0)

  int dim() const { return (int)basis.size(); }
  const SparseVec& product(int j, int k) const;
  SparseVec mul_vec(const SparseVec& x, const SparseVec& y) const;
  SparseVec d_vec(const SparseVec& x) const;
  SparseMatrix d_matrix() const;
  std::vector<double> critical_scale() const;  // sorted distinct adams values
  std::string vec_str(const SparseVec& v) const;
};

// first violated identity (d^2, Leibniz, associativity, grading,
// multiplicativity), with a human-readable witness; nullopt when valid
struct ValidationIssue {
  std::string identity;
  std::string witness;
};
std::optional<ValidationIssue> validate(const FilteredDgAlgebra& A);

// Normalized simplicial cochains with the Alexander-Whitney cup product;
// Adams value of a simplex dual = its appearance.
FilteredDgAlgebra cochain_algebra(const Field& F, const FilteredSimplicialComplex& X);

// Rees dg algebra: one slice per critical value c in P_s, basis (c, e) for
// adams(e) >= c; differential acts slicewise, product lands in the min slice.
struct ReesAlgebra {
  FilteredDgAlgebra alg;                      // adams of (c,e) is the slice value c
  std::vector<double> slices;                 // P_s
  std::vector<std::pair<int, int>> origin;    // rees index -> (slice idx, underlying idx)
  std::map<std::pair<int, int>, int> index;   // (slice idx, underlying idx) -> rees index
  int slice_of_value(double p) const;         // index into slices, or -1
};
ReesAlgebra rees(const FilteredDgAlgebra& A);  // throws on invalid A, with witness

// JSON interface: {"field": "F2"|"F5"|"Q"|..., "p": int?, "basis":
// [{"name","degree","adams"}], "d": [[coeffs]], "product":
// [{"left","right","result":[coeffs]}]}. Coefficients are integers or "a/b"
// strings. Throws std::runtime_error naming the failing identity/field.
FilteredDgAlgebra load_dg_algebra(const std::string& json_text);
std::string dump_dg_algebra(const FilteredDgAlgebra& A);

}  // namespace ainfp
