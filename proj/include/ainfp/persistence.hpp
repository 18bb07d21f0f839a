#pragma once

#include <cstdint>
#include <map>

#include "ainfp/barcode.hpp"
#include "ainfp/complex.hpp"
#include "ainfp/dg_algebra.hpp"

namespace ainfp {

// One bar of the persistent cohomology of the decreasing filtration, i.e. an
// interval summand (p2, p1] of H^deg(F^p C) as p sweeps the scale, with a
// representative cocycle z in F^{p1} and (for bounded bars) a coboundary
// witness w in F^{p2} with d w = z. Vectors are in underlying-basis coords.
struct RelBar {
  int degree;
  double p1;        // upper, inclusive (a critical value)
  double p2;        // lower, exclusive; -inf for unbounded-below bars
  SparseVec cocycle;
  SparseVec witness;
  Interval interval() const { return {p2, p1}; }
};

struct Persistence {
  Field field;
  FilteredDgAlgebra A;
  std::vector<double> scale;  // P_s (sorted distinct adams values)
  std::vector<RelBar> bars;   // expanded, one entry per multiplicity unit

  // barcode from the interval decomposition
  Barcode barcode(int degree) const;
  Barcode barcode_all() const;

  // immediate successor within P_s + {+inf}
  double successor(double p) const;
  // dimension counts straight from rank computations (independent of bars):
  // beta^n_{p,p'} = rank of H^n(F^p) -> H^n(F^{p'}), p >= p' in extended reals
  long beta(int n, double p, double pp) const;
  long dim_h(int n, double p) const { return beta(n, p, p); }

  // multiplicities from the rank formulas (mul1)/(mul2)
  std::map<std::pair<double, double>, long> mu_bounded(int n) const;
  std::map<double, long> mu_unbounded(int n) const;
  Barcode barcode_from_ranks(int n) const;
  // inversion formula: reconstruct beta from a barcode
  long beta_from_bars(int n, double p, double pp) const;

 private:
  // cached bases per (degree, scale position): cocycles of F^p in degree n,
  // coboundaries d(F^p) in degree n
  mutable std::map<std::pair<int, double>, std::vector<SparseVec>> kernel_cache_;
  mutable std::map<std::pair<int, double>, std::vector<SparseVec>> image_cache_;
  const std::vector<SparseVec>& kernel_basis(int n, double p) const;
  const std::vector<SparseVec>& image_basis(int n, double p) const;
};

// Column reduction of the coboundary in entry order (adams descending,
// degree descending, seed-shuffled ties); deterministic for a fixed seed.
Persistence compute_persistence(const FilteredDgAlgebra& A, uint64_t seed = 0);

// Persistent homology of the increasing filtration X_p = {appearance < p}
// (standard TDA barcode; bars (enter, death] and (enter, +inf]).
Barcode homology_barcode(const Field& F, const FilteredSimplicialComplex& X);

struct DualityReport {
  bool pass = true;
  std::vector<std::string> notes;   // one line per clause
  std::string counterexample;       // first failing bar, if any
};
// homology/cohomology barcode correspondence: no unbounded-below homology
// bars / no unbounded-above cohomology bars; bounded homology bars in degree
// n match bounded cohomology bars in degree n+1; unbounded-above homology
// bars (b,+inf] in degree n match unbounded-below cohomology bars (-inf,b]
// in the same degree (complement correspondence).
DualityReport check_duality(const Field& F, const FilteredSimplicialComplex& X);

// Homology H of the subquotient span{lo <= adams < hi} of a filtered dg
// algebra, with the projected differential. coords are underlying indices;
// all vectors below are in local coords (positions into coords).
struct Subquotient {
  std::vector<int> coords;
  std::vector<SparseVec> H;   // homology class representatives
  std::vector<int> hdeg;      // degree of each class
  std::vector<SparseVec> U, B;  // d-preimages and boundaries, aligned
  // class coordinates of a local cycle in the H basis
  SparseVec class_coords(const Field& F, const SparseVec& cycle) const;
};
Subquotient subquotient(const FilteredDgAlgebra& A, double lo, double hi);

// Exact couple triangle D^p -i-> D^{p'} -j-> E^{p'}_p -k-> D^p (degree +1)
// for p' <= p, with exactness verified at the three vertices.
struct ExactCoupleSlice {
  double pprime, p;
  Subquotient Dp, Dpp, E;  // H(F^p), H(F^{p'}), H(F^{p'}/F^p)
  SparseMatrix i, j, k;    // in the class bases above
  bool exact = false;
  std::string note;
};
ExactCoupleSlice exact_couple_slice(const FilteredDgAlgebra& A, double pprime, double p);

}  // namespace ainfp
