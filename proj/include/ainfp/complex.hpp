#pragma once

#include <map>
#include <string>
#include <vector>

namespace ainfp {

// Finite simplicial complex with appearance values (decreasing-filtration
// source data). Simplices keyed by their sorted vertex tuple.
struct FilteredSimplicialComplex {
  std::map<std::vector<int>, double> simplices;

  // insert with downward closure: missing faces inherit the value, explicit
  // smaller face values win (appearance is monotone under face inclusion)
  void insert(std::vector<int> verts, double value);
  bool monotone() const;
  int dim() const;
  size_t size() const { return simplices.size(); }
  std::vector<double> critical_values() const;  // sorted distinct appearances
};

// Vietoris-Rips: appearance(s) = max pairwise distance (so s enters X_eps
// for eps > appearance, the left-open convention); cliques up to max_dim,
// appearance <= value_cap.
FilteredSimplicialComplex rips(const std::vector<std::vector<double>>& dist,
                               int max_dim, double value_cap);
FilteredSimplicialComplex rips_points(const std::vector<std::vector<double>>& points,
                                      int max_dim, double value_cap);
// full symmetric matrix from point coordinates (Euclidean)
std::vector<std::vector<double>> distance_matrix(const std::vector<std::vector<double>>& points);

}  // namespace ainfp
