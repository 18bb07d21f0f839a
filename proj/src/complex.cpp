#include "ainfp/complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ainfp {

void FilteredSimplicialComplex::insert(std::vector<int> verts, double value) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto it = simplices.find(verts);
  if (it != simplices.end())
    value = std::min(value, it->second);
  simplices[verts] = value;
  if (verts.size() > 1) {
    for (size_t i = 0; i < verts.size(); ++i) {
      std::vector<int> face = verts;
      face.erase(face.begin() + i);
      auto fit = simplices.find(face);
      if (fit == simplices.end() || fit->second > value) insert(face, value);
    }
  }
}

bool FilteredSimplicialComplex::monotone() const {
  for (auto& [s, v] : simplices) {
    if (s.size() > 1) {
      for (size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + i);
        auto fit = simplices.find(face);
        if (fit == simplices.end() || fit->second > v) return false;
      }
    }
  }
  return true;
}

int FilteredSimplicialComplex::dim() const {
  int d = -1;
  for (auto& [s, v] : simplices) d = std::max<int>(d, (int)s.size() - 1);
  return d;
}

std::vector<double> FilteredSimplicialComplex::critical_values() const {
  std::set<double> vals;
  for (auto& [s, v] : simplices) vals.insert(v);
  return {vals.begin(), vals.end()};
}

FilteredSimplicialComplex rips(const std::vector<std::vector<double>>& dist,
                               int max_dim, double value_cap) {
  size_t n = dist.size();
  for (size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw std::invalid_argument("distance matrix not square");
    if (dist[i][i] != 0.0) throw std::invalid_argument("nonzero diagonal in distance matrix");
    for (size_t j = 0; j < n; ++j) {
      if (dist[i][j] < 0) throw std::invalid_argument("negative distance");
      if (dist[i][j] != dist[j][i]) throw std::invalid_argument("distance matrix not symmetric");
    }
  }
  FilteredSimplicialComplex X;
  // grow cliques vertex by vertex, tracking the max pairwise distance
  std::vector<std::pair<std::vector<int>, double>> frontier;
  for (size_t i = 0; i < n; ++i) {
    X.simplices[{(int)i}] = 0.0;
    frontier.push_back({{(int)i}, 0.0});
  }
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<std::pair<std::vector<int>, double>> next;
    for (auto& [clique, val] : frontier) {
      for (int v = clique.back() + 1; v < (int)n; ++v) {
        double nv = val;
        bool ok = true;
        for (int u : clique) {
          nv = std::max(nv, dist[u][v]);
          if (nv > value_cap) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<int> c2 = clique;
        c2.push_back(v);
        X.simplices[c2] = nv;
        next.push_back({std::move(c2), nv});
      }
    }
    frontier = std::move(next);
  }
  return X;
}

std::vector<std::vector<double>> distance_matrix(const std::vector<std::vector<double>>& points) {
  size_t n = points.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (points[i].size() != points[j].size())
        throw std::invalid_argument("inconsistent point dimensions");
      double s = 0;
      for (size_t k = 0; k < points[i].size(); ++k) {
        double t = points[i][k] - points[j][k];
        s += t * t;
      }
      d[i][j] = d[j][i] = std::sqrt(s);
    }
  return d;
}

FilteredSimplicialComplex rips_points(const std::vector<std::vector<double>>& points,
                                      int max_dim, double value_cap) {
  return rips(distance_matrix(points), max_dim, value_cap);
}

}  // namespace ainfp
