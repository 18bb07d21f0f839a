#include "ainfp/fixtures.hpp"

#include <algorithm>

namespace ainfp {

namespace {

// exterior-algebra product of subsets of generators: (coeff sign, union) or
// zero when the subsets intersect
int exterior_sign(const std::vector<int>& a, const std::vector<int>& b) {
  for (int g : a)
    if (std::find(b.begin(), b.end(), g) != b.end()) return 0;
  // count inversions in the concatenation a ++ b
  int inv = 0;
  for (int g : a)
    for (int h : b)
      if (g > h) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

FilteredDgAlgebra heisenberg_algebra(const Field& F) {
  FilteredDgAlgebra A;
  A.field = F;
  // basis = subsets of {x=0, y=1, z=2}, ordered by (size, lex)
  std::vector<std::vector<int>> subsets = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  const char* names[] = {"1", "x", "y", "z", "xy", "xz", "yz", "xyz"};
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < subsets.size(); ++i) {
    idx[subsets[i]] = (int)i;
    A.basis.push_back({names[i], (int)subsets[i].size(), 0.0});
  }
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = 0; b < subsets.size(); ++b) {
      int s = exterior_sign(subsets[a], subsets[b]);
      if (s == 0) continue;
      std::vector<int> u;
      std::merge(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                 std::back_inserter(u));
      A.prod[{(int)a, (int)b}] = {{idx[u], s > 0 ? F.one() : F.neg(F.one())}};
    }
  // derivation with dz = xy extended by the Leibniz rule; on a monomial
  // containing z, replace z by xy with the sign of moving d past the
  // preceding generators
  A.d.assign(8, {});
  for (size_t a = 0; a < subsets.size(); ++a) {
    const auto& s = subsets[a];
    auto zit = std::find(s.begin(), s.end(), 2);
    if (zit == s.end()) continue;
    int pos = (int)(zit - s.begin());
    std::vector<int> rest(s.begin(), s.end());
    rest.erase(rest.begin() + pos);
    // wedge xy into the monomial with z removed
    std::vector<int> xy = {0, 1};
    int sgn = exterior_sign(rest, xy);
    if (sgn == 0) continue;  // x or y already present: term dies
    if (pos % 2) sgn = -sgn;  // Koszul sign for passing d over the prefix
    std::vector<int> u;
    std::merge(rest.begin(), rest.end(), xy.begin(), xy.end(), std::back_inserter(u));
    A.d[a] = {{idx[u], sgn > 0 ? F.one() : F.neg(F.one())}};
  }
  return A;
}

FilteredDgAlgebra formal_heisenberg(const Field& F) {
  FilteredDgAlgebra A;
  A.field = F;
  A.basis = {{"1", 0, 0.0}, {"x", 1, 0.0}, {"y", 1, 0.0},
             {"a", 2, 0.0}, {"b", 2, 0.0}, {"t", 3, 0.0}};
  A.d.assign(6, {});
  auto one = F.one(), neg = F.neg(F.one());
  for (int u = 0; u < 6; ++u) {
    A.prod[{0, u}] = unit_vec(F, u);
    if (u) A.prod[{u, 0}] = unit_vec(F, u);
  }
  // x*b = t = b*x, y*a = -t = a*y; everything else in positive degrees is 0
  A.prod[{1, 4}] = {{5, one}};
  A.prod[{4, 1}] = {{5, one}};
  A.prod[{2, 3}] = {{5, neg}};
  A.prod[{3, 2}] = {{5, neg}};
  return A;
}

std::vector<std::vector<double>> square_points() {
  return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

FilteredSimplicialComplex torus7() {
  FilteredSimplicialComplex X;
  for (int i = 0; i < 7; ++i) {
    X.insert({i, (i + 1) % 7, (i + 3) % 7}, 0.0);
    X.insert({i, (i + 2) % 7, (i + 3) % 7}, 0.0);
  }
  return X;
}

FilteredSimplicialComplex wedge_fixture() {
  FilteredSimplicialComplex X;
  // hollow triangle circles through the base point 0
  for (auto& e : {std::vector<int>{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}})
    X.insert(e, 0.0);
  // boundary of a tetrahedron on {0,5,6,7}
  int t[4] = {0, 5, 6, 7};
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> tri;
    for (int i = 0; i < 4; ++i)
      if (i != skip) tri.push_back(t[i]);
    X.insert(tri, 0.0);
  }
  return X;
}

FilteredSimplicialComplex hexagon() {
  FilteredSimplicialComplex X;
  for (int i = 0; i < 6; ++i) X.insert({i}, 0.0);
  for (int i = 0; i < 6; ++i) X.insert({i, (i + 1) % 6}, 1.0);
  return X;
}

FilteredSimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices, int max_dim) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  // small value pool so critical values collide (tie handling is exercised)
  const double pool[] = {0.0, 0.5, 1.0, 1.5, 2.0};
  auto bump = [&](double base) {
    double v = pool[(int)(u(rng) * 5)];
    return std::max(base, v);
  };
  int n = nv(rng);
  FilteredSimplicialComplex X;
  for (int i = 0; i < n; ++i) X.insert({i}, bump(0.0));
  std::vector<std::vector<int>> prev;  // simplices of the previous dimension
  for (int i = 0; i < n; ++i) prev.push_back({i});
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<std::vector<int>> cur;
    for (auto& s : prev)
      for (int v = s.back() + 1; v < n; ++v) {
        std::vector<int> t = s;
        t.push_back(v);
        // all facets must already be present
        bool ok = true;
        double base = 0.0;
        for (size_t i = 0; i < t.size() && ok; ++i) {
          std::vector<int> f = t;
          f.erase(f.begin() + i);
          auto it = X.simplices.find(f);
          if (it == X.simplices.end()) ok = false;
          else base = std::max(base, it->second);
        }
        if (!ok || u(rng) > 0.55) continue;
        X.insert(t, bump(base));
        cur.push_back(t);
      }
    prev = std::move(cur);
  }
  return X;
}

}  // namespace ainfp
