#include "ainfp/barcode.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ainfp {

void Barcode::add(int degree, const Interval& iv, long mult) {
  if (mult == 0) return;
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  entries[{degree, iv}] += mult;
}

long Barcode::total(int degree) const {
  long t = 0;
  for (auto& [k, m] : entries)
    if (k.first == degree) t += m;
  return t;
}

std::vector<Interval> Barcode::expand(int degree) const {
  std::vector<Interval> out;
  for (auto& [k, m] : entries)
    if (k.first == degree)
      for (long i = 0; i < m; ++i) out.push_back(k.second);
  return out;
}

std::vector<int> Barcode::degrees() const {
  std::set<int> d;
  for (auto& [k, m] : entries) d.insert(k.first);
  return {d.begin(), d.end()};
}

std::string Barcode::str() const {
  std::ostringstream os;
  for (auto& [k, m] : entries)
    os << "deg " << k.first << ": (" << k.second.lower << ", " << k.second.upper
       << "] x" << m << "\n";
  return os.str();
}

PartialMatching PartialMatching::all_star(int nl, int nr) {
  PartialMatching m;
  m.nl = nl; m.nr = nr;
  m.right_of.assign(nl, -1);
  m.left_of.assign(nr, -1);
  return m;
}

void PartialMatching::match(int l, int r) {
  if (right_of[l] != -1 || left_of[r] != -1)
    throw std::invalid_argument("element matched twice");
  right_of[l] = r;
  left_of[r] = l;
}

bool PartialMatching::valid() const {
  if ((int)right_of.size() != nl || (int)left_of.size() != nr) return false;
  for (int l = 0; l < nl; ++l)
    if (right_of[l] != -1 && (right_of[l] < 0 || right_of[l] >= nr || left_of[right_of[l]] != l))
      return false;
  for (int r = 0; r < nr; ++r)
    if (left_of[r] != -1 && (left_of[r] < 0 || left_of[r] >= nl || right_of[left_of[r]] != r))
      return false;
  return true;
}

double matching_cost(const std::vector<Interval>& a, const std::vector<Interval>& b,
                     const PartialMatching& m) {
  double c = 0.0;
  for (int l = 0; l < m.nl; ++l) {
    std::optional<Interval> rhs;
    if (m.right_of[l] >= 0) rhs = b[m.right_of[l]];
    c = std::max(c, tilde_d(a[l], rhs));
  }
  for (int r = 0; r < m.nr; ++r)
    if (m.left_of[r] < 0) c = std::max(c, tilde_d(std::nullopt, b[r]));
  return c;
}

PartialMatching compose_matchings(const PartialMatching& p1, const PartialMatching& p2) {
  if (p1.nr != p2.nl) throw std::invalid_argument("middle multisets differ");
  PartialMatching out = PartialMatching::all_star(p1.nl, p2.nr);
  // pairs traveling through middle elements matched concretely on both sides
  for (int mid = 0; mid < p1.nr; ++mid) {
    int l = p1.left_of[mid], r = p2.right_of[mid];
    if (l >= 0 && r >= 0) out.match(l, r);
  }
  return out;  // everything else stays matched to *
}

namespace {

// Bipartite feasibility at threshold t: left bars must pair with a right bar
// at tilde_d <= t or go to star at l/2 <= t, and symmetrically. Encoded in
// the standard way with one dummy node per bar on the opposite side (dummy
// against dummy is always free); feasible iff a perfect matching exists.
struct Feasibility {
  const std::vector<Interval>& a;
  const std::vector<Interval>& b;
  std::vector<std::vector<double>> cost;  // pairwise tilde_d
  std::vector<double> star_a, star_b;     // tilde_d against star

  Feasibility(const std::vector<Interval>& a_, const std::vector<Interval>& b_)
      : a(a_), b(b_) {
    cost.assign(a.size(), std::vector<double>(b.size(), 0.0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) cost[i][j] = tilde_d(a[i], b[j]);
    for (auto& iv : a) star_a.push_back(tilde_d(iv, std::nullopt));
    for (auto& iv : b) star_b.push_back(tilde_d(std::nullopt, iv));
  }

  // nodes: left = a bars then dummies for each b bar; right symmetric
  bool edge(int l, int r, double t) const {
    int na = (int)a.size(), nb = (int)b.size();
    bool ld = l >= na, rd = r >= nb;
    if (ld && rd) return true;
    if (ld) return star_b[r] <= t;          // dummy(l - na) frees b bar r
    if (rd) return star_a[l] <= t;          // a bar l goes to star
    return cost[l][r] <= t;
  }

  // Kuhn's augmenting paths; fills match_r (right node -> left node)
  bool augment(int l, double t, std::vector<int>& match_r, std::vector<char>& seen) const {
    int n = (int)a.size() + (int)b.size();
    for (int r = 0; r < n; ++r) {
      if (seen[r] || !edge(l, r, t)) continue;
      seen[r] = 1;
      if (match_r[r] < 0 || augment(match_r[r], t, match_r, seen)) {
        match_r[r] = l;
        return true;
      }
    }
    return false;
  }

  bool feasible(double t, std::vector<int>* out = nullptr) const {
    int n = (int)a.size() + (int)b.size();
    std::vector<int> match_r(n, -1);
    for (int l = 0; l < n; ++l) {
      std::vector<char> seen(n, 0);
      if (!augment(l, t, match_r, seen)) return false;
    }
    if (out) *out = match_r;
    return true;
  }
};

}  // namespace

double bottleneck_intervals(const std::vector<Interval>& a, const std::vector<Interval>& b,
                            PartialMatching* witness) {
  Feasibility F(a, b);
  // the optimum is attained at one of the finitely many pair or star costs
  std::set<double> cands = {0.0};
  for (auto& row : F.cost) cands.insert(row.begin(), row.end());
  cands.insert(F.star_a.begin(), F.star_a.end());
  cands.insert(F.star_b.begin(), F.star_b.end());
  std::vector<double> ts(cands.begin(), cands.end());
  // the largest candidate admits every edge, so it is always feasible
  size_t lo = 0, hi = ts.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (F.feasible(ts[mid])) hi = mid; else lo = mid + 1;
  }
  if (witness) {
    std::vector<int> match_r;
    F.feasible(ts[lo], &match_r);
    *witness = PartialMatching::all_star((int)a.size(), (int)b.size());
    for (size_t r = 0; r < b.size(); ++r)
      if (match_r[r] >= 0 && match_r[r] < (int)a.size()) witness->match(match_r[r], (int)r);
  }
  return ts[lo];
}

double bottleneck(const Barcode& B, const Barcode& Bp, int degree) {
  return bottleneck_intervals(B.expand(degree), Bp.expand(degree));
}

double bottleneck_all(const Barcode& B, const Barcode& Bp) {
  std::set<int> degs;
  for (int d : B.degrees()) degs.insert(d);
  for (int d : Bp.degrees()) degs.insert(d);
  double c = 0.0;
  for (int d : degs) c = std::max(c, bottleneck(B, Bp, d));
  return c;
}

}  // namespace ainfp
