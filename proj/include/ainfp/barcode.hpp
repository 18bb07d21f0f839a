#pragma once

#include <map>
#include <string>
#include <vector>

#include "ainfp/interval.hpp"

namespace ainfp {

// Multiset of (degree, interval) with positive multiplicities.
struct Barcode {
  // keyed map keeps entries canonical (no duplicate (degree, interval) keys)
  std::map<std::pair<int, Interval>, long> entries;

  void add(int degree, const Interval& iv, long mult = 1);
  long total(int degree) const;
  // expanded list (one copy per multiplicity unit) for a fixed degree
  std::vector<Interval> expand(int degree) const;
  std::vector<int> degrees() const;
  bool operator==(const Barcode&) const = default;
  std::string str() const;
};

// Total partial matching between two expanded lists of sizes nl, nr: every
// left index appears exactly once (right partner or -1 for *), every right
// index exactly once; (*,*) never stored.
struct PartialMatching {
  int nl = 0, nr = 0;
  std::vector<int> right_of;  // size nl, value in [0,nr) or -1
  std::vector<int> left_of;   // size nr, value in [0,nl) or -1

  static PartialMatching all_star(int nl, int nr);
  void match(int l, int r);
  bool valid() const;
};

// sup of d~ over all pairs of the matching (star-matched bars pay l/2)
double matching_cost(const std::vector<Interval>& a, const std::vector<Interval>& b,
                     const PartialMatching& m);

// Fact-2 style composition of matchings over (S,S') and (S',S'').
PartialMatching compose_matchings(const PartialMatching& p1, const PartialMatching& p2);

// Exact bottleneck distance between the degree-n slices (branch and bound
// over all partial matchings; deterministic).
double bottleneck(const Barcode& B, const Barcode& Bp, int degree);
// sup over all degrees present in either barcode
double bottleneck_all(const Barcode& B, const Barcode& Bp);
// interval-list version; optionally returns an optimal matching witness
double bottleneck_intervals(const std::vector<Interval>& a, const std::vector<Interval>& b,
                            PartialMatching* witness = nullptr);

}  // namespace ainfp
