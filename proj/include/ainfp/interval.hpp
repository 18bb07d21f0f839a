#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace ainfp {

// Extended real filtration indices. Finite values are compared exactly on the
// stored double bits; +-infinity are first class.
constexpr double kPlusInf = std::numeric_limits<double>::infinity();
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

// a - b for a >= b in the extended reals; equal values (including equal
// infinities) give 0, otherwise an infinite endpoint makes the gap infinite.
double ext_diff(double a, double b);

// Half-open interval (lower, upper]: the set {p : upper >= p > lower}.
// lower may be -inf, upper may be +inf; always lower < upper.
struct Interval {
  double lower;
  double upper;
  bool operator==(const Interval&) const = default;
  bool operator<(const Interval& o) const {
    return lower != o.lower ? lower < o.lower : upper < o.upper;
  }
};

Interval make_interval(double lower, double upper);

// sup of |p - q| over the interval; 0 for an empty list piece.
double length(const Interval& I);
// length of a finite union of pairwise-disjoint intervals.
double length(const std::vector<Interval>& pieces);

// K = smallest interval containing both, K \ I as explicit residual pieces.
std::vector<Interval> hull_minus(const Interval& I, const Interval& J);

// Interval metric d~; nullopt stands for the dummy element *.
double tilde_d(const std::optional<Interval>& I, const std::optional<Interval>& J);

// Nonzero-morphism criterion k_I -> k_J for interval modules over the
// decreasing scale: J overlaps I from above.
bool good_intersection(const Interval& I, const Interval& J);

}  // namespace ainfp
