#include "ainfp/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainfp {

double ext_diff(double a, double b) {
  if (a == b) return 0.0;
  if (a < b) throw std::invalid_argument("ext_diff needs a >= b");
  if (a == kPlusInf || b == kMinusInf) return kPlusInf;
  return a - b;
}

Interval make_interval(double lower, double upper) {
  if (!(lower < upper)) throw std::invalid_argument("empty interval");
  return {lower, upper};
}

double length(const Interval& I) { return ext_diff(I.upper, I.lower); }

double length(const std::vector<Interval>& pieces) {
  double m = 0.0;
  for (const auto& p : pieces) m = std::max(m, length(p));
  return m;
}

std::vector<Interval> hull_minus(const Interval& I, const Interval& J) {
  double lo = std::min(I.lower, J.lower);
  double hi = std::max(I.upper, J.upper);
  std::vector<Interval> out;
  if (lo < I.lower) out.push_back({lo, I.lower});
  if (I.upper < hi) out.push_back({I.upper, hi});
  return out;
}

double tilde_d(const std::optional<Interval>& I, const std::optional<Interval>& J) {
  if (!I && !J) return 0.0;
  if (!I) return tilde_d(J, I);
  if (!J) {
    double l = length(*I);
    return l == kPlusInf ? kPlusInf : l / 2.0;
  }
  return std::max(length(hull_minus(*I, *J)), length(hull_minus(*J, *I)));
}

bool good_intersection(const Interval& I, const Interval& J) {
  // every p in I has p' in J above it: upper_J >= upper_I; every p' in J has
  // p in I below it: lower_J >= lower_I; nonempty overlap: lower_J < upper_I.
  return I.lower <= J.lower && I.upper <= J.upper && J.lower < I.upper;
}

}  // namespace ainfp
