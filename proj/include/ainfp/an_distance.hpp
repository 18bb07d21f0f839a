#pragma once

#include "ainfp/ainfty.hpp"
#include "ainfp/barcode.hpp"

namespace ainfp {

// One side of a distance computation: a minimal A_N structure together with
// the interval bookkeeping of its class basis. Bars carry full intervals
// (p2, p1]; classes carry intervals truncated at their slice, (p2, p3].
struct ANModel {
  ANStructure st;
  std::vector<int> bar_degree;
  std::vector<Interval> bar_iv;
  std::vector<int> bar_class;      // bar -> class index of its top-slice rep
  std::vector<Interval> class_iv;  // class -> truncated interval

  Barcode barcode() const;
  std::vector<int> bars_of_degree(int n) const;  // ascending bar ids
};

ANModel make_model(const TransferResult& T);
// same classes and intervals, gauge-equivalent structure
ANModel with_structure(const ANModel& M, ANStructure st);

// distance between enriched basis elements: tilde_d on truncated intervals,
// with nullopt playing the singular element
double dn(const std::optional<Interval>& a, const std::optional<Interval>& b);

// distance between support sets; the empty list encodes the singleton {*}
double hat_d(const std::vector<Interval>& S, const std::vector<Interval>& Sp);

// truncated intervals of the classes supporting m_i on a bar tuple; bar id
// -1 stands for the singular element, which forces the {*} (empty) output
std::vector<Interval> support_intervals(const ANModel& M, int i, const std::vector<int>& bars);

// per-degree matchings between the two bar lists (local indices follow
// bars_of_degree order)
struct MatchingTuple {
  std::map<int, PartialMatching> per_degree;
};

struct DistanceReport {
  double value = 0.0;
  bool exact = true;
  double lower_bound = 0.0;
  MatchingTuple matching;  // achieving tuple for the pre-metric value
  std::string note;        // how the value was certified
};

struct DeltaConfig {
  int max_pairs = 20;  // beyond this the search returns a flagged upper bound
};

// sup over i = 1..N and pair tuples of hat_d between supports, minimized
// over all per-degree matching tuples; N = 1 is the classical bottleneck
DistanceReport pre_an_bottleneck(const ANModel& X, const ANModel& Y, int N,
                                 DeltaConfig cfg = {});

// evaluate the sup for one fixed matching tuple (witness replay)
double evaluate_matching_tuple(const ANModel& X, const ANModel& Y, int N,
                               const MatchingTuple& t);

// Attempt to connect two transfers of the same Rees algebra by a morphism
// with linear part pi_Y iota_X, solving the morphism identities for the
// higher components; nullopt when the identities admit no solution.
std::optional<ANMorphism> connect_models(const TransferResult& X, const TransferResult& Y, int N);

struct GaugeConfig {
  DeltaConfig delta;
  int max_block = 4;        // largest (degree, adams) block enumerated
  long max_candidates = 4096;  // cap on enumerated linear gauges
};

// Quotient distance bracket: lower bound = classical bottleneck (invariant
// under gauge moves), upper bound = min of the pre-metric over the explored
// gauge orbit; exact when the linear gauge family was exhausted (F_2, small
// blocks) or the bracket is tight.
DistanceReport an_bottleneck(const ANModel& X, const ANModel& Y, int N, GaugeConfig cfg = {});
// same-algebra variant: tries connect_models first (distance 0 with witness)
DistanceReport an_bottleneck(const TransferResult& X, const TransferResult& Y, int N,
                             GaugeConfig cfg = {});

}  // namespace ainfp
