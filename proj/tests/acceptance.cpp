// acceptance gate: every promised behavior checked end to end, one line each
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>

#include "ainfp/an_distance.hpp"
#include "ainfp/fixtures.hpp"

using namespace ainfp;

namespace {

int failures = 0;

void criterion(int k, const std::string& desc, double budget_s,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && budget_s > 0 && secs > budget_s) {
    ok = false;
    err = "over time budget";
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k << ": " << desc;
  std::printf("  (%.2fs)", secs);
  if (!ok && !err.empty()) std::cout << "  [" << err << "]";
  std::cout << "\n" << std::flush;
}

bool grid_agree(const Persistence& P, int n) {
  if (!(P.barcode(n) == P.barcode_from_ranks(n))) return false;
  std::vector<double> pts = {kMinusInf};
  for (double c : P.scale) pts.push_back(c);
  pts.push_back(kPlusInf);
  for (double p : pts)
    for (double pp : pts)
      if (p >= pp && P.beta(n, p, pp) != P.beta_from_bars(n, p, pp)) return false;
  return true;
}

int top_degree(const FilteredDgAlgebra& A) {
  int d = 0;
  for (auto& e : A.basis) d = std::max(d, e.degree);
  return d;
}

bool stasheff_and_morphism(const TransferResult& T, int N) {
  for (int n = 2; n <= N; ++n)
    if (check_stasheff(T.minimal, n)) return false;
  for (int n = 1; n <= N; ++n)
    if (check_morphism(T.minimal, T.ambient, T.inclusion, n)) return false;
  return true;
}

// nonzero m_3 on a degree (1,1,1) input triple with a degree 2 output
bool massey_visible(const ANStructure& M) {
  for (auto& [tup, v] : M.ops[3]) {
    bool all1 = true;
    for (int k : tup) all1 = all1 && M.basis[k].degree == 1;
    if (all1 && !v.empty() && M.basis[v.front().first].degree == 2) return true;
  }
  return false;
}

}  // namespace

int main() {
  criterion(1, "square point cloud barcodes (homology and relative cohomology)", 1.0, [] {
    Field F{2};
    auto X = rips_points(square_points(), 2, kPlusInf);
    double s2 = std::sqrt(2.0);
    Barcode expect;
    expect.add(0, {0.0, 1.0}, 3);
    expect.add(0, {0.0, kPlusInf});
    expect.add(1, {1.0, s2});
    expect.add(2, {s2, kPlusInf});
    if (!(homology_barcode(F, X) == expect)) return false;
    Barcode co;
    co.add(0, {kMinusInf, 0.0});
    co.add(1, {0.0, 1.0}, 3);
    co.add(2, {1.0, s2});
    co.add(2, {kMinusInf, s2});
    return compute_persistence(cochain_algebra(F, X)).barcode_all() == co;
  });

  criterion(2, "barcode vs rank-formula multiplicities on 100 random complexes", 30.0, [] {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t) {
      Field F = t % 2 ? Field{5} : Field{2};
      auto A = cochain_algebra(F, random_complex(rng, 5, 2));
      auto P = compute_persistence(A, t);
      for (int n = 0; n <= top_degree(A); ++n)
        if (!grid_agree(P, n)) return false;
    }
    return true;
  });

  criterion(3, "homology/cohomology barcode duality on 50 random complexes", 60.0, [] {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 50; ++t) {
      Field F = t % 2 ? Field{5} : Field{2};
      if (!check_duality(F, random_complex(rng, 6, 2)).pass) return false;
    }
    return true;
  });

  criterion(4, "exact couple exactness across adjacent slices on 20 complexes", 60.0, [] {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 20; ++t) {
      Field F = t % 2 ? Field{5} : Field{2};
      auto A = cochain_algebra(F, random_complex(rng, 5, 2));
      std::vector<double> pts = {kMinusInf};
      for (double c : A.critical_scale()) pts.push_back(c);
      for (size_t s = 0; s + 1 < pts.size(); ++s)
        if (!exact_couple_slice(A, pts[s], pts[s + 1]).exact) return false;
    }
    return true;
  });

  criterion(5, "transfer satisfies associativity/morphism identities up to n = 4", 120.0, [] {
    std::mt19937_64 rng(404);
    Field fields[] = {Field{2}, Field{5}, Field{0}};
    for (int t = 0; t < 20; ++t) {
      auto T = transfer(cochain_algebra(fields[t % 3], random_complex(rng, 5, 2)), 4, t);
      if (!stasheff_and_morphism(T, 4)) return false;
    }
    return true;
  });

  criterion(6, "nonzero triple product for the Heisenberg algebra, zero for its cohomology", 60.0, [] {
    Field fields[] = {Field{2}, Field{5}, Field{0}};
    for (int seed = 0; seed < 5; ++seed)
      for (auto& F : fields) {
        if (!massey_visible(transfer(heisenberg_algebra(F), 3, seed).minimal)) return false;
        if (!transfer(formal_heisenberg(F), 3, seed).minimal.ops[3].empty()) return false;
      }
    return true;
  });

  criterion(7, "pre-metric axioms: bottleneck at level 1, symmetry, monotone in N, triangle", 240.0, [] {
    std::mt19937_64 rng(505);
    Field F{2};
    auto model = [&](int max_v, int N) {
      return make_model(transfer(cochain_algebra(F, random_complex(rng, max_v, 2)), N));
    };
    int done = 0;
    while (done < 12) {
      auto A = model(5, 1), B = model(5, 1);
      if (A.bar_iv.size() + B.bar_iv.size() > 14) continue;
      auto r = pre_an_bottleneck(A, B, 1);
      if (!r.exact || r.value != bottleneck_all(A.barcode(), B.barcode())) return false;
      ++done;
    }
    done = 0;
    while (done < 8) {
      auto A = model(5, 3), B = model(5, 3);
      if (A.bar_iv.size() + B.bar_iv.size() > 12) continue;
      auto r2 = pre_an_bottleneck(A, B, 2);
      auto r3 = pre_an_bottleneck(A, B, 3);
      if (!(pre_an_bottleneck(A, B, 1).value <= r2.value && r2.value <= r3.value)) return false;
      if (pre_an_bottleneck(B, A, 3).value != r3.value) return false;
      ++done;
    }
    done = 0;
    while (done < 30) {
      auto A = model(4, 2), B = model(4, 2), C = model(4, 2);
      if (A.bar_iv.size() + B.bar_iv.size() > 10 || B.bar_iv.size() + C.bar_iv.size() > 10 ||
          A.bar_iv.size() + C.bar_iv.size() > 10)
        continue;
      double ab = pre_an_bottleneck(A, B, 2).value;
      double bc = pre_an_bottleneck(B, C, 2).value;
      double ac = pre_an_bottleneck(A, C, 2).value;
      if (!(ac <= ab + bc)) return false;
      ++done;
    }
    return true;
  });

  criterion(8, "separating fixtures: torus/wedge and Heisenberg/formal brackets", 300.0, [] {
    Field F{2};
    auto MT = make_model(transfer(cochain_algebra(F, torus7()), 2));
    auto MW = make_model(transfer(cochain_algebra(F, wedge_fixture()), 2));
    if (!(MT.barcode() == MW.barcode())) return false;
    auto d1 = pre_an_bottleneck(MT, MW, 1);
    auto d2 = pre_an_bottleneck(MT, MW, 2);
    if (!(d1.exact && d1.value == 0.0 && d2.exact && d2.value == kPlusInf)) return false;
    auto TH = transfer(heisenberg_algebra(F), 3);
    auto TF = transfer(formal_heisenberg(F), 3);
    auto b1 = an_bottleneck(TH, TF, 1);
    auto b3 = an_bottleneck(TH, TF, 3);
    return b1.exact && b1.value == 0.0 && b3.exact && b3.value == kPlusInf &&
           b3.lower_bound == 0.0;
  });

  criterion(9, "model independence: transfers with different seeds are at distance zero", 300.0, [] {
    Field F2{2};
    int done = 0;
    for (int seed = 1; seed <= 4; ++seed, ++done) {
      auto r = an_bottleneck(transfer(heisenberg_algebra(F2), 3, 0),
                             transfer(heisenberg_algebra(F2), 3, seed), 3);
      if (!(r.exact && r.value == 0.0)) return false;
    }
    std::mt19937_64 rng(606);
    for (int t = 0; t < 6; ++t, ++done) {
      auto X = random_complex(rng, 5, 2);
      Field F = t % 2 ? Field{5} : Field{2};
      auto r = an_bottleneck(transfer(cochain_algebra(F, X), 3, 2 * t + 1),
                             transfer(cochain_algebra(F, X), 3, 2 * t + 2), 3);
      if (!(r.exact && r.value == 0.0)) return false;
    }
    return done == 10;
  });

  std::cout << (failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << " (" << 9 - failures
            << "/9)\n";
  return failures ? 1 : 0;
}
