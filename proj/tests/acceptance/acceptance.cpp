// Copyright 2026 The qdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "qdist/qdist.hpp"

namespace qdist {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double dev(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value());
  return a.kind() == b.kind() ? 0.0 : HUGE_VAL;
}

// 1 ------------------------------------------------------------------------
Outcome family_regression() {
  const auto start = Clock::now();
  double worst = 0.0;
  std::string where;
  for (Family f : kAllFamilies) {
    for (int k = 0; k <= 10; ++k) {
      const double t = k / 10.0;
      const FamilyPoint fp = family_point(f, t);
      const MeasureReport c = measure_report(make_weighted_pair(fp.rho, fp.sigma, 0.5));
      const MeasureReport& e = fp.expected;
      const double d = std::max({std::abs(c.overlap - e.overlap), std::abs(c.trace_distance - e.trace_distance),
                                 std::abs(c.fidelity - e.fidelity), std::abs(c.hellinger - e.hellinger),
                                 std::abs(c.q_min - e.q_min), dev(c.chernoff, e.chernoff),
                                 dev(c.relative_entropy, e.relative_entropy)});
      if (d > worst || where.empty()) {
        worst = std::max(worst, d);
        where = fmt("(%c) t=%.1f", family_letter(f), t);
      }
    }
  }
  const double secs = seconds_since(start);
  return {worst <= 1e-10 && secs < 5.0,
          fmt("max deviation %.3g at %s, tol 1e-10; %.2f s (limit 5 s)", worst, where.c_str(), secs)};
}

// 2 ------------------------------------------------------------------------
VerificationReport g_sweep;

Outcome soundness_sweep() {
  const auto start = Clock::now();
  const std::vector<Index> dims{2, 3, 4, 8};
  g_sweep = sweep(SweepConfig{dims, 1000, PriorMode::Uniform, 42, 1e-9, 1});
  g_sweep.merge(sweep(SweepConfig{dims, 1000, PriorMode::Random, 42, 1e-9, 1}));
  const double secs = seconds_since(start);
  std::string failing;
  for (const auto& r : g_sweep.records) {
    if (r.violations) failing += " " + r.record_id + "(" + std::to_string(r.violations) + ")";
  }
  return {g_sweep.passed() && secs < 60.0,
          fmt("%llu samples per record, %llu violations%s; %.1f s single-threaded (limit 60 s)",
              static_cast<unsigned long long>(g_sweep.records.front().samples),
              static_cast<unsigned long long>(g_sweep.total_violations()), failing.c_str(), secs)};
}

// 3 ------------------------------------------------------------------------
Outcome sharpness() {
  int sharp = 0, tight = 0;
  std::string missing;
  for (const auto& rec : catalog()) {
    if (!rec.sharp()) continue;
    ++sharp;
    double best = HUGE_VAL;
    for (Family f : kAllFamilies) {
      if (!rec.equality_families().contains(f)) continue;
      for (int k = 1; k < 10; ++k) {
        for (const auto& fs : family_equality_slacks(f, k / 10.0)) {
          if (fs.record_id == rec.id && fs.slack.is_finite()) best = std::min(best, std::abs(fs.slack.value()));
        }
      }
    }
    if (best <= 1e-9) {
      ++tight;
    } else {
      missing += " " + rec.id;
    }
  }
  return {tight == sharp, fmt("%d of %d sharp records attain |slack| <= 1e-9 at an interior family point%s", tight,
                              sharp, missing.empty() ? "" : (" (missing:" + missing + ")").c_str())};
}

// 4 ------------------------------------------------------------------------
Outcome hot_function_checks() {
  double series_err = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const double x = 0.01 * k;
    series_err = std::max(series_err, std::abs(hot_function(x) - hot_series(x)));
  }
  int envelope_fail = 0;
  for (int k = 0; k < 1000; ++k) {
    const double x = 0.999 * k / 999.0;
    const double s = hot_function(x);
    if (!(pinsker_lower(x) <= s && s <= hot_upper(x))) ++envelope_fail;
  }
  const RecordStats& t7 = g_sweep.stats("T7");
  const double sweep_min = t7.min_slack.is_finite() ? t7.min_slack.value() : HUGE_VAL;
  double tuned_max = 0.0, tuned_min = HUGE_VAL;
  for (int k = 1; k <= 19; ++k) {
    const double x = k / 20.0;
    const HotMinimum m = hot_minimum(x);
    const DensityOperator rho = validate_density(HermitianMatrix::diagonal({m.r - x, 1.0 - m.r + x}));
    const DensityOperator sigma = validate_density(HermitianMatrix::diagonal({m.r, 1.0 - m.r}));
    const auto e = evaluate(find_record("T7"), make_weighted_pair(rho, sigma, 0.5), 1e-9);
    tuned_max = std::max(tuned_max, e.slack.value());
    tuned_min = std::min(tuned_min, e.slack.value());
  }
  const bool ok = series_err <= 5e-8 && envelope_fail == 0 && sweep_min >= -1e-9 && tuned_max <= 1e-6 &&
                  tuned_min >= -1e-9;
  return {ok, fmt("series error %.3g (tol 5e-8); envelope failures %d/1000; T7 sweep min slack %.3g (>= -1e-9); "
                  "tuned 2x2 slack in [%.3g, %.3g] (<= 1e-6)",
                  series_err, envelope_fail, sweep_min, tuned_min, tuned_max)};
}

// 5 ------------------------------------------------------------------------
Outcome analytic_identities() {
  double convexity = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(derive_seed(5, seed));
    const WeightedStatePair pair = oracle::random_pair(rng.next_u64(), 2 + seed % 4, seed % 3 != 0);
    double s1 = rng.uniform(), s2 = rng.uniform();
    const double lambda = rng.uniform();
    const double sm = lambda * s1 + (1.0 - lambda) * s2;
    const auto psi = [&](double s) { return log_trace_power(pair.rho(), pair.sigma(), s).value(); };
    convexity = std::max(convexity, psi(sm) - (lambda * psi(s1) + (1.0 - lambda) * psi(s2)));
  }
  double fd_err = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const WeightedStatePair pair = oracle::random_pair(derive_seed(6, seed), 2 + seed % 4);
    const double h = 1e-5;
    const double fd = (log_trace_power(pair.rho(), pair.sigma(), 1.0).value() -
                       log_trace_power(pair.rho(), pair.sigma(), 1.0 - h).value()) /
                      h;
    fd_err = std::max(fd_err, std::abs(fd - relative_entropy(pair.rho(), pair.sigma()).value()));
  }
  double commuting = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const WeightedStatePair pair = oracle::random_commuting_pair(derive_seed(7, seed), 2 + seed % 6);
    commuting = std::max(commuting, std::abs(hellinger_affinity(pair) - fidelity(pair)));
  }
  return {convexity <= 1e-9 && fd_err <= 1e-3 && commuting <= 1e-12,
          fmt("psi convexity excess %.3g (tol 1e-9); |psi'(1) - S| %.3g (tol 1e-3); commuting |Q - F| %.3g "
              "(tol 1e-12)",
              convexity, fd_err, commuting)};
}

// 6 ------------------------------------------------------------------------
Outcome matrix_core() {
  double mono = 0.0, power = 0.0, holder = 0.0, ps = 0.0;
  for (std::uint64_t k = 0; k < 500; ++k) {
    Rng rng(derive_seed(8, k));
    const Index n = rng.uniform_int(2, 6);
    const ComplexMatrix x = rng.ginibre(n, n);
    const ComplexMatrix y = rng.ginibre(n, n);
    const double q1 = 0.2 + 4.0 * rng.uniform(), q2 = q1 + 4.0 * rng.uniform();
    mono = std::max(mono, (schatten_norm(x, q2) - schatten_norm(x, q1)) / schatten_norm(x, q1));

    const HermitianMatrix a = oracle::random_psd(rng, n, rng.uniform_int(1, n));
    const double p = 0.05 + 1.95 * rng.uniform(), q = 0.2 + 4.0 * rng.uniform();
    const double lhs = schatten_norm(fractional_power(a, p), q), rhs = std::pow(schatten_norm(a, p * q), p);
    power = std::max(power, std::abs(lhs - rhs) / std::max(1.0, rhs));

    const double hp = 0.5 + 4.0 * rng.uniform(), hq = 0.5 + 4.0 * rng.uniform();
    const double hr = 1.0 / (1.0 / hp + 1.0 / hq);
    const double prod = schatten_norm(x, hp) * schatten_norm(y, hq);
    holder = std::max(holder, (schatten_norm(ComplexMatrix(x * y), hr) - prod) / prod);

    const WeightedStatePair pair = oracle::random_pair(rng.next_u64(), n, false, rng.uniform());
    const auto sq = [](double v) { return std::sqrt(v); };
    const ComplexMatrix diff =
        apply_on_support(pair.a_spectrum(), sq).matrix() - apply_on_support(pair.b_spectrum(), sq).matrix();
    ps = std::max(ps, diff.squaredNorm() - trace_distance(pair));
  }
  return {mono <= 1e-9 && power <= 1e-9 && holder <= 1e-9 && ps <= 1e-9,
          fmt("500 samples each: monotonicity excess %.3g, power identity error %.3g, Hoelder excess %.3g, "
              "Powers-Stormer excess %.3g (tol 1e-9)",
              mono, power, holder, ps)};
}

// 7 ------------------------------------------------------------------------
Outcome determinism() {
  cli::VerifyOptions o;  // dims 2..4, 1000 samples, seed 42, both priors
  std::ostringstream out1, out2, err;
  const int c1 = cli::cmd_verify(o, out1, err);
  const int c2 = cli::cmd_verify(o, out2, err);
  const bool same = out1.str() == out2.str();
  return {same && c1 == 0 && c2 == 0 && !out1.str().empty(),
          fmt("two verify runs (dims 2..4, 1000 samples, seed 42): exit %d/%d, %zu bytes, %s", c1, c2,
              out1.str().size(), same ? "byte-identical" : "DIFFERENT")};
}

// 8 ------------------------------------------------------------------------
Outcome oracle_equivalence() {
  // The verdict uses the 1001-point grid. The finer grid and the sign of the
  // gap are reported so a failure can be attributed to one side.
  double worst = 0.0, below_grid = -HUGE_VAL, fine_worst = 0.0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    Rng rng(derive_seed(9, k));
    const Index n = rng.uniform_int(2, 4);
    const WeightedStatePair pair = oracle::random_pair(rng.next_u64(), n, rng.uniform() < 0.75, rng.uniform());
    const double q = min_renyi_overlap(pair).value;
    const double grid = oracle::grid_q_min(pair.a().matrix(), pair.b().matrix(), 1001);
    const double fine = oracle::grid_q_min(pair.a().matrix(), pair.b().matrix(), 10001);
    worst = std::max(worst, std::abs(q - grid));
    below_grid = std::max(below_grid, q - grid);
    fine_worst = std::max(fine_worst, std::abs(q - fine));
  }
  return {worst <= 1e-7, fmt("max |q_min - 1001-grid min| over 200 pairs %.3g (tol 1e-7); max(q_min - grid) %.3g; "
                             "max |q_min - 10001-grid min| %.3g",
                             worst, below_grid, fine_worst)};
}

}  // namespace
}  // namespace qdist

int main() {
  using namespace qdist;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 family regression", family_regression},   {"2 catalog soundness sweep", soundness_sweep},
      {"3 sharpness", sharpness},                   {"4 HOT function", hot_function_checks},
      {"5 analytic identities", analytic_identities}, {"6 matrix-core properties", matrix_core},
      {"7 determinism", determinism},               {"8 oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
