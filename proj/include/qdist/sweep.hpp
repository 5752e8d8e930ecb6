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

#ifndef QDIST_SWEEP_HPP
#define QDIST_SWEEP_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "qdist/catalog.hpp"
#include "qdist/errors.hpp"
#include "qdist/extended_real.hpp"
#include "qdist/random_states.hpp"
#include "qdist/state.hpp"

namespace qdist {

enum class PriorMode { Uniform, Random };

struct RecordStats {
  std::string record_id;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  ExtendedReal min_slack = ExtendedReal::infinity();
  std::uint64_t argmin_seed = 0;
  bool seen = false;

  void add(const EvaluationResult& r, std::uint64_t seed) {
    ++samples;
    if (!r.holds) ++violations;
    absorb_min(r.slack, seed);
  }

  /// Commutative merge; equal minima keep the smaller seed.
  void merge(const RecordStats& o) {
    samples += o.samples;
    violations += o.violations;
    if (o.seen) absorb_min(o.min_slack, o.argmin_seed);
  }

 private:
  void absorb_min(const ExtendedReal& slack, std::uint64_t seed) {
    if (!seen || slack < min_slack || (!(min_slack < slack) && seed < argmin_seed)) {
      min_slack = slack;
      argmin_seed = seed;
      seen = true;
    }
  }
};

struct VerificationReport {
  std::vector<RecordStats> records;

  VerificationReport() {
    for (const auto& r : catalog()) records.push_back(RecordStats{r.id});
  }

  bool passed() const {
    return std::all_of(records.begin(), records.end(), [](const RecordStats& r) { return r.violations == 0; });
  }

  std::uint64_t total_violations() const {
    std::uint64_t n = 0;
    for (const auto& r : records) n += r.violations;
    return n;
  }

  const RecordStats& stats(std::string_view id) const {
    for (const auto& r : records) {
      if (r.record_id == id) return r;
    }
    throw Error(Errc::DomainError, "no catalog record " + std::string(id));
  }

  void add(const std::vector<EvaluationResult>& results, std::uint64_t seed) {
    for (const auto& res : results) {
      for (auto& r : records) {
        if (r.record_id == res.record_id) r.add(res, seed);
      }
    }
  }

  void merge(const VerificationReport& o) {
    for (std::size_t i = 0; i < records.size(); ++i) records[i].merge(o.records[i]);
  }

  /// record_id,samples,violations,min_slack,argmin_seed with 12 significant
  /// digits and `inf` for infinite slack.
  std::string to_csv() const {
    std::string out = "record_id,samples,violations,min_slack,argmin_seed\n";
    for (const auto& r : records) {
      out += r.record_id + "," + std::to_string(r.samples) + "," + std::to_string(r.violations) + "," +
             r.min_slack.to_string(12) + "," + std::to_string(r.argmin_seed) + "\n";
    }
    return out;
  }
};

struct SweepConfig {
  std::vector<Index> dims;
  std::uint64_t samples_per_dim = 1000;
  PriorMode prior_mode = PriorMode::Uniform;
  std::uint64_t seed = 42;
  double eta = 1e-9;
  unsigned threads = 1;
};

inline std::uint64_t sample_seed(std::uint64_t base, Index dim, PriorMode mode, std::uint64_t index) {
  return derive_seed(derive_seed(derive_seed(base, static_cast<std::uint64_t>(dim)),
                                 mode == PriorMode::Uniform ? 1 : 2),
                     index);
}

/// With probability 1/4 the pair is rank-deficient: rho, sigma or both get a
/// rank drawn uniformly from [1, dim - 1]. Otherwise both have full rank.
inline WeightedStatePair generate_sample(Index dim, PriorMode mode, std::uint64_t seed) {
  Rng rng(seed);
  Index rank_rho = dim, rank_sigma = dim;
  if (dim > 1 && rng.uniform() < 0.25) {
    const auto which = rng.uniform_int(0, 2);
    if (which != 1) rank_rho = rng.uniform_int(1, dim - 1);
    if (which != 0) rank_sigma = rng.uniform_int(1, dim - 1);
  }
  const double p = mode == PriorMode::Uniform ? 0.5 : rng.uniform();
  const std::uint64_t seed_rho = rng.next_u64();
  const std::uint64_t seed_sigma = rng.next_u64();
  return make_weighted_pair(random_mixed(dim, rank_rho, seed_rho), random_mixed(dim, rank_sigma, seed_sigma), p);
}

/// Evaluates every catalog record on samples_per_dim random pairs per
/// dimension. Deterministic in the seed regardless of the thread count.
inline VerificationReport sweep(const SweepConfig& cfg) {
  if (!(cfg.eta > 0.0)) throw Error(Errc::DomainError, "tolerance must be > 0");
  for (Index d : cfg.dims) {
    if (d < 2) throw Error(Errc::DomainError, "sweep dimensions must be >= 2");
  }
  struct Task {
    Index dim;
    std::uint64_t index;
  };
  std::vector<Task> tasks;
  for (Index d : cfg.dims) {
    for (std::uint64_t k = 0; k < cfg.samples_per_dim; ++k) tasks.push_back({d, k});
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(tasks.size())));
  std::vector<VerificationReport> partial(workers);
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < tasks.size(); i += workers) {
      const std::uint64_t seed = sample_seed(cfg.seed, tasks[i].dim, cfg.prior_mode, tasks[i].index);
      const WeightedStatePair pair = generate_sample(tasks[i].dim, cfg.prior_mode, seed);
      partial[w].add(evaluate_all(pair, cfg.eta), seed);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  VerificationReport total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

inline VerificationReport sweep(const std::vector<Index>& dims, std::uint64_t samples_per_dim, PriorMode mode,
                                std::uint64_t seed, double eta) {
  return sweep(SweepConfig{dims, samples_per_dim, mode, seed, eta, 1});
}

}  // namespace qdist

#endif  // QDIST_SWEEP_HPP
