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


#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "qdist/qdist.hpp"
#include "test_util.hpp"

namespace qdist {
namespace {

using testing::error_of;

TEST(Sweep, SmallRunPasses) {
  const VerificationReport rep = sweep({2, 3}, 50, PriorMode::Random, 7, 1e-9);
  EXPECT_TRUE(rep.passed());
  for (const auto& r : rep.records) EXPECT_EQ(r.samples, 100u) << r.record_id;
}

TEST(Sweep, ThreadCountDoesNotChangeTheReport) {
  const SweepConfig one{{2, 4}, 40, PriorMode::Uniform, 3, 1e-9, 1};
  SweepConfig three = one;
  three.threads = 3;
  EXPECT_EQ(sweep(one).to_csv(), sweep(three).to_csv());
}

TEST(Sweep, SeedChangesTheReport) {
  EXPECT_NE(sweep({3}, 20, PriorMode::Random, 1, 1e-9).to_csv(), sweep({3}, 20, PriorMode::Random, 2, 1e-9).to_csv());
}

TEST(Sweep, ConfigErrors) {
  EXPECT_EQ(error_of([] { sweep({2}, 1, PriorMode::Uniform, 1, 0.0); }), Errc::DomainError);
  EXPECT_EQ(error_of([] { sweep({2}, 1, PriorMode::Uniform, 1, -1.0); }), Errc::DomainError);
  EXPECT_EQ(error_of([] { sweep({1}, 1, PriorMode::Uniform, 1, 1e-9); }), Errc::DomainError);
}

TEST(Sweep, CsvLayout) {
  const std::string csv = sweep({2}, 5, PriorMode::Uniform, 42, 1e-9).to_csv();
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "record_id,samples,violations,min_slack,argmin_seed");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4) << line;
  }
  EXPECT_EQ(rows, 16);
}

TEST(GenerateSample, MixesFullAndDeficientRanks) {
  int deficient = 0;
  const int n = 2000;
  for (int k = 0; k < n; ++k) {
    const WeightedStatePair pair = generate_sample(4, PriorMode::Random, sample_seed(42, 4, PriorMode::Random, k));
    if (pair.rho().rank() < 4 || pair.sigma().rank() < 4) ++deficient;
    EXPECT_GE(pair.prior(), 0.0);
    EXPECT_LT(pair.prior(), 1.0);
  }
  EXPECT_NEAR(double(deficient) / n, 0.25, 0.04);
}

TEST(GenerateSample, UniformModeUsesHalf) {
  EXPECT_EQ(generate_sample(3, PriorMode::Uniform, 9).prior(), 0.5);
}

TEST(SampleSeed, DistinctAcrossDimModeAndIndex) {
  std::set<std::uint64_t> seeds;
  for (Index d : {2, 3, 4, 8}) {
    for (PriorMode m : {PriorMode::Uniform, PriorMode::Random}) {
      for (std::uint64_t k = 0; k < 250; ++k) seeds.insert(sample_seed(42, d, m, k));
    }
  }
  EXPECT_EQ(seeds.size(), 2000u);
}

TEST(RecordStats, MergeIsCommutative) {
  RecordStats a{"X"}, b{"X"};
  EvaluationResult r;
  r.holds = true;
  r.slack = 0.5;
  a.add(r, 10);
  r.slack = 0.2;
  a.add(r, 11);
  r.slack = 0.2;
  b.add(r, 5);
  r.holds = false;
  r.slack = 0.9;
  b.add(r, 6);
  RecordStats ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab.samples, 4u);
  EXPECT_EQ(ab.violations, 1u);
  EXPECT_EQ(ab.argmin_seed, 5u);
  EXPECT_EQ(ba.argmin_seed, 5u);
  EXPECT_EQ(ab.min_slack, ba.min_slack);
}

TEST(RecordStats, EmptyMergeKeepsState) {
  RecordStats a{"X"}, empty{"X"};
  EvaluationResult r;
  r.holds = true;
  r.slack = 0.3;
  a.add(r, 4);
  a.merge(empty);
  EXPECT_EQ(a.argmin_seed, 4u);
  EXPECT_DOUBLE_EQ(a.min_slack.value(), 0.3);
  EXPECT_TRUE(empty.min_slack.is_pos_inf());
}

}  // namespace
}  // namespace qdist
