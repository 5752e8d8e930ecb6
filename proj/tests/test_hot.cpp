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

#include <cmath>

#include "qdist/qdist.hpp"
#include "test_util.hpp"

namespace qdist {
namespace {

using testing::error_of;

// High-precision reference values: minimiser located by bisection on the
// analytic derivative, evaluated in 50-digit arithmetic.
struct HotReference {
  double x;
  double s;
};

constexpr HotReference kHotReference[] = {
    {0.01, 0.00020000444468149811}, {0.05, 0.0050027814879907091}, {0.1, 0.02004468315795295},
    {0.3, 0.18378456526831635},     {0.5, 0.53229790889199995},    {0.8, 1.5864313242980231},
    {0.9, 2.3021828844129876},      {0.99, 4.6051701859880914},
};

TEST(HotFunction, MatchesReferenceValues) {
  for (const auto& ref : kHotReference) EXPECT_NEAR(hot_function(ref.x), ref.s, 1e-12 * std::max(1.0, ref.s)) << ref.x;
}

TEST(HotFunction, MinimiserLocation) {
  EXPECT_NEAR(hot_minimum(0.1).r, 0.53339293374619608, 1e-6);
  EXPECT_NEAR(hot_minimum(0.5).r, 0.675380237797181, 1e-6);
}

TEST(HotFunction, BoundaryMinimumNearOne) {
  // the minimised expression increases on all of (x, 1); infimum at r -> x
  const HotMinimum m = hot_minimum(0.99);
  EXPECT_EQ(m.r, 0.99);
  EXPECT_EQ(m.value, hot_upper(0.99));
}

TEST(HotFunction, ZeroAtZero) {
  EXPECT_EQ(hot_function(0.0), 0.0);
  EXPECT_EQ(hot_series(0.0), 0.0);
  EXPECT_EQ(hot_upper(0.0), 0.0);
}

TEST(HotFunction, DomainErrors) {
  EXPECT_EQ(error_of([] { hot_function(1.0); }), Errc::DomainError);
  EXPECT_EQ(error_of([] { hot_function(-0.01); }), Errc::DomainError);
  EXPECT_EQ(error_of([] { hot_upper(1.0); }), Errc::DomainError);
  EXPECT_EQ(error_of([] { hot_inverse(-1.0); }), Errc::DomainError);
}

TEST(HotFunction, SeriesAndEnvelopeValues) {
  EXPECT_NEAR(hot_series(0.5), 0.53148148148148148, 1e-15);
  EXPECT_NEAR(hot_upper(0.5), 0.69314718055994531, 1e-15);
  EXPECT_DOUBLE_EQ(pinsker_lower(0.5), 0.5);
}

TEST(HotFunction, SeriesAccurateForSmallX) {
  for (int k = 1; k <= 10; ++k) {
    const double x = 0.01 * k;
    EXPECT_LE(std::abs(hot_function(x) - hot_series(x)), 5e-8) << x;
  }
}

TEST(HotFunction, BetweenEnvelopesAndIncreasing) {
  double prev = -1.0;
  for (int k = 0; k < 1000; ++k) {
    const double x = 0.999 * k / 999.0;
    const double s = hot_function(x);
    EXPECT_LE(pinsker_lower(x), s + 1e-15) << x;
    EXPECT_LE(s, hot_upper(x) + 1e-15) << x;
    EXPECT_GT(s, prev) << x;
    prev = s;
  }
}

TEST(HotInverse, InvertsHotFunction) {
  for (double x : {0.0, 0.001, 0.1, 0.37, 0.5, 0.9, 0.99}) {
    EXPECT_NEAR(hot_inverse(hot_function(x)), x, 1e-9) << x;
  }
}

TEST(HotInverse, CapsBelowOne) {
  EXPECT_LT(hot_inverse(1e6), 1.0);
  EXPECT_GT(hot_inverse(1e6), 1.0 - 1e-9);
}

}  // namespace
}  // namespace qdist
