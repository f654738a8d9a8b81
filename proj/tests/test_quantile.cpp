#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "citeimpact/quantile.hpp"
#include "oracles.hpp"

using namespace citeimpact;

namespace {

QuantileAssignment quantiles(std::vector<CitationCount> c) {
  return assign_quantiles(std::span<const CitationCount>(c));
}

std::vector<CitationCount> random_counts(std::mt19937& rng, std::size_t n, unsigned max) {
  std::vector<CitationCount> c(n);
  for (auto& v : c) v = rng() % max;
  return c;
}

}  // namespace

TEST(AssignQuantiles, Examples) {
  // expected values frozen from oracle::quantiles (pairwise L/E counts)
  EXPECT_EQ(oracle::quantiles({0, 1, 2, 3}), (std::vector<double>{12.5, 37.5, 62.5, 87.5}));
  EXPECT_EQ(quantiles({0, 1, 2, 3}).q, (std::vector<double>{12.5, 37.5, 62.5, 87.5}));
  EXPECT_EQ(quantiles({7}).q, (std::vector<double>{50.0}));
  EXPECT_EQ(quantiles({5, 5}).q, (std::vector<double>{50.0, 50.0}));
  EXPECT_EQ(quantiles({3, 0, 2, 1}).q, (std::vector<double>{87.5, 12.5, 62.5, 37.5}));
  EXPECT_EQ(quantiles({1, 2, 3}).reference_size, 3u);
}

TEST(AssignQuantiles, EmptyInputThrows) {
  EXPECT_THROW(quantiles({}), std::invalid_argument);
}

TEST(QuantileProperty, MatchesOracleAndInvariants) {
  std::mt19937 rng(2012);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_counts(rng, 1 + rng() % 60, 1 + rng() % 30);
    const auto qa = quantiles(c);
    const auto ref = oracle::quantiles(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_DOUBLE_EQ(qa.q[i], ref[i]);
      EXPECT_GT(qa.q[i], 0.0);
      EXPECT_LT(qa.q[i], 100.0);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[i] < c[j]) EXPECT_LT(qa.q[i], qa.q[j]);
        if (c[i] == c[j]) EXPECT_EQ(qa.q[i], qa.q[j]);
      }
    }
  }
}

TEST(QuantileProperty, DistinctValuesGiveHazenPositions) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    std::vector<CitationCount> c(n);
    std::iota(c.begin(), c.end(), 0);
    std::shuffle(c.begin(), c.end(), rng);
    auto q = quantiles(c).q;
    std::sort(q.begin(), q.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_DOUBLE_EQ(q[i], 100.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n));
      sum += q[i];
    }
    EXPECT_NEAR(sum / static_cast<double>(n), 50.0, 1e-12);
  }
}

TEST(QuantileProperty, MonotoneTransformInvariance) {
  std::mt19937 rng(9);
  const auto scheme = default_pr6_scheme();
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_counts(rng, 1 + rng() % 200, 50);
    auto f = c;
    for (auto& v : f) v = v * v + 3 * v + 7;
    const auto a = quantiles(c);
    const auto b = quantiles(f);
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(assign_classes(a, scheme).class_index, assign_classes(b, scheme).class_index);
  }
}

TEST(QuantileProperty, OutlierInvariance) {
  std::mt19937 rng(13);
  const auto scheme = default_pr6_scheme();
  for (int trial = 0; trial < 50; ++trial) {
    auto c = random_counts(rng, 2 + rng() % 200, 40);
    const auto top = std::max_element(c.begin(), c.end());
    *top = 1000;  // strict maximum
    const auto before = quantiles(c);
    *top += 1 + rng() % 100000;
    const auto after = quantiles(c);
    EXPECT_EQ(before.q, after.q);
    EXPECT_EQ(assign_classes(before, scheme).class_index, assign_classes(after, scheme).class_index);
  }
}

TEST(ClassScheme, DefaultPr6) {
  const auto s = default_pr6_scheme();
  ASSERT_EQ(s.size(), 6u);
  std::vector<double> widths;
  std::vector<int> weights;
  for (const auto& c : s.classes()) {
    widths.push_back(c.upper_q - c.lower_q);
    weights.push_back(c.weight);
  }
  EXPECT_EQ(widths, (std::vector<double>{50, 25, 15, 5, 4, 1}));
  EXPECT_EQ(weights, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(s.classes().front().lower_q, 0.0);
  EXPECT_EQ(s.classes().back().upper_q, 100.0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    EXPECT_EQ(s.classes()[k].lower_q, s.classes()[k - 1].upper_q);
  }
}

TEST(ClassScheme, RejectsInvalidPartitions) {
  EXPECT_THROW(ClassScheme({}), std::invalid_argument);
  EXPECT_THROW(ClassScheme({{0, 50, 1, ""}, {60, 100, 2, ""}}), std::invalid_argument);
  EXPECT_THROW(ClassScheme({{0, 50, 2, ""}, {50, 100, 2, ""}}), std::invalid_argument);
  EXPECT_THROW(ClassScheme({{5, 100, 1, ""}}), std::invalid_argument);
  EXPECT_THROW(ClassScheme({{0, 99, 1, ""}}), std::invalid_argument);
  EXPECT_THROW(ClassScheme({{0, 100, 0, ""}}), std::invalid_argument);
}

TEST(ClassScheme, ParseAndPrint) {
  const auto s = ClassScheme::parse("0:50:1,50:75:2,75:90:3,90:95:4,95:99:5,99:100:6");
  EXPECT_EQ(s.to_string(), default_pr6_scheme().to_string());
  EXPECT_EQ(ClassScheme::parse("0:90:1,90:100:10").size(), 2u);
  EXPECT_THROW(ClassScheme::parse("0:50"), std::invalid_argument);
  EXPECT_THROW(ClassScheme::parse("0:50:1.5,50:100:2"), std::invalid_argument);
  EXPECT_THROW(ClassScheme::parse("0:x:1"), std::invalid_argument);
}

TEST(AssignClasses, BoundaryRule) {
  const auto s = default_pr6_scheme();
  QuantileAssignment qa{{99.5, 50.0, 49.999, 0.1, 99.0, 98.99, 75.0, 90.0, 95.0}, 9};
  EXPECT_EQ(assign_classes(qa, s).class_index, (std::vector<int>{6, 2, 1, 1, 6, 5, 3, 4, 5}));
}

TEST(AssignClasses, TwoHundredDistinctCounts) {
  // frozen from enumerating q_i = (i - 0.5) / 2, i = 1..200, through oracle::pr6_class
  std::vector<std::int64_t> expect(6, 0);
  for (int i = 1; i <= 200; ++i) ++expect[oracle::pr6_class((i - 0.5) / 2.0) - 1];
  ASSERT_EQ(expect, (std::vector<std::int64_t>{100, 50, 30, 10, 8, 2}));

  std::vector<CitationCount> c(200);
  std::iota(c.begin(), c.end(), 0);
  const auto ca = assign_classes(quantiles(c), default_pr6_scheme());
  EXPECT_EQ(ca.counts(6), expect);
}

TEST(AssignClasses, CountsSumToN) {
  std::mt19937 rng(21);
  const auto scheme = ClassScheme::parse("0:10:1,10:50:2,50:100:7");
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = random_counts(rng, 1 + rng() % 100, 25);
    const auto counts = assign_classes(quantiles(c), scheme).counts(scheme.size());
    EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}),
              static_cast<std::int64_t>(c.size()));
  }
}
