#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace citeimpact {

enum class PValueMethod { normal_approximation, permutation };

/// Kendall tau-b with exact pair counts. `ties_x` / `ties_y` count every pair
/// tied in that coordinate (joint ties included, also reported in `ties_xy`).
struct TauResult {
  double tau = 0.0;
  std::int64_t n = 0;
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t ties_x = 0;
  std::int64_t ties_y = 0;
  std::int64_t ties_xy = 0;
  double p_value = 1.0;
  PValueMethod method = PValueMethod::normal_approximation;

  std::int64_t pairs() const noexcept { return n * (n - 1) / 2; }
};

/// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> mean_ranks(std::span<const double> values);

/// tau_b = (C - D) / sqrt((T - ties_x)(T - ties_y)), T = n(n-1)/2. Computed
/// on mean ranks, so raw values and ranks are interchangeable. When either
/// input is constant the denominator vanishes and tau is NaN.
/// Throws std::invalid_argument on length mismatch or n < 2.
/// p_value is filled with the normal approximation.
TauResult kendall_tau_b(std::span<const double> x, std::span<const double> y);

/// Two-sided normal approximation, z = 3(C - D) / sqrt(n(n-1)(2n+5)/2).
double tau_p_value(const TauResult& result);

/// Two-sided Monte-Carlo p: share of seeded random permutations of y whose
/// |C - D| reaches the observed one.
double permutation_p_value(std::span<const double> x, std::span<const double> y,
                           std::int64_t permutations, std::uint64_t seed);

struct TestOptions {
  PValueMethod method = PValueMethod::normal_approximation;
  std::int64_t permutations = 100000;
  std::uint64_t seed = 20120101;
};

/// kendall_tau_b with p_value and method set per `options`.
TauResult kendall_test(std::span<const double> x, std::span<const double> y,
                       const TestOptions& options = {});

struct NamedColumn {
  std::string label;
  std::vector<double> values;
};

/// Lower triangle of pairwise tau-b. entry(i, j) is defined for j < i.
struct CorrelationMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<TauResult>> lower;  // lower[i] has i entries
  double threshold = 0.01;

  const TauResult& entry(std::size_t i, std::size_t j) const { return lower.at(i).at(j); }
  bool significant(std::size_t i, std::size_t j) const;
};

/// Throws std::invalid_argument on unequal column lengths or fewer than two
/// columns.
CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns, double threshold,
                                     const TestOptions& options = {});

}  // namespace citeimpact
