#include "citeimpact/rankstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "citeimpact/kernels.hpp"
#include "citeimpact/transform.hpp"

namespace citeimpact {

std::vector<double> mean_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

TauResult kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("kendall_tau_b: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("kendall_tau_b: need at least 2 observations");
  for (double v : x) {
    if (std::isnan(v)) throw std::invalid_argument("kendall_tau_b: NaN in x");
  }
  for (double v : y) {
    if (std::isnan(v)) throw std::invalid_argument("kendall_tau_b: NaN in y");
  }

  const auto rx = mean_ranks(x);
  const auto ry = mean_ranks(y);
  const auto pc = kernels::pair_counts_parallel(rx, ry);

  TauResult r;
  r.n = static_cast<std::int64_t>(x.size());
  r.concordant = pc.concordant;
  r.discordant = pc.discordant;
  r.ties_x = pc.tied_x;
  r.ties_y = pc.tied_y;
  r.ties_xy = pc.tied_xy;
  const double total = static_cast<double>(r.pairs());
  const double denom = std::sqrt((total - static_cast<double>(r.ties_x)) *
                                 (total - static_cast<double>(r.ties_y)));
  r.tau = denom > 0.0 ? static_cast<double>(r.concordant - r.discordant) / denom
                      : std::numeric_limits<double>::quiet_NaN();
  r.p_value = tau_p_value(r);
  r.method = PValueMethod::normal_approximation;
  return r;
}

double tau_p_value(const TauResult& result) {
  if (std::isnan(result.tau)) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(result.n);
  const double s = static_cast<double>(result.concordant - result.discordant);
  const double z = 3.0 * s / std::sqrt(n * (n - 1.0) * (2.0 * n + 5.0) / 2.0);
  // 2 (1 - Phi(|z|)) without cancellation
  return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

double permutation_p_value(std::span<const double> x, std::span<const double> y,
                           std::int64_t permutations, std::uint64_t seed) {
  if (permutations <= 0) throw std::invalid_argument("permutation count must be positive");
  const auto observed = kendall_tau_b(x, y);
  if (std::isnan(observed.tau)) return std::numeric_limits<double>::quiet_NaN();
  // Permuting y keeps both tie structures, so the tau-b denominator is fixed
  // and |tau| >= observed reduces to an integer comparison on |C - D|.
  const std::int64_t s = observed.concordant - observed.discordant;
  const auto rx = mean_ranks(x);
  const auto ry = mean_ranks(y);
  const auto hits =
      kernels::permutation_exceedances_parallel(rx, ry, s < 0 ? -s : s, permutations, seed);
  return static_cast<double>(hits) / static_cast<double>(permutations);
}

TauResult kendall_test(std::span<const double> x, std::span<const double> y,
                       const TestOptions& options) {
  auto r = kendall_tau_b(x, y);
  if (options.method == PValueMethod::permutation) {
    r.p_value = permutation_p_value(x, y, options.permutations, options.seed);
    r.method = PValueMethod::permutation;
  }
  return r;
}

bool CorrelationMatrix::significant(std::size_t i, std::size_t j) const {
  const double p = entry(i, j).p_value;
  return !std::isnan(p) && p < threshold;
}

CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns, double threshold,
                                     const TestOptions& options) {
  if (columns.size() < 2) throw std::invalid_argument("correlation_matrix: need two columns");
  for (const auto& c : columns) {
    if (c.values.size() != columns.front().values.size()) {
      throw std::invalid_argument("correlation_matrix: column '" + c.label +
                                  "' differs in length from '" + columns.front().label + "'");
    }
  }
  CorrelationMatrix m;
  m.threshold = threshold;
  for (const auto& c : columns) m.labels.push_back(c.label);
  m.lower.resize(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      m.lower[i].push_back(kendall_test(columns[i].values, columns[j].values, options));
    }
  }
  return m;
}

}  // namespace citeimpact
