#include "citeimpact/kernels.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "citeimpact/transform.hpp"

namespace citeimpact::kernels {

namespace {

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel inputs differ in length");
}

double midrank(const std::vector<std::int64_t>& sorted, std::int64_t v) {
  const auto lo = std::lower_bound(sorted.begin(), sorted.end(), v);
  const auto hi = std::upper_bound(lo, sorted.end(), v);
  const auto less = static_cast<double>(lo - sorted.begin());
  const auto equal = static_cast<double>(hi - lo);
  // 100 * (2L + E) / 2N keeps the dyadic cases exact
  return 100.0 * (2.0 * less + equal) / (2.0 * static_cast<double>(sorted.size()));
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

std::int64_t s_statistic(std::span<const double> x, std::span<const double> y) {
  std::int64_t s = 0;
  const std::size_t n = x.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) s += sign(x[i] - x[j]) * sign(y[i] - y[j]);
  }
  return s;
}

// Unbiased integer in [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined, this is not.
std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = eng();
  } while (r >= limit);
  return r % bound;
}

std::int64_t block_exceedances(std::span<const double> x, std::span<const double> y,
                               std::int64_t observed_abs_s, std::int64_t count,
                               std::uint64_t seed, std::int64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(block) >> 32)};
  std::mt19937_64 eng(seq);
  std::vector<double> perm(y.begin(), y.end());
  std::int64_t hits = 0;
  for (std::int64_t k = 0; k < count; ++k) {
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[bounded(eng, i)]);
    }
    const std::int64_t s = s_statistic(x, perm);
    if ((s < 0 ? -s : s) >= observed_abs_s) ++hits;
  }
  return hits;
}

}  // namespace

void midrank_percentiles_serial(std::span<const std::int64_t> values, std::span<double> out) {
  check_same_size(values.size(), out.size());
  std::vector<std::int64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = midrank(sorted, values[i]);
}

void midrank_percentiles_parallel(std::span<const std::int64_t> values, std::span<double> out) {
  check_same_size(values.size(), out.size());
  std::vector<std::int64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<std::int64_t>(values.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = midrank(sorted, values[i]);
}

void percent_to_z_serial(std::span<const double> percent, std::span<double> out) {
  check_same_size(percent.size(), out.size());
  for (std::size_t i = 0; i < percent.size(); ++i) out[i] = inv_norm_cdf(percent[i] / 100.0);
}

void percent_to_z_parallel(std::span<const double> percent, std::span<double> out) {
  check_same_size(percent.size(), out.size());
  const auto n = static_cast<std::int64_t>(percent.size());
  // inv_norm_cdf throws only outside (0,1); check up front since exceptions
  // must not escape the parallel region
  for (double p : percent) {
    if (!(p > 0.0 && p < 100.0)) throw std::domain_error("percentile outside (0,100)");
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = inv_norm_cdf(percent[i] / 100.0);
}

PairCounts pair_counts_serial(std::span<const double> x, std::span<const double> y) {
  check_same_size(x.size(), y.size());
  PairCounts pc;
  const std::size_t n = x.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const int sx = sign(x[i] - x[j]);
      const int sy = sign(y[i] - y[j]);
      if (sx == 0) ++pc.tied_x;
      if (sy == 0) ++pc.tied_y;
      if (sx == 0 && sy == 0) ++pc.tied_xy;
      const int prod = sx * sy;
      if (prod > 0) ++pc.concordant;
      else if (prod < 0) ++pc.discordant;
    }
  }
  return pc;
}

PairCounts pair_counts_parallel(std::span<const double> x, std::span<const double> y) {
  check_same_size(x.size(), y.size());
  std::int64_t conc = 0, disc = 0, tx = 0, ty = 0, txy = 0;
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : conc, disc, tx, ty, txy)
  for (std::int64_t i = 1; i < n; ++i) {
    for (std::int64_t j = 0; j < i; ++j) {
      const int sx = sign(x[i] - x[j]);
      const int sy = sign(y[i] - y[j]);
      tx += (sx == 0);
      ty += (sy == 0);
      txy += (sx == 0 && sy == 0);
      const int prod = sx * sy;
      conc += (prod > 0);
      disc += (prod < 0);
    }
  }
  return {conc, disc, tx, ty, txy};
}

std::int64_t permutation_exceedances_serial(std::span<const double> x, std::span<const double> y,
                                            std::int64_t observed_abs_s, std::int64_t permutations,
                                            std::uint64_t seed) {
  check_same_size(x.size(), y.size());
  std::int64_t hits = 0;
  const std::int64_t blocks = (permutations + kPermutationBlock - 1) / kPermutationBlock;
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t count = std::min(kPermutationBlock, permutations - b * kPermutationBlock);
    hits += block_exceedances(x, y, observed_abs_s, count, seed, b);
  }
  return hits;
}

std::int64_t permutation_exceedances_parallel(std::span<const double> x, std::span<const double> y,
                                              std::int64_t observed_abs_s,
                                              std::int64_t permutations, std::uint64_t seed) {
  check_same_size(x.size(), y.size());
  std::int64_t hits = 0;
  const std::int64_t blocks = (permutations + kPermutationBlock - 1) / kPermutationBlock;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t count = std::min(kPermutationBlock, permutations - b * kPermutationBlock);
    hits += block_exceedances(x, y, observed_abs_s, count, seed, b);
  }
  return hits;
}

}  // namespace citeimpact::kernels
