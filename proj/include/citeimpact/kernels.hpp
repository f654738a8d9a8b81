#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP variant; both must produce bit-identical results, which the kernel
// tests assert. Library code calls the parallel variants.

#include <cstdint>
#include <span>
#include <vector>

namespace citeimpact::kernels {

/// Mid-rank percentile q_i = 100 * (L_i + E_i / 2) / N, where L_i counts
/// strictly smaller values and E_i counts equal values (item i included).
/// `out` must have the same length as `values`.
void midrank_percentiles_serial(std::span<const std::int64_t> values, std::span<double> out);
void midrank_percentiles_parallel(std::span<const std::int64_t> values, std::span<double> out);

/// out_i = inv_norm_cdf(percent_i / 100).
void percent_to_z_serial(std::span<const double> percent, std::span<double> out);
void percent_to_z_parallel(std::span<const double> percent, std::span<double> out);

/// Exact pair classification over all n(n-1)/2 pairs. `tied_x` and `tied_y`
/// include pairs tied in both coordinates, which are also counted in `tied_xy`.
struct PairCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t tied_x = 0;
  std::int64_t tied_y = 0;
  std::int64_t tied_xy = 0;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

PairCounts pair_counts_serial(std::span<const double> x, std::span<const double> y);
PairCounts pair_counts_parallel(std::span<const double> x, std::span<const double> y);

/// Number of random permutations of `y` whose |C - D| against `x` is at least
/// `observed_abs_s`. Permutations are drawn in fixed-size blocks, each with
/// its own generator derived from (seed, block index), so the count does not
/// depend on thread scheduling.
std::int64_t permutation_exceedances_serial(std::span<const double> x, std::span<const double> y,
                                            std::int64_t observed_abs_s, std::int64_t permutations,
                                            std::uint64_t seed);
std::int64_t permutation_exceedances_parallel(std::span<const double> x, std::span<const double> y,
                                              std::int64_t observed_abs_s,
                                              std::int64_t permutations, std::uint64_t seed);

inline constexpr std::int64_t kPermutationBlock = 1024;

}  // namespace citeimpact::kernels
