#pragma once

#include <vector>

#include "citeimpact/corpus.hpp"
#include "citeimpact/quantile.hpp"

namespace citeimpact {

/// Inverse of the standard normal CDF. Wichura's AS 241 rational
/// approximation (about 1e-16 relative accuracy). Throws std::domain_error
/// unless 0 < p < 1.
double inv_norm_cdf(double p);

/// Standard normal CDF, via erfc.
double norm_cdf(double x);

enum class Stratification { none, by_doc_type };

/// Per-article standard-normal deviates, in corpus/input order.
struct ZAssignment {
  std::vector<double> z;
  Stratification stratification = Stratification::none;
};

/// Area transformation of pooled percentiles: z_i = inv_norm_cdf(q_i / 100).
ZAssignment mccall_z(const QuantileAssignment& assignment);

/// Area transformation within each document-type stratum. A stratum holding a
/// single article gives q = 50, z = 0.
ZAssignment stratified_mccall_z(const Corpus& corpus);

/// Percentiles used by stratified_mccall_z, exposed for output.
QuantileAssignment stratified_quantiles(const Corpus& corpus);

/// McCall's T score.
inline double t_score(double z) { return 50.0 + 10.0 * z; }

}  // namespace citeimpact
