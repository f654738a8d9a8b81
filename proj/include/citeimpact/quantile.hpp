#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citeimpact/corpus.hpp"

namespace citeimpact {

/// Continuous percentile ranks over a reference set, one per input item in
/// input order. Every q lies strictly inside (0, 100).
struct QuantileAssignment {
  std::vector<double> q;
  std::size_t reference_size = 0;
};

/// Mid-rank (Hazen) percentiles: q_i = 100 * (L_i + 0.5 * E_i) / N.
/// Throws std::invalid_argument on empty input.
QuantileAssignment assign_quantiles(std::span<const CitationCount> citations);

/// Convenience: percentiles over the pooled corpus.
QuantileAssignment assign_quantiles(const Corpus& corpus);

/// Half-open percentile interval [lower_q, upper_q) with its weight.
struct PercentileClass {
  double lower_q = 0.0;
  double upper_q = 0.0;
  int weight = 1;
  std::string label;
};

/// An ordered partition of [0, 100) into weighted classes, bottom first.
class ClassScheme {
public:
  /// Throws std::invalid_argument unless the classes are contiguous, start at
  /// 0, end at 100, and carry strictly increasing weights >= 1.
  explicit ClassScheme(std::vector<PercentileClass> classes);

  const std::vector<PercentileClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

  /// 0-based index of the class containing q; q must lie in [0, 100).
  std::size_t class_of(double q) const;

  /// Parses `lower:upper:weight` triples separated by commas.
  static ClassScheme parse(std::string_view text);

  /// Inverse of parse().
  std::string to_string() const;

private:
  std::vector<PercentileClass> classes_;
};

/// Bottom-50%, 50-75%, 75-90%, 90-95%, 95-99%, top-1%, weighted 1..6.
ClassScheme default_pr6_scheme();

/// Per-item class index, 1-based (1 = bottom class).
struct ClassAssignment {
  std::vector<int> class_index;

  /// Item count per class, bottom first.
  std::vector<std::int64_t> counts(std::size_t n_classes) const;
};

ClassAssignment assign_classes(const QuantileAssignment& assignment, const ClassScheme& scheme);

}  // namespace citeimpact
