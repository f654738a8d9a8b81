#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "citeimpact/corpus.hpp"
#include "citeimpact/quantile.hpp"
#include "citeimpact/transform.hpp"

namespace citeimpact {

class UnknownGroupError : public std::invalid_argument {
public:
  explicit UnknownGroupError(const std::string& group)
      : std::invalid_argument("unknown group '" + group + "'") {}
};

/// Citations per item. Throws std::invalid_argument when n_pub == 0.
double jif(CitationCount n_cit, std::int64_t n_pub);

/// Mean pooled z over the group's articles.
double jif_z(const Corpus& corpus, const ZAssignment& z, const std::string& group);

/// Mean document-type-stratified z over the group's articles.
double cjif_z(const Corpus& corpus, const std::string& group);

/// Sum of the group's pooled percentiles.
double i3(const QuantileAssignment& assignment, const Corpus& corpus, const std::string& group);

/// Weighted count of the group's articles per percentile class.
double pr6(const ClassAssignment& classes, const ClassScheme& scheme, const Corpus& corpus,
           const std::string& group);

/// value * 100 / sum. Throws std::invalid_argument on negative values or a
/// zero total.
std::map<std::string, double> percent_shares(const std::map<std::string, double>& values);

/// Competition ranking, largest value first; ties share the smallest rank.
std::map<std::string, int> rank_column(const std::map<std::string, double>& values);

struct IndicatorRanks {
  int n_pub = 0;
  int n_cit = 0;
  int jif = 0;
  int jif_z = 0;
  int cjif_z = 0;
  int i3 = 0;
  int pr6 = 0;
};

struct IndicatorRow {
  std::string group;
  std::int64_t n_pub = 0;
  CitationCount n_cit = 0;
  double jif = 0.0;
  double jif_z = 0.0;
  double cjif_z = 0.0;
  double i3 = 0.0;
  double pct_i3 = 0.0;
  double pr6 = 0.0;
  double pct_pr6 = 0.0;
  IndicatorRanks rank;
};

/// One row per group, ordered by descending JIF (ties by group key).
struct IndicatorTable {
  std::vector<IndicatorRow> rows;
  std::vector<std::string> class_labels;

  const IndicatorRow& row(const std::string& group) const;
};

/// Every indicator and rank column over the pooled corpus.
/// Throws std::invalid_argument on an empty corpus.
IndicatorTable indicator_table(const Corpus& corpus, const ClassScheme& scheme);

}  // namespace citeimpact
