#include "citeimpact/indicators.hpp"

#include <algorithm>
#include <functional>

namespace citeimpact {

namespace {

// Indices of the group's records; throws UnknownGroupError when none.
std::vector<std::size_t> members_of(const Corpus& corpus, const std::string& group) {
  std::vector<std::size_t> out;
  const auto& records = corpus.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].group_key == group) out.push_back(i);
  }
  if (out.empty()) throw UnknownGroupError(group);
  return out;
}

void check_aligned(std::size_t n, const Corpus& corpus) {
  if (n != corpus.size()) throw std::invalid_argument("assignment does not match corpus size");
}

double mean_over(const std::vector<double>& values, const std::vector<std::size_t>& members) {
  double sum = 0.0;
  for (auto i : members) sum += values[i];
  return sum / static_cast<double>(members.size());
}

double sum_over(const std::vector<double>& values, const std::vector<std::size_t>& members) {
  double sum = 0.0;
  for (auto i : members) sum += values[i];
  return sum;
}

double weighted_classes(const ClassAssignment& classes, const ClassScheme& scheme,
                        const std::vector<std::size_t>& members) {
  double total = 0.0;
  for (auto i : members) {
    total += scheme.classes().at(static_cast<std::size_t>(classes.class_index[i] - 1)).weight;
  }
  return total;
}

}  // namespace

double jif(CitationCount n_cit, std::int64_t n_pub) {
  if (n_pub <= 0) throw std::invalid_argument("jif: zero publications");
  return static_cast<double>(n_cit) / static_cast<double>(n_pub);
}

double jif_z(const Corpus& corpus, const ZAssignment& z, const std::string& group) {
  check_aligned(z.z.size(), corpus);
  return mean_over(z.z, members_of(corpus, group));
}

double cjif_z(const Corpus& corpus, const std::string& group) {
  const auto members = members_of(corpus, group);
  return mean_over(stratified_mccall_z(corpus).z, members);
}

double i3(const QuantileAssignment& assignment, const Corpus& corpus, const std::string& group) {
  check_aligned(assignment.q.size(), corpus);
  return sum_over(assignment.q, members_of(corpus, group));
}

double pr6(const ClassAssignment& classes, const ClassScheme& scheme, const Corpus& corpus,
           const std::string& group) {
  check_aligned(classes.class_index.size(), corpus);
  return weighted_classes(classes, scheme, members_of(corpus, group));
}

std::map<std::string, double> percent_shares(const std::map<std::string, double>& values) {
  double total = 0.0;
  for (const auto& [g, v] : values) {
    if (v < 0.0) throw std::invalid_argument("percent_shares: negative value for '" + g + "'");
    total += v;
  }
  if (!(total > 0.0)) throw std::invalid_argument("percent_shares: values sum to zero");
  std::map<std::string, double> out;
  for (const auto& [g, v] : values) out[g] = v * 100.0 / total;
  return out;
}

std::map<std::string, int> rank_column(const std::map<std::string, double>& values) {
  std::map<std::string, int> out;
  for (const auto& [g, v] : values) {
    int higher = 0;
    for (const auto& [h, w] : values) higher += (w > v);
    out[g] = higher + 1;
  }
  return out;
}

const IndicatorRow& IndicatorTable::row(const std::string& group) const {
  for (const auto& r : rows) {
    if (r.group == group) return r;
  }
  throw UnknownGroupError(group);
}

IndicatorTable indicator_table(const Corpus& corpus, const ClassScheme& scheme) {
  if (corpus.empty()) throw std::invalid_argument("indicator_table: empty corpus");

  const auto quantiles = assign_quantiles(corpus);
  const auto classes = assign_classes(quantiles, scheme);
  const auto z = mccall_z(quantiles);
  const auto cz = stratified_mccall_z(corpus);

  std::map<std::string, std::vector<std::size_t>> members;
  const auto& records = corpus.records();
  for (std::size_t i = 0; i < records.size(); ++i) members[records[i].group_key].push_back(i);

  IndicatorTable table;
  for (const auto& c : scheme.classes()) table.class_labels.push_back(c.label);

  std::map<std::string, double> i3_vals, pr6_vals;
  for (const auto& [group, idx] : members) {
    IndicatorRow row;
    row.group = group;
    row.n_pub = static_cast<std::int64_t>(idx.size());
    for (auto i : idx) row.n_cit += records[i].citations;
    row.jif = jif(row.n_cit, row.n_pub);
    row.jif_z = mean_over(z.z, idx);
    row.cjif_z = mean_over(cz.z, idx);
    row.i3 = sum_over(quantiles.q, idx);
    row.pr6 = weighted_classes(classes, scheme, idx);
    i3_vals[group] = row.i3;
    pr6_vals[group] = row.pr6;
    table.rows.push_back(std::move(row));
  }

  const auto pct_i3 = percent_shares(i3_vals);
  const auto pct_pr6 = percent_shares(pr6_vals);

  auto ranks_of = [&](std::function<double(const IndicatorRow&)> get) {
    std::map<std::string, double> col;
    for (const auto& r : table.rows) col[r.group] = get(r);
    return rank_column(col);
  };
  const auto r_pub = ranks_of([](const IndicatorRow& r) { return static_cast<double>(r.n_pub); });
  const auto r_cit = ranks_of([](const IndicatorRow& r) { return static_cast<double>(r.n_cit); });
  const auto r_jif = ranks_of([](const IndicatorRow& r) { return r.jif; });
  const auto r_jz = ranks_of([](const IndicatorRow& r) { return r.jif_z; });
  const auto r_cjz = ranks_of([](const IndicatorRow& r) { return r.cjif_z; });
  const auto r_i3 = rank_column(i3_vals);
  const auto r_pr6 = rank_column(pr6_vals);

  for (auto& r : table.rows) {
    r.pct_i3 = pct_i3.at(r.group);
    r.pct_pr6 = pct_pr6.at(r.group);
    r.rank = {r_pub.at(r.group), r_cit.at(r.group), r_jif.at(r.group), r_jz.at(r.group),
              r_cjz.at(r.group), r_i3.at(r.group), r_pr6.at(r.group)};
  }

  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const IndicatorRow& a, const IndicatorRow& b) { return a.jif > b.jif; });
  return table;
}

}  // namespace citeimpact
