#include "citeimpact/quantile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "citeimpact/kernels.hpp"

namespace citeimpact {

QuantileAssignment assign_quantiles(std::span<const CitationCount> citations) {
  if (citations.empty()) throw std::invalid_argument("assign_quantiles: empty reference set");
  QuantileAssignment out;
  out.reference_size = citations.size();
  out.q.resize(citations.size());
  kernels::midrank_percentiles_parallel(citations, out.q);
  return out;
}

QuantileAssignment assign_quantiles(const Corpus& corpus) {
  const auto c = corpus.citations();
  return assign_quantiles(std::span<const CitationCount>(c));
}

ClassScheme::ClassScheme(std::vector<PercentileClass> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("class scheme has no classes");
  if (classes_.front().lower_q != 0.0) {
    throw std::invalid_argument("class scheme must start at 0");
  }
  if (classes_.back().upper_q != 100.0) {
    throw std::invalid_argument("class scheme must end at 100");
  }
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const auto& c = classes_[k];
    if (!(c.lower_q < c.upper_q)) throw std::invalid_argument("class interval is empty");
    if (c.weight < 1) throw std::invalid_argument("class weight must be >= 1");
    if (k > 0) {
      if (c.lower_q != classes_[k - 1].upper_q) {
        throw std::invalid_argument("class intervals are not contiguous");
      }
      if (c.weight <= classes_[k - 1].weight) {
        throw std::invalid_argument("class weights must be strictly increasing");
      }
    }
  }
}

std::size_t ClassScheme::class_of(double q) const {
  if (!(q >= 0.0 && q < 100.0)) throw std::domain_error("percentile outside [0,100)");
  // lower-inclusive, upper-exclusive
  std::size_t k = 0;
  while (k + 1 < classes_.size() && q >= classes_[k].upper_q) ++k;
  return k;
}

namespace {

double parse_number(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad number in class scheme: '" + std::string(s) + "'");
  }
  return v;
}

std::string format_bound(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

ClassScheme ClassScheme::parse(std::string_view text) {
  std::vector<PercentileClass> classes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto triple = text.substr(pos, comma - pos);
    const auto c1 = triple.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : triple.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw std::invalid_argument("class scheme entry must be lower:upper:weight, got '" +
                                  std::string(triple) + "'");
    }
    PercentileClass c;
    c.lower_q = parse_number(triple.substr(0, c1));
    c.upper_q = parse_number(triple.substr(c1 + 1, c2 - c1 - 1));
    const double w = parse_number(triple.substr(c2 + 1));
    if (w != std::floor(w)) throw std::invalid_argument("class weight must be an integer");
    c.weight = static_cast<int>(w);
    c.label = format_bound(c.lower_q) + "-" + format_bound(c.upper_q) + "%";
    classes.push_back(std::move(c));
    pos = comma + 1;
  }
  return ClassScheme(std::move(classes));
}

std::string ClassScheme::to_string() const {
  std::string out;
  for (const auto& c : classes_) {
    if (!out.empty()) out.push_back(',');
    out += format_bound(c.lower_q) + ":" + format_bound(c.upper_q) + ":" + std::to_string(c.weight);
  }
  return out;
}

ClassScheme default_pr6_scheme() {
  return ClassScheme({
      {0.0, 50.0, 1, "bottom-50%"},
      {50.0, 75.0, 2, "50-75%"},
      {75.0, 90.0, 3, "75-90%"},
      {90.0, 95.0, 4, "90-95%"},
      {95.0, 99.0, 5, "95-99%"},
      {99.0, 100.0, 6, "top-1%"},
  });
}

std::vector<std::int64_t> ClassAssignment::counts(std::size_t n_classes) const {
  std::vector<std::int64_t> out(n_classes, 0);
  for (int k : class_index) ++out.at(static_cast<std::size_t>(k - 1));
  return out;
}

ClassAssignment assign_classes(const QuantileAssignment& assignment, const ClassScheme& scheme) {
  ClassAssignment out;
  out.class_index.reserve(assignment.q.size());
  for (double q : assignment.q) out.class_index.push_back(static_cast<int>(scheme.class_of(q)) + 1);
  return out;
}

}  // namespace citeimpact
