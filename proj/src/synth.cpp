#include "citeimpact/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "citeimpact/transform.hpp"

namespace citeimpact::synth {

namespace {

CitationCount round_half_away(double v) { return static_cast<CitationCount>(std::llround(v)); }

CitationCount negbin_quantile(const NegativeBinomial& nb, double u) {
  // pmf(0) = p^r; pmf(k) = pmf(k-1) * (k - 1 + r) / k * (1 - p)
  double pmf = std::pow(nb.p, nb.r);
  double cdf = pmf;
  CitationCount k = 0;
  while (cdf < u) {
    ++k;
    pmf *= (static_cast<double>(k) - 1.0 + nb.r) / static_cast<double>(k) * (1.0 - nb.p);
    cdf += pmf;
    if (pmf == 0.0 && cdf < u) break;  // u beyond representable tail mass
  }
  return k;
}

}  // namespace

CitationCount draw_citations(const Distribution& dist, double u) {
  if (const auto* ln = std::get_if<LogNormal>(&dist)) {
    return round_half_away(std::exp(ln->mu + ln->sigma * inv_norm_cdf(u)));
  }
  return negbin_quantile(std::get<NegativeBinomial>(dist), u);
}

void validate(const SynthSpec& spec) {
  if (spec.n_groups < 1) throw std::invalid_argument("synth: n_groups must be >= 1");
  if (spec.articles_per_group.size() != 1 && spec.articles_per_group.size() != spec.n_groups) {
    throw std::invalid_argument("synth: articles_per_group needs 1 or n_groups entries");
  }
  for (auto n : spec.articles_per_group) {
    if (n < 1) throw std::invalid_argument("synth: every group needs at least one article");
  }
  if (spec.doc_type_mix.empty()) throw std::invalid_argument("synth: empty doc_type_mix");
  double total = 0.0;
  for (const auto& [label, share] : spec.doc_type_mix) {
    if (label.empty()) throw std::invalid_argument("synth: empty doc_type label");
    if (!(share >= 0.0)) throw std::invalid_argument("synth: negative doc_type proportion");
    total += share;
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("synth: doc_type proportions must sum to 1");
  }
  if (const auto* ln = std::get_if<LogNormal>(&spec.distribution)) {
    if (!(ln->sigma > 0.0) || !std::isfinite(ln->mu)) {
      throw std::invalid_argument("synth: lognormal needs finite mu and sigma > 0");
    }
  } else {
    const auto& nb = std::get<NegativeBinomial>(spec.distribution);
    if (!(nb.r > 0.0) || !(nb.p > 0.0 && nb.p <= 1.0)) {
      throw std::invalid_argument("synth: negative binomial needs r > 0 and 0 < p <= 1");
    }
  }
  if (spec.pub_window.empty()) throw std::invalid_argument("synth: empty publication window");
  if (spec.outlier) {
    if (spec.outlier->group >= spec.n_groups) throw std::invalid_argument("synth: outlier group out of range");
    if (spec.outlier->citations < 0) throw std::invalid_argument("synth: negative outlier count");
  }
}

std::string group_label(std::size_t index, std::size_t n_groups) {
  const auto width = std::to_string(n_groups).size() < 2 ? 2 : std::to_string(n_groups).size();
  auto digits = std::to_string(index + 1);
  return "G" + std::string(width - digits.size(), '0') + digits;
}

Corpus generate(const SynthSpec& spec) {
  validate(spec);
  UniformStream stream(spec.seed);
  const std::vector<Year> years(spec.pub_window.begin(), spec.pub_window.end());

  std::vector<ArticleRecord> records;
  std::size_t outlier_index = 0;
  for (std::size_t g = 0; g < spec.n_groups; ++g) {
    const auto n = spec.articles_per_group.size() == 1 ? spec.articles_per_group[0]
                                                       : spec.articles_per_group[g];
    const auto label = group_label(g, spec.n_groups);
    const std::size_t first = records.size();
    for (std::int64_t i = 0; i < n; ++i) {
      ArticleRecord r;
      r.article_id = label + "-" + std::to_string(i + 1);
      r.group_key = label;
      r.pub_year = years[static_cast<std::size_t>(i) % years.size()];
      r.citations = draw_citations(spec.distribution, stream.next());
      const double u = stream.next();
      double cumulative = 0.0;
      r.doc_type = spec.doc_type_mix.rbegin()->first;
      for (const auto& [doc_type, share] : spec.doc_type_mix) {
        cumulative += share;
        if (u < cumulative) {
          r.doc_type = doc_type;
          break;
        }
      }
      records.push_back(std::move(r));
    }
    if (spec.outlier && spec.outlier->group == g) {
      outlier_index = first;
      for (std::size_t k = first; k < records.size(); ++k) {
        if (records[k].citations > records[outlier_index].citations) outlier_index = k;
      }
    }
  }
  if (spec.outlier) records[outlier_index].citations = spec.outlier->citations;
  return Corpus::create(std::move(records), spec.census_year, spec.pub_window);
}

}  // namespace citeimpact::synth
