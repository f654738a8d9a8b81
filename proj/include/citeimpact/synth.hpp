#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "citeimpact/corpus.hpp"

namespace citeimpact::synth {

struct LogNormal {
  double mu = 0.5;
  double sigma = 1.2;
};

/// Failures before the r-th success, success probability p.
struct NegativeBinomial {
  double r = 1.0;
  double p = 0.5;
};

using Distribution = std::variant<LogNormal, NegativeBinomial>;

struct Outlier {
  std::size_t group = 0;
  CitationCount citations = 0;
};

struct SynthSpec {
  std::size_t n_groups = 1;
  /// One entry per group, or a single entry applied to every group.
  std::vector<std::int64_t> articles_per_group{100};
  Distribution distribution = LogNormal{};
  std::map<std::string, double> doc_type_mix{{"article", 1.0}};
  std::optional<Outlier> outlier;
  std::uint64_t seed = 1;
  Year census_year = 2010;
  std::set<Year> pub_window{2008, 2009};
};

/// Uniform deviates on the open interval (0, 1) from mt19937_64: the top
/// 53 bits plus one half, scaled by 2^-53.
class UniformStream {
public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  double next() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

private:
  std::mt19937_64 engine_;
};

/// Inverse-CDF draw of a citation count for uniform u in (0, 1).
CitationCount draw_citations(const Distribution& dist, double u);

/// Throws std::invalid_argument on an invalid spec.
void validate(const SynthSpec& spec);

/// Deterministic for a given spec. Groups are labelled G01, G02, ...;
/// article ids are `<group>-<index>`. For each article the stream yields one
/// uniform for the citation count, then one for the document type.
/// An outlier replaces the citation count of its group's current maximum.
Corpus generate(const SynthSpec& spec);

std::string group_label(std::size_t index, std::size_t n_groups);

}  // namespace citeimpact::synth
