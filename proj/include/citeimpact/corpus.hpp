#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace citeimpact {

using Year = int;
using CitationCount = std::int64_t;

/// One published item and the citations it received in the census year.
struct ArticleRecord {
  std::string article_id;
  std::string group_key;
  Year pub_year = 0;
  std::string doc_type;
  CitationCount citations = 0;

  friend bool operator==(const ArticleRecord&, const ArticleRecord&) = default;
};

/// A single validation finding. `row` is the physical CSV record number
/// (header is row 1) or, for in-memory construction, the 1-based record index.
struct Diagnostic {
  std::size_t row = 0;
  std::string column;
  std::string message;
};

/// Formats as `row:<n> col:<name> <message>`.
std::string to_string(const Diagnostic& d);

/// Raised when input data fails validation. Carries every finding, not just
/// the first.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
  std::vector<Diagnostic> diagnostics_;
};

/// The validated percentile reference set. Immutable once built; records keep
/// input order.
class Corpus {
public:
  /// Validates and takes ownership of `records`. Throws ValidationError.
  static Corpus create(std::vector<ArticleRecord> records, Year census_year,
                       std::set<Year> pub_window);

  const std::vector<ArticleRecord>& records() const noexcept { return records_; }
  Year census_year() const noexcept { return census_year_; }
  const std::set<Year>& pub_window() const noexcept { return pub_window_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// Citation counts in record order.
  std::vector<CitationCount> citations() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;

private:
  Corpus(std::vector<ArticleRecord> records, Year census_year, std::set<Year> window)
      : records_(std::move(records)), census_year_(census_year), pub_window_(std::move(window)) {}

  std::vector<ArticleRecord> records_;
  Year census_year_ = 0;
  std::set<Year> pub_window_;
};

inline constexpr const char* kCorpusHeader = "article_id,group,pub_year,doc_type,citations";

/// Reads the corpus CSV. The header must match kCorpusHeader exactly.
/// Throws ValidationError listing every offending row and column.
Corpus parse_csv(std::istream& in, Year census_year, const std::set<Year>& pub_window);

void write_csv(std::ostream& out, const Corpus& corpus);

struct GroupSize {
  std::int64_t n_pub = 0;
  CitationCount n_cit = 0;

  friend bool operator==(const GroupSize&, const GroupSize&) = default;
};

std::map<std::string, GroupSize> group_sizes(const Corpus& corpus);

}  // namespace citeimpact
