#include "citeimpact/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "citeimpact/csv.hpp"

namespace citeimpact {

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string msg;
  for (const auto& d : diagnostics) {
    if (!msg.empty()) msg.push_back('\n');
    msg += to_string(d);
  }
  return msg;
}

template <typename Int>
bool parse_int(const std::string& text, Int& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = first + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

void validate(const std::vector<ArticleRecord>& records, const std::vector<std::size_t>& rows,
              const std::set<Year>& window, std::vector<Diagnostic>& diags) {
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::size_t row = rows[i];
    if (r.article_id.empty()) {
      diags.push_back({row, "article_id", "empty article_id"});
    } else if (!seen.insert(r.article_id).second) {
      diags.push_back({row, "article_id", "duplicate article_id '" + r.article_id + "'"});
    }
    if (r.group_key.empty()) diags.push_back({row, "group", "empty group"});
    if (r.doc_type.empty()) diags.push_back({row, "doc_type", "empty doc_type"});
    if (r.citations < 0) diags.push_back({row, "citations", "negative citation count"});
    if (!window.contains(r.pub_year)) outside.push_back(row);
  }
  if (!outside.empty()) {
    std::string list;
    for (auto row : outside) {
      if (!list.empty()) list += ' ';
      list += std::to_string(row);
    }
    for (auto row : outside) {
      diags.push_back({row, "pub_year", "publication year outside window (offending rows: " + list + ")"});
    }
  }
}

}  // namespace

std::string to_string(const Diagnostic& d) {
  return "row:" + std::to_string(d.row) + " col:" + d.column + " " + d.message;
}

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Corpus Corpus::create(std::vector<ArticleRecord> records, Year census_year,
                      std::set<Year> pub_window) {
  std::vector<std::size_t> rows(records.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i + 1;
  std::vector<Diagnostic> diags;
  validate(records, rows, pub_window, diags);
  if (!diags.empty()) throw ValidationError(std::move(diags));
  return Corpus(std::move(records), census_year, std::move(pub_window));
}

std::vector<CitationCount> Corpus::citations() const {
  std::vector<CitationCount> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.citations);
  return out;
}

Corpus parse_csv(std::istream& in, Year census_year, const std::set<Year>& pub_window) {
  csv::Reader reader(in);
  std::vector<Diagnostic> diags;

  std::optional<csv::Record> header;
  try {
    header = reader.next();
  } catch (const std::runtime_error& e) {
    throw ValidationError({{1, "header", e.what()}});
  }
  if (!header || csv::join(header->fields) != kCorpusHeader) {
    throw ValidationError(
        {{1, "header", std::string("malformed header, expected '") + kCorpusHeader + "'"}});
  }

  static const char* const kColumns[] = {"article_id", "group", "pub_year", "doc_type", "citations"};
  std::vector<ArticleRecord> records;
  std::vector<std::size_t> rows;
  std::size_t row = 1;
  while (true) {
    std::optional<csv::Record> rec;
    try {
      rec = reader.next();
    } catch (const std::runtime_error& e) {
      diags.push_back({row + 1, "article_id", e.what()});
      break;
    }
    if (!rec) break;
    ++row;
    if (rec->fields.size() == 1 && rec->fields[0].empty()) continue;  // blank line
    if (rec->fields.size() != 5) {
      diags.push_back({row, kColumns[std::min<std::size_t>(rec->fields.size(), 4)],
                       "expected 5 fields, found " + std::to_string(rec->fields.size())});
      continue;
    }
    ArticleRecord r;
    r.article_id = rec->fields[0];
    r.group_key = rec->fields[1];
    r.doc_type = rec->fields[3];
    bool ok = true;
    if (!parse_int(rec->fields[2], r.pub_year)) {
      diags.push_back({row, "pub_year", "not an integer: '" + rec->fields[2] + "'"});
      ok = false;
    }
    if (!parse_int(rec->fields[4], r.citations)) {
      diags.push_back({row, "citations", "not an integer: '" + rec->fields[4] + "'"});
      ok = false;
    }
    if (!ok) continue;
    records.push_back(std::move(r));
    rows.push_back(row);
  }

  validate(records, rows, pub_window, diags);
  if (!diags.empty()) throw ValidationError(std::move(diags));
  return Corpus::create(std::move(records), census_year, pub_window);
}

void write_csv(std::ostream& out, const Corpus& corpus) {
  out << kCorpusHeader << '\n';
  for (const auto& r : corpus.records()) {
    out << csv::join({r.article_id, r.group_key, std::to_string(r.pub_year), r.doc_type,
                      std::to_string(r.citations)})
        << '\n';
  }
}

std::map<std::string, GroupSize> group_sizes(const Corpus& corpus) {
  std::map<std::string, GroupSize> out;
  for (const auto& r : corpus.records()) {
    auto& g = out[r.group_key];
    ++g.n_pub;
    g.n_cit += r.citations;
  }
  return out;
}

}  // namespace citeimpact
