#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citeimpact::csv {

/// One parsed record. `line` is the physical line on which the record began.
struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

/// Comma-delimited reader with RFC-4180 quoting ("" escapes, embedded
/// newlines inside quotes). Accepts LF and CRLF line endings.
class Reader {
public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Returns the next record, or nullopt at end of input.
  /// Throws std::runtime_error on an unterminated quoted field.
  std::optional<Record> next();

private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<Record> read_all(std::istream& in);

/// Quotes a field only when it contains a delimiter, quote, or line break.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

}  // namespace citeimpact::csv
