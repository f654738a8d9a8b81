#include "citeimpact/csv.hpp"

#include <stdexcept>

namespace citeimpact::csv {

std::optional<Record> Reader::next() {
  Record rec;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  bool field_was_quoted = false;
  char c;

  while (in_.get(c)) {
    if (!any) {
      any = true;
      ++line_;
      rec.line = line_;
    }
    if (in_quotes) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_was_quoted) {
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == ',') {
      rec.fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (c == '\r' && in_.peek() == '\n') {
      // swallowed; the '\n' ends the record
    } else if (c == '\n') {
      rec.fields.push_back(std::move(field));
      return rec;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw std::runtime_error("unterminated quoted field starting on line " +
                             std::to_string(rec.line));
  }
  if (!any) return std::nullopt;
  rec.fields.push_back(std::move(field));
  return rec;
}

std::vector<Record> read_all(std::istream& in) {
  Reader reader(in);
  std::vector<Record> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += escape(fields[i]);
  }
  return out;
}

}  // namespace citeimpact::csv
