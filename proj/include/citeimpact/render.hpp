#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "citeimpact/indicators.hpp"
#include "citeimpact/rankstats.hpp"

namespace citeimpact {

enum class Format { csv, markdown };

/// Two decimals, half away from zero; negative zero prints as 0.00.
std::string format_display(double v);

/// Shortest round-trippable representation (%.17g).
std::string format_exact(double v);

/// Markdown follows the column order of the published journal table with
/// "value [rank]" cells; CSV carries every value at full precision plus one
/// `<column>_rank` column per ranked indicator.
std::string render_table(const IndicatorTable& table, Format format);

/// Markdown is the lower triangle with "⁺" appended to entries whose p-value
/// falls below the threshold; CSV lists one line per pair.
std::string render_table(const CorrelationMatrix& matrix, Format format);

/// A columns file: header row, first column holds the group label, remaining
/// columns numeric.
struct ColumnsTable {
  std::vector<std::string> groups;
  std::vector<NamedColumn> columns;
};

/// Throws ValidationError (row/column diagnostics) on malformed input.
ColumnsTable read_columns(std::istream& in);

/// Selects columns by label, in the requested order; empty selection keeps
/// all. Columns ending in "_rank" hold display ranks (1 = best) and are
/// negated so that larger means better, like every other column.
/// Throws std::invalid_argument on an unknown label.
std::vector<NamedColumn> correlation_inputs(const ColumnsTable& table,
                                            const std::vector<std::string>& selection);

}  // namespace citeimpact
