#include "citeimpact/render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "citeimpact/csv.hpp"

namespace citeimpact {

std::string format_display(double v) {
  if (std::isnan(v)) return "NA";
  // nudge so that binary representations of x.xx5 round away from zero
  double scaled = std::round(v * 100.0 * (1.0 + 1e-12));
  if (scaled == 0.0) scaled = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", scaled / 100.0);
  return buf;
}

std::string format_exact(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string bracket(double v, int rank) { return format_display(v) + " [" + std::to_string(rank) + "]"; }

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

}  // namespace

std::string render_table(const IndicatorTable& table, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "group,n_pub,n_cit,sc_jif,jif_z,cjif_z,i3,pct_i3,pr6,pct_pr6,"
           "n_pub_rank,n_cit_rank,sc_jif_rank,jif_z_rank,cjif_z_rank,i3_rank,pr6_rank\n";
    for (const auto& r : table.rows) {
      out << csv::join({r.group, std::to_string(r.n_pub), std::to_string(r.n_cit),
                        format_exact(r.jif), format_exact(r.jif_z), format_exact(r.cjif_z),
                        format_exact(r.i3), format_exact(r.pct_i3), format_exact(r.pr6),
                        format_exact(r.pct_pr6), std::to_string(r.rank.n_pub),
                        std::to_string(r.rank.n_cit), std::to_string(r.rank.jif),
                        std::to_string(r.rank.jif_z), std::to_string(r.rank.cjif_z),
                        std::to_string(r.rank.i3), std::to_string(r.rank.pr6)})
          << '\n';
    }
    return out.str();
  }
  out << md_row({"Group", "N Pub", "N Cit", "SC JIF", "JIF_z", "cJIF_z", "%I3", "%PR6"});
  out << "|---|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& r : table.rows) {
    out << md_row({r.group, std::to_string(r.n_pub), std::to_string(r.n_cit), format_display(r.jif),
                   bracket(r.jif_z, r.rank.jif_z), bracket(r.cjif_z, r.rank.cjif_z),
                   bracket(r.pct_i3, r.rank.i3), bracket(r.pct_pr6, r.rank.pr6)});
  }
  return out.str();
}

std::string render_table(const CorrelationMatrix& m, Format format) {
  std::ostringstream out;
  const std::size_t k = m.labels.size();
  if (format == Format::csv) {
    out << "row,column,tau,p_value,significant,n,concordant,discordant,ties_x,ties_y\n";
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const auto& e = m.entry(i, j);
        out << csv::join({m.labels[i], m.labels[j], format_exact(e.tau), format_exact(e.p_value),
                          m.significant(i, j) ? "1" : "0", std::to_string(e.n),
                          std::to_string(e.concordant), std::to_string(e.discordant),
                          std::to_string(e.ties_x), std::to_string(e.ties_y)})
            << '\n';
      }
    }
    return out.str();
  }
  std::vector<std::string> header{""};
  for (std::size_t j = 0; j + 1 < k; ++j) header.push_back(m.labels[j]);
  out << md_row(header);
  out << "|---|";
  for (std::size_t j = 0; j + 1 < k; ++j) out << "---:|";
  out << "\n";
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<std::string> cells{m.labels[i]};
    for (std::size_t j = 0; j + 1 < k; ++j) {
      if (j < i) {
        cells.push_back(format_display(m.entry(i, j).tau) + (m.significant(i, j) ? " ⁺" : ""));
      } else {
        cells.emplace_back();
      }
    }
    out << md_row(cells);
  }
  char note[64];
  std::snprintf(note, sizeof note, "\n⁺ p < %g\n", m.threshold);
  out << note;
  return out.str();
}

ColumnsTable read_columns(std::istream& in) {
  std::vector<csv::Record> records;
  try {
    records = csv::read_all(in);
  } catch (const std::runtime_error& e) {
    throw ValidationError({{0, "header", e.what()}});
  }
  if (records.empty() || records[0].fields.size() < 2) {
    throw ValidationError({{1, "header", "columns file needs a label column and at least one value column"}});
  }
  const auto& header = records[0].fields;
  ColumnsTable table;
  for (std::size_t c = 1; c < header.size(); ++c) table.columns.push_back({header[c], {}});

  std::vector<Diagnostic> diags;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    const std::size_t row = r + 1;
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != header.size()) {
      diags.push_back({row, header[0], "expected " + std::to_string(header.size()) + " fields, found " +
                                           std::to_string(f.size())});
      continue;
    }
    table.groups.push_back(f[0]);
    for (std::size_t c = 1; c < f.size(); ++c) {
      double v = 0.0;
      const char* first = f[c].data();
      const char* last = first + f[c].size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (f[c].empty() || ec != std::errc() || ptr != last || std::isnan(v)) {
        diags.push_back({row, header[c], "not a number: '" + f[c] + "'"});
      }
      table.columns[c - 1].values.push_back(v);
    }
  }
  if (!diags.empty()) throw ValidationError(std::move(diags));
  return table;
}

std::vector<NamedColumn> correlation_inputs(const ColumnsTable& table,
                                            const std::vector<std::string>& selection) {
  std::vector<NamedColumn> out;
  auto add = [&](const NamedColumn& c) {
    NamedColumn copy = c;
    const std::string suffix = "_rank";
    if (c.label.size() > suffix.size() &&
        c.label.compare(c.label.size() - suffix.size(), suffix.size(), suffix) == 0) {
      for (auto& v : copy.values) v = -v;
    }
    out.push_back(std::move(copy));
  };
  if (selection.empty()) {
    for (const auto& c : table.columns) add(c);
    return out;
  }
  for (const auto& label : selection) {
    bool found = false;
    for (const auto& c : table.columns) {
      if (c.label == label) {
        add(c);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown column '" + label + "'");
  }
  return out;
}

}  // namespace citeimpact
