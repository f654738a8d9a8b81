#include "citeimpact/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "citeimpact/corpus.hpp"
#include "citeimpact/csv.hpp"
#include "citeimpact/indicators.hpp"
#include "citeimpact/render.hpp"
#include "citeimpact/synth.hpp"
#include "citeimpact/transform.hpp"

namespace citeimpact::cli {

namespace {

/// Raised for unreadable or unwritable files; maps to the data exit code.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for bad option values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input = "-";
  std::string output = "-";
  std::string format = "markdown";
  bool csv_flag = false;
  bool markdown_flag = false;
  std::string scheme;
  Year census_year = 2010;
  std::string pub_window = "2008,2009";
  std::string method = "normal";
  std::int64_t permutations = 100000;
  std::uint64_t seed = 20120101;
  double threshold = 0.01;
  std::vector<std::string> columns;
  std::string stratify = "none";
  bool t_score = false;

  // synth
  std::size_t groups = 11;
  std::vector<std::int64_t> articles{100};
  std::string distribution = "lognormal";
  double mu = 0.5;
  double sigma = 1.2;
  double nb_r = 1.0;
  double nb_p = 0.3;
  std::string doc_mix = "article:1";
  std::string outlier;

  Format resolved_format() const {
    if (csv_flag) return Format::csv;
    if (markdown_flag) return Format::markdown;
    return format == "csv" ? Format::csv : Format::markdown;
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

template <typename T>
T to_number(const std::string& s, const std::string& what) {
  std::istringstream ss(s);
  T v{};
  if (!(ss >> v) || !ss.eof()) throw UsageError("invalid " + what + ": '" + s + "'");
  return v;
}

std::set<Year> parse_window(const std::string& text) {
  std::set<Year> years;
  for (const auto& part : split(text, ',')) {
    const auto dash = part.find('-', 1);
    if (dash != std::string::npos) {
      const auto lo = to_number<Year>(part.substr(0, dash), "publication window");
      const auto hi = to_number<Year>(part.substr(dash + 1), "publication window");
      if (hi < lo) throw UsageError("publication window range is reversed: '" + part + "'");
      for (Year y = lo; y <= hi; ++y) years.insert(y);
    } else {
      years.insert(to_number<Year>(part, "publication window"));
    }
  }
  if (years.empty()) throw UsageError("empty publication window");
  return years;
}

ClassScheme resolve_scheme(const RunConfig& cfg) {
  if (cfg.scheme.empty()) return default_pr6_scheme();
  try {
    return ClassScheme::parse(cfg.scheme);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--scheme: ") + e.what());
  }
}

TestOptions resolve_test(const RunConfig& cfg) {
  TestOptions t;
  t.method = cfg.method == "permutation" ? PValueMethod::permutation
                                         : PValueMethod::normal_approximation;
  t.permutations = cfg.permutations;
  t.seed = cfg.seed;
  return t;
}

template <typename Fn>
auto with_input(const RunConfig& cfg, std::istream& stdin_stream, Fn&& fn) {
  if (cfg.input == "-") return fn(stdin_stream);
  std::ifstream file(cfg.input, std::ios::binary);
  if (!file) throw FileError("cannot open input file '" + cfg.input + "'");
  return fn(file);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw FileError("cannot open output file '" + cfg.output + "'");
  file << text;
  if (!file) throw FileError("failed writing '" + cfg.output + "'");
}

Corpus load_corpus(const RunConfig& cfg, std::istream& in) {
  const auto window = parse_window(cfg.pub_window);
  return with_input(cfg, in, [&](std::istream& s) { return parse_csv(s, cfg.census_year, window); });
}

std::vector<NamedColumn> indicator_columns(const IndicatorTable& t) {
  std::vector<NamedColumn> cols{{"sc_jif", {}}, {"jif_z", {}}, {"cjif_z", {}}, {"i3", {}},
                                {"pr6", {}},    {"n_pub", {}}, {"n_cit", {}}};
  for (const auto& r : t.rows) {
    cols[0].values.push_back(r.jif);
    cols[1].values.push_back(r.jif_z);
    cols[2].values.push_back(r.cjif_z);
    cols[3].values.push_back(r.i3);
    cols[4].values.push_back(r.pr6);
    cols[5].values.push_back(static_cast<double>(r.n_pub));
    cols[6].values.push_back(static_cast<double>(r.n_cit));
  }
  return cols;
}

std::string cmd_indicators(const RunConfig& cfg, std::istream& in) {
  const auto scheme = resolve_scheme(cfg);
  const auto corpus = load_corpus(cfg, in);
  return render_table(indicator_table(corpus, scheme), cfg.resolved_format());
}

std::string cmd_correlate(const RunConfig& cfg, std::istream& in) {
  const auto table = with_input(cfg, in, [](std::istream& s) { return read_columns(s); });
  std::vector<NamedColumn> inputs;
  try {
    inputs = correlation_inputs(table, cfg.columns);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (inputs.size() < 2) throw UsageError("correlate needs at least two columns");
  if (table.groups.size() < 2) throw ValidationError({{2, "group", "need at least two rows"}});
  const auto m = correlation_matrix(inputs, cfg.threshold, resolve_test(cfg));
  return render_table(m, cfg.resolved_format());
}

std::string cmd_transform(const RunConfig& cfg, std::istream& in) {
  const auto corpus = load_corpus(cfg, in);
  if (corpus.empty()) return std::string("article_id,group,doc_type,q,z") + (cfg.t_score ? ",t\n" : "\n");
  const bool by_type = cfg.stratify == "doc-type";
  const auto q = by_type ? stratified_quantiles(corpus) : assign_quantiles(corpus);
  const auto z = mccall_z(q);
  std::ostringstream out;
  out << "article_id,group,doc_type,q,z" << (cfg.t_score ? ",t" : "") << '\n';
  const auto& records = corpus.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::vector<std::string> fields{records[i].article_id, records[i].group_key, records[i].doc_type,
                                    format_exact(q.q[i]), format_exact(z.z[i])};
    if (cfg.t_score) fields.push_back(format_exact(t_score(z.z[i])));
    out << csv::join(fields) << '\n';
  }
  return out.str();
}

std::string cmd_synth(const RunConfig& cfg) {
  synth::SynthSpec spec;
  spec.n_groups = cfg.groups;
  spec.articles_per_group = cfg.articles;
  if (cfg.distribution == "lognormal") {
    spec.distribution = synth::LogNormal{cfg.mu, cfg.sigma};
  } else {
    spec.distribution = synth::NegativeBinomial{cfg.nb_r, cfg.nb_p};
  }
  spec.doc_type_mix.clear();
  for (const auto& part : split(cfg.doc_mix, ',')) {
    const auto colon = part.rfind(':');
    if (colon == std::string::npos) throw UsageError("--doc-mix entries must be type:share");
    spec.doc_type_mix[part.substr(0, colon)] = to_number<double>(part.substr(colon + 1), "doc-mix share");
  }
  if (!cfg.outlier.empty()) {
    const auto colon = cfg.outlier.find(':');
    if (colon == std::string::npos) throw UsageError("--outlier must be group_index:citations");
    spec.outlier = synth::Outlier{to_number<std::size_t>(cfg.outlier.substr(0, colon), "outlier group"),
                                  to_number<CitationCount>(cfg.outlier.substr(colon + 1), "outlier count")};
  }
  spec.seed = cfg.seed;
  spec.census_year = cfg.census_year;
  spec.pub_window = parse_window(cfg.pub_window);
  try {
    synth::validate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream out;
  write_csv(out, synth::generate(spec));
  return out.str();
}

std::string cmd_report(const RunConfig& cfg, std::istream& in) {
  const auto scheme = resolve_scheme(cfg);
  const auto corpus = load_corpus(cfg, in);
  const auto table = indicator_table(corpus, scheme);
  const auto format = cfg.resolved_format();
  std::string text = render_table(table, format);
  if (table.rows.size() >= 2) {
    text += "\n";
    text += render_table(correlation_matrix(indicator_columns(table), cfg.threshold, resolve_test(cfg)),
                         format);
  }
  return text;
}

void add_io(CLI::App* sub, RunConfig& cfg, bool with_format) {
  sub->add_option("--input,-i", cfg.input, "Input file, '-' for standard input");
  sub->add_option("--out,-o", cfg.output, "Output file, '-' for standard output");
  if (!with_format) return;
  auto* fmt = sub->add_option("--format,-f", cfg.format, "Output format")
                  ->check(CLI::IsMember({"csv", "markdown"}));
  auto* csv_flag = sub->add_flag("--csv", cfg.csv_flag, "Same as --format csv");
  auto* md_flag = sub->add_flag("--markdown", cfg.markdown_flag, "Same as --format markdown");
  csv_flag->excludes(md_flag);
  csv_flag->excludes(fmt);
  md_flag->excludes(fmt);
}

void add_corpus_meta(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--census-year", cfg.census_year, "Year in which citations were counted");
  sub->add_option("--pub-window", cfg.pub_window, "Publication years, e.g. 2008,2009 or 2008-2009");
}

void add_test_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--threshold", cfg.threshold, "Significance threshold")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--method", cfg.method, "p-value method")->check(CLI::IsMember({"normal", "permutation"}));
  sub->add_option("--permutations", cfg.permutations, "Monte-Carlo permutations")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Random seed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Citation impact indicators: JIF, JIF_z, cJIF_z, I3, PR6 and Kendall tau-b"};
  app.require_subcommand(1, 1);

  auto* ind = app.add_subcommand("indicators", "Per-group indicator table");
  add_io(ind, cfg, true);
  add_corpus_meta(ind, cfg);
  ind->add_option("--scheme", cfg.scheme, "Percentile classes as lower:upper:weight,...");

  auto* cor = app.add_subcommand("correlate", "Kendall tau-b matrix over columns");
  add_io(cor, cfg, true);
  cor->add_option("--columns", cfg.columns, "Columns to correlate, in order")->delimiter(',');
  add_test_options(cor, cfg);

  auto* tr = app.add_subcommand("transform", "Per-article percentiles and area-transformed z");
  add_io(tr, cfg, false);
  add_corpus_meta(tr, cfg);
  tr->add_option("--stratify", cfg.stratify, "Stratification")->check(CLI::IsMember({"none", "doc-type"}));
  tr->add_flag("--t-score", cfg.t_score, "Append McCall T = 50 + 10z");

  auto* sy = app.add_subcommand("synth", "Generate a synthetic corpus CSV");
  sy->add_option("--out,-o", cfg.output, "Output file, '-' for standard output");
  sy->add_option("--groups", cfg.groups, "Number of groups")->check(CLI::PositiveNumber);
  sy->add_option("--articles", cfg.articles, "Articles per group (one value or one per group)")
      ->delimiter(',');
  sy->add_option("--distribution", cfg.distribution, "Citation model")
      ->check(CLI::IsMember({"lognormal", "negbin"}));
  sy->add_option("--mu", cfg.mu, "Lognormal mu");
  sy->add_option("--sigma", cfg.sigma, "Lognormal sigma");
  sy->add_option("--nb-r", cfg.nb_r, "Negative binomial r");
  sy->add_option("--nb-p", cfg.nb_p, "Negative binomial success probability");
  sy->add_option("--doc-mix", cfg.doc_mix, "Document types as type:share,...");
  sy->add_option("--outlier", cfg.outlier, "group_index:citations (0-based group)");
  sy->add_option("--seed", cfg.seed, "Random seed");
  add_corpus_meta(sy, cfg);

  auto* rep = app.add_subcommand("report", "Indicator table plus tau-b matrix of its columns");
  add_io(rep, cfg, true);
  add_corpus_meta(rep, cfg);
  rep->add_option("--scheme", cfg.scheme, "Percentile classes as lower:upper:weight,...");
  add_test_options(rep, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::string text;
    if (ind->parsed()) text = cmd_indicators(cfg, in);
    else if (cor->parsed()) text = cmd_correlate(cfg, in);
    else if (tr->parsed()) text = cmd_transform(cfg, in);
    else if (sy->parsed()) text = cmd_synth(cfg);
    else text = cmd_report(cfg, in);
    emit(cfg, out, text);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    for (const auto& d : e.diagnostics()) err << to_string(d) << '\n';
    return kExitData;
  } catch (const FileError& e) {
    err << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace citeimpact::cli
