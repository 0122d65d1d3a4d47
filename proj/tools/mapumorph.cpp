// mapumorph: analyze, generate and check Mapudüngun verb forms.
//
// Exit codes: 0 success; 1 unanalyzable token, nothing generated or
// diagnostics found; 2 configuration, data or usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapu/analyzer.hpp"
#include "mapu/config.hpp"
#include "mapu/generator.hpp"
#include "mapu/lexicon.hpp"
#include "mapu/morphotactics.hpp"
#include "mapu/reclassifier.hpp"
#include "mapu/text.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;

using mapu::Config;
using nlohmann::json;

struct Data {
  mapu::Lexicon lex;
  mapu::MorphotacticTable table;
};

Data load_data(const Config& cfg) {
  Data d{mapu::load_lexicon(cfg.lexicon, cfg.suffixes), {}};
  d.table = mapu::load_table(d.lex, cfg.overrides);
  auto diags = mapu::validate_table(d.table);
  if (!diags.empty())
    throw mapu::ValidationError("morphotactic table: " + diags.front().code + " in '" +
                                diags.front().subject + "': " + diags.front().message);
  return d;
}

void print_result(const mapu::AnalysisSet& set, mapu::OutputFormat format, std::ostream& out) {
  switch (format) {
    case mapu::OutputFormat::plain:
      if (!set.analyzable()) {
        out << set.input << "\tUNANALYZABLE\n";
        return;
      }
      for (std::size_t i = 0; i < set.analyses.size(); ++i)
        out << (i ? " | " : "") << set.analyses[i].gloss;
      out << '\n';
      return;
    case mapu::OutputFormat::tsv:
      if (!set.analyzable()) {
        out << set.input << "\tUNANALYZABLE\t0\n";
        return;
      }
      for (const auto& a : set.analyses) out << set.input << '\t' << a.gloss << '\t' << set.ambiguity() << '\n';
      return;
    case mapu::OutputFormat::records:
      if (!set.analyzable()) {
        json j{{"input", set.input}, {"gloss", nullptr}, {"tags", json::array()},
               {"finite", false}, {"ambiguity", 0}};
        out << j.dump() << '\n';
        return;
      }
      for (const auto& a : set.analyses) {
        json j{{"input", set.input}, {"gloss", a.gloss}, {"tags", a.tags()},
               {"finite", a.finite}, {"ambiguity", set.ambiguity()}};
        out << j.dump() << '\n';
      }
      return;
  }
}

void print_summary(const mapu::CorpusSummary& s) {
  std::cerr << "tokens\t" << s.tokens << "\nunanalyzable\t" << s.unanalyzable << "\nmean_ambiguity\t"
            << std::fixed << std::setprecision(3) << s.mean_ambiguity() << '\n';
}

int cmd_analyze(const Config& cfg, const std::vector<std::string>& words) {
  Data d = load_data(cfg);
  mapu::Analyzer analyzer(d.lex, d.table);
  mapu::CorpusSummary summary;
  auto sink = [&](const mapu::TokenResult& r) { print_result(r.result, cfg.format, std::cout); };
  if (words.empty()) {
    summary = mapu::analyze_corpus(analyzer, std::cin, sink);
  } else {
    for (const auto& w : words) {
      mapu::AnalysisSet set{w, {}};
      try {
        set = analyzer.analyze(w);
      } catch (const mapu::AnalysisError& e) {
        std::cerr << "mapumorph: " << e.code << ": " << e.what() << '\n';
        set.input = mapu::normalize(w);
      }
      ++summary.tokens;
      summary.analyses += set.ambiguity();
      if (!set.analyzable()) ++summary.unanalyzable;
      print_result(set, cfg.format, std::cout);
    }
  }
  if (cfg.ambiguity_report) print_summary(summary);
  return summary.unanalyzable ? kFailure : kOk;
}

int cmd_generate(const Config& cfg, const std::string& root, const std::string& tags) {
  Data d = load_data(cfg);
  mapu::GenRequest req;
  try {
    req = mapu::parse_request(root, tags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "mapumorph: " << e.what() << '\n';
    return kConfigError;
  }
  auto gen = mapu::generate(d.lex, d.table, req);
  if (gen.empty()) {
    std::cerr << "mapumorph: nothing generated for " << mapu::to_string(req) << '\n';
    for (const auto& v : gen.violations) std::cerr << "  " << v.code << ": " << v.detail << '\n';
    return kFailure;
  }
  if (cfg.format == mapu::OutputFormat::records) {
    for (const auto& f : gen.forms) {
      json j{{"request", mapu::to_string(req)}, {"surface", f.surface}, {"tags", f.tags}};
      std::cout << j.dump() << '\n';
    }
  } else {
    for (const auto& s : gen.surfaces()) std::cout << s << '\n';
  }
  return kOk;
}

int cmd_validate(const Config& cfg) {
  std::vector<mapu::Diagnostic> diags;
  std::vector<mapu::LexEntry> roots;
  std::vector<mapu::SuffixEntry> suffixes;
  {
    std::ifstream r(cfg.lexicon), s(cfg.suffixes);
    roots = mapu::parse_roots(r, cfg.lexicon.string());
    suffixes = mapu::parse_suffixes(s, cfg.suffixes.string());
  }
  mapu::Lexicon lex(std::move(roots), std::move(suffixes));
  mapu::MorphotacticTable table = mapu::load_table(lex, cfg.overrides);
  for (auto& d : mapu::validate_lexicon(lex)) diags.push_back(std::move(d));
  for (auto& d : mapu::validate_table(table)) diags.push_back(std::move(d));
  std::size_t rows = 0;
  if (diags.empty() && cfg.causatives) {
    std::ifstream in(*cfg.causatives);
    auto found = mapu::check_causative_table(lex, table, in, cfg.causatives->string());
    std::ifstream count(*cfg.causatives);
    std::string line;
    while (std::getline(count, line))
      if (!mapu::trim(line).empty() && mapu::trim(line).front() != '#') ++rows;
    diags.insert(diags.end(), found.begin(), found.end());
  }
  for (const auto& d : diags) std::cout << d << '\n';
  if (!diags.empty()) return kFailure;
  std::cout << "ok\t" << lex.roots().size() << " roots\t" << table.suffixes().size() << " suffixes\t"
            << rows << " causative rows\n";
  return kOk;
}

int cmd_reclassify(const Config& cfg, const std::vector<std::string>& corpora,
                   const std::vector<std::string>& roots, const std::string& output) {
  Data d = load_data(cfg);
  mapu::Analyzer analyzer(d.lex, d.table);
  mapu::CorpusIndex index;
  if (corpora.empty()) {
    index.add(std::cin, "stdin");
  } else {
    for (const auto& path : corpora) {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "mapumorph: cannot open corpus " << path << '\n';
        return kConfigError;
      }
      index.add(in, path);
    }
  }
  mapu::EvidenceOptions opts;
  opts.threshold = cfg.threshold;
  opts.context_heuristic = cfg.context_heuristic;
  mapu::EvidenceGatherer gatherer(analyzer, index, opts);
  std::vector<mapu::EvidenceReport> reports;
  if (roots.empty()) reports = gatherer.gather_all();
  else
    for (const auto& r : roots) reports.push_back(gatherer.gather(r));

  std::string doc;
  if (cfg.format == mapu::OutputFormat::records) {
    for (const auto& r : reports) {
      json j{{"root", r.root},
             {"initial_category", mapu::to_string(r.initial_category)},
             {"final_category", mapu::to_string(r.final_category())},
             {"proposal", r.proposal_text()},
             {"isolated", r.isolated_uses.size()},
             {"causative_um", r.causative_um_uses.size()},
             {"causative_l", r.causative_l_uses.size()}};
      doc += j.dump() + "\n";
    }
  } else {
    doc = mapu::report(reports, cfg.format == mapu::OutputFormat::tsv ? mapu::ReportFormat::tsv
                                                                       : mapu::ReportFormat::table);
  }
  if (output.empty() || output == "-") {
    std::cout << doc;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "mapumorph: cannot write " << output << '\n';
      return kConfigError;
    }
    out << doc;
  }
  return kOk;
}

int cmd_stats(const Config& cfg, const std::vector<std::string>& corpora) {
  Data d = load_data(cfg);
  std::map<std::string, std::size_t> by_cat, by_val;
  for (const auto& e : d.lex.roots()) {
    ++by_cat[std::string(mapu::to_string(e.category))];
    if (e.valency) ++by_val[std::string(mapu::to_string(*e.valency))];
  }
  std::cout << "roots\t" << d.lex.roots().size() << '\n';
  for (const auto& [k, v] : by_cat) std::cout << "category." << k << '\t' << v << '\n';
  for (const auto& [k, v] : by_val) std::cout << "valency." << k << '\t' << v << '\n';
  std::size_t allomorphs = 0;
  for (const auto& s : d.table.suffixes()) allomorphs += s.allomorphs.size();
  std::cout << "suffixes\t" << d.table.suffixes().size() << "\nallomorphs\t" << allomorphs << '\n';
  if (corpora.empty()) return kOk;
  mapu::Analyzer analyzer(d.lex, d.table);
  mapu::CorpusSummary total;
  for (const auto& path : corpora) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "mapumorph: cannot open corpus " << path << '\n';
      return kConfigError;
    }
    auto s = mapu::analyze_corpus(analyzer, in, nullptr);
    total.tokens += s.tokens;
    total.unanalyzable += s.unanalyzable;
    total.analyses += s.analyses;
  }
  std::cout << "tokens\t" << total.tokens << "\nunanalyzable\t" << total.unanalyzable
            << "\nmean_ambiguity\t" << std::fixed << std::setprecision(3) << total.mean_ambiguity() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphological analyzer and generator for Mapudüngun verb forms"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.fallthrough();  // global options may follow the subcommand

  mapu::ConfigFlags flags;
  std::string config_file, lexicon, suffixes, overrides, causatives, format;
  std::size_t threshold = 0;
  bool ambiguity = false, heuristic = false;
  app.add_option("--config", config_file, "JSON config file");
  app.add_option("--lexicon", lexicon, "roots.tsv");
  app.add_option("--suffixes", suffixes, "suffixes.tsv");
  app.add_option("--overrides", overrides, "morphotactics overrides (suffixes.tsv schema)");
  app.add_option("--causatives", causatives, "root+causative table for validate");
  app.add_option("--format", format, "plain, records or tsv");
  app.add_option("--threshold", threshold, "isolated uses needed to propose a non-verbal category");
  app.add_flag("--ambiguity-report", ambiguity, "print token/ambiguity summary to stderr");
  app.add_flag("--context-heuristic", heuristic, "guess N/Aj from the preceding word");

  std::vector<std::string> words, corpora, stats_corpora, roots;
  std::string root_list;
  std::string gen_root, gen_tags, output;

  auto* analyze = app.add_subcommand("analyze", "analyze words (arguments or stdin)");
  analyze->add_option("words", words);
  auto* generate = app.add_subcommand("generate", "generate surfaces: lemma:CAT[+valency] tag1,tag2");
  generate->add_option("root", gen_root)->required();
  generate->add_option("tags", gen_tags)->required();
  auto* validate = app.add_subcommand("validate", "check lexicon, suffix table and causative table");
  auto* reclassify = app.add_subcommand("reclassify", "propose category changes from corpus evidence");
  reclassify->add_option("corpus", corpora, "corpus files (default stdin)");
  reclassify->add_option("--roots", root_list, "roots to check, comma-separated (default: all)");
  reclassify->add_option("-o,--output", output, "report file (default stdout)");
  auto* stats = app.add_subcommand("stats", "lexicon statistics, plus ambiguity over corpus files");
  stats->add_option("corpus", stats_corpora);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  if (!config_file.empty()) flags.config_file = config_file;
  if (!lexicon.empty()) flags.lexicon = lexicon;
  if (!suffixes.empty()) flags.suffixes = suffixes;
  if (!overrides.empty()) flags.overrides = overrides;
  if (!causatives.empty()) flags.causatives = causatives;
  if (!format.empty()) flags.format = format;
  if (threshold) flags.threshold = threshold;
  if (ambiguity) flags.ambiguity_report = true;
  if (heuristic) flags.context_heuristic = true;

  try {
    Config cfg = mapu::load_config(flags, std::getenv("MAPUMORPH_DATA"));
    if (analyze->parsed()) return cmd_analyze(cfg, words);
    if (generate->parsed()) return cmd_generate(cfg, gen_root, gen_tags);
    if (validate->parsed()) return cmd_validate(cfg);
    if (reclassify->parsed()) {
      for (const auto& r : mapu::split(root_list, ','))
        if (!mapu::trim(r).empty()) roots.push_back(mapu::trim(r));
      return cmd_reclassify(cfg, corpora, roots, output);
    }
    if (stats->parsed()) return cmd_stats(cfg, stats_corpora);
  } catch (const mapu::ConfigError& e) {
    std::cerr << "mapumorph: config: " << e.what() << '\n';
    return kConfigError;
  } catch (const mapu::ParseError& e) {
    std::cerr << "mapumorph: parse error: " << e.what() << '\n';
    return kConfigError;
  } catch (const mapu::ValidationError& e) {
    std::cerr << "mapumorph: invalid data: " << e.what() << '\n';
    return kConfigError;
  } catch (const mapu::UnknownTag& e) {
    std::cerr << "mapumorph: " << e.what() << '\n';
    return kConfigError;
  } catch (const mapu::UnknownLemma& e) {
    std::cerr << "mapumorph: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "mapumorph: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
