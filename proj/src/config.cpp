#include "mapu/config.hpp"

#include <fstream>

#include "json.hpp"

#ifndef MAPUMORPH_DEFAULT_DATA
#define MAPUMORPH_DEFAULT_DATA "data"
#endif

namespace mapu {

namespace fs = std::filesystem;

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "records") return OutputFormat::records;
  if (name == "tsv") return OutputFormat::tsv;
  return std::nullopt;
}

fs::path default_data_dir(const char* env_data_dir) {
  if (env_data_dir && *env_data_dir) return fs::path(env_data_dir);
  return fs::path(MAPUMORPH_DEFAULT_DATA);
}

Config load_config(const ConfigFlags& flags, const char* env_data_dir) {
  const fs::path data = default_data_dir(env_data_dir);
  Config cfg;
  cfg.lexicon = data / "roots.tsv";
  cfg.suffixes = data / "suffixes.tsv";
  if (fs::exists(data / "causatives.tsv")) cfg.causatives = data / "causatives.tsv";
  std::string format = "plain";

  if (flags.config_file) {
    std::ifstream in(*flags.config_file);
    if (!in) throw ConfigError("cannot open config file " + flags.config_file->string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file " + flags.config_file->string() + ": " + e.what());
    }
    // relative paths in the file are relative to the file
    const fs::path base = flags.config_file->parent_path();
    auto path_of = [&](const char* key) { return base / j.at(key).get<std::string>(); };
    try {
      if (j.contains("lexicon")) cfg.lexicon = path_of("lexicon");
      if (j.contains("suffixes")) cfg.suffixes = path_of("suffixes");
      if (j.contains("overrides")) cfg.overrides = path_of("overrides");
      if (j.contains("causatives")) cfg.causatives = path_of("causatives");
      if (j.contains("format")) format = j.at("format").get<std::string>();
      if (j.contains("ambiguity_report")) cfg.ambiguity_report = j.at("ambiguity_report").get<bool>();
      if (j.contains("threshold")) cfg.threshold = j.at("threshold").get<std::size_t>();
      if (j.contains("context_heuristic")) cfg.context_heuristic = j.at("context_heuristic").get<bool>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file " + flags.config_file->string() + ": " + e.what());
    }
  }

  if (flags.lexicon) cfg.lexicon = *flags.lexicon;
  if (flags.suffixes) cfg.suffixes = *flags.suffixes;
  if (flags.overrides) cfg.overrides = *flags.overrides;
  if (flags.causatives) cfg.causatives = *flags.causatives;
  if (flags.format) format = *flags.format;
  if (flags.ambiguity_report) cfg.ambiguity_report = *flags.ambiguity_report;
  if (flags.threshold) cfg.threshold = *flags.threshold;
  if (flags.context_heuristic) cfg.context_heuristic = *flags.context_heuristic;

  auto f = parse_output_format(format);
  if (!f) throw ConfigError("unknown format '" + format + "' (plain, records, tsv)");
  cfg.format = *f;
  if (cfg.threshold == 0) throw ConfigError("threshold must be at least 1");

  auto require = [](const fs::path& p, const char* what) {
    if (!fs::is_regular_file(p)) throw ConfigError(std::string(what) + " not found: " + p.string());
  };
  require(cfg.lexicon, "lexicon");
  require(cfg.suffixes, "suffix inventory");
  if (cfg.overrides) require(*cfg.overrides, "morphotactics overrides");
  if (cfg.causatives) require(*cfg.causatives, "causative table");
  return cfg;
}

}  // namespace mapu
