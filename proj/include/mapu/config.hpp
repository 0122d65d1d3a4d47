#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mapu {

enum class OutputFormat { plain, records, tsv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct Config {
  std::filesystem::path lexicon;
  std::filesystem::path suffixes;
  std::optional<std::filesystem::path> overrides;
  std::optional<std::filesystem::path> causatives;  // root+CA self-test table
  OutputFormat format = OutputFormat::plain;
  bool ambiguity_report = false;
  std::size_t threshold = 1;
  bool context_heuristic = false;
};

/// Values given on the command line; each overrides the config file.
struct ConfigFlags {
  std::optional<std::filesystem::path> config_file;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> suffixes;
  std::optional<std::filesystem::path> overrides;
  std::optional<std::filesystem::path> causatives;
  std::optional<std::string> format;
  std::optional<bool> ambiguity_report;
  std::optional<std::size_t> threshold;
  std::optional<bool> context_heuristic;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Data directory: `env_data_dir` (MAPUMORPH_DATA) if set, else the
/// directory compiled into the build.
std::filesystem::path default_data_dir(const char* env_data_dir);

/// Defaults from the data directory, then the JSON config file, then flags.
/// Every path is checked before returning. Throws ConfigError.
Config load_config(const ConfigFlags& flags, const char* env_data_dir);

}  // namespace mapu
