#pragma once

#include <filesystem>
#include <string>

#include "mapu/analyzer.hpp"
#include "mapu/lexicon.hpp"
#include "mapu/morphotactics.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return MAPUMORPH_TEST_DATA; }
inline std::filesystem::path test_dir() { return MAPUMORPH_TEST_FIXTURES; }

/// The shipped lexicon, table and analyzer, loaded once per test binary.
struct Shipped {
  mapu::Lexicon lex;
  mapu::MorphotacticTable table;
  mapu::Analyzer analyzer;

  Shipped()
      : lex(mapu::load_lexicon(data_dir() / "roots.tsv", data_dir() / "suffixes.tsv")),
        table(mapu::load_table(lex, std::nullopt)),
        analyzer(lex, table) {}
};

inline const Shipped& shipped() {
  static const Shipped s;
  return s;
}

inline bool contains_gloss(const mapu::AnalysisSet& set, const std::string& gloss) {
  for (const auto& a : set.analyses)
    if (a.gloss == gloss) return true;
  return false;
}

}  // namespace fixtures
