#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapu/lexicon.hpp"
#include "mapu/morphotactics.hpp"

namespace mapu {

/// One segmentation of a surface form.
struct Analysis {
  RootReading root;
  std::string root_surface;  // root as it appears, after alternation
  bool verbalized = false;
  MorphemeSeq morphemes;
  std::string gloss;
  bool finite = false;

  /// "lang-üm-ün": root surface and overt morphemes joined by '-'.
  std::string segmentation() const;
  /// Suffix ids in order, nulls included.
  std::vector<std::string> tags() const;
};

struct AnalysisSet {
  std::string input;
  std::vector<Analysis> analyses;

  std::size_t ambiguity() const { return analyses.size(); }
  bool analyzable() const { return !analyses.empty(); }
};

struct AnalysisError : std::runtime_error {
  AnalysisError(std::string code, const std::string& what)
      : std::runtime_error(what), code(std::move(code)) {}
  std::string code;  // "empty-form" or "bad-alphabet"
};

/// "-CAT.lemma" then " +TAG" per morpheme, null morphemes as "+TAG.ø".
std::string render_gloss(const RootReading& root, const MorphemeSeq& morphemes,
                         const MorphotacticTable& table);
std::string render_gloss(const Analysis& a);

/// Enumerates every morphotactically valid segmentation of a verb form.
///
/// Suffixes are peeled right to left through a trie of reversed allomorph
/// realizations, with slots required to increase leftwards. Each candidate
/// segmentation then gets its licensed null morphemes (person in slot 3 when a
/// mood is present, the verbaliser for non-verbal roots), passes the
/// morphotactic checks, and is kept only if realizing it forward through the
/// phonology reproduces the input.
class Analyzer {
 public:
  Analyzer(const Lexicon& lex, const MorphotacticTable& table);

  /// Throws AnalysisError on empty input or characters outside the alphabet.
  AnalysisSet analyze(std::string_view surface) const;

  const Lexicon& lexicon() const { return *lex_; }
  const MorphotacticTable& table() const { return *table_; }

 private:
  struct StemRef {
    const LexEntry* entry;
    std::string spelling;  // lemma or variant the surface stem derives from
  };
  struct Terminal {
    const SuffixEntry* suffix;
    std::string realized;
  };
  struct TrieNode {
    std::map<char, std::size_t> next;
    std::vector<Terminal> terminals;
  };
  struct Overt {
    const SuffixEntry* suffix;
    std::string realized;
  };

  void add_to_trie(const SuffixEntry* suffix, const std::string& realized);
  void search(const std::string& surface, std::size_t end, int bound, std::vector<Overt>& stack,
              std::vector<Analysis>& out) const;
  void complete(const std::string& surface, const StemRef& stem, const std::string& root_surface,
                const std::vector<Overt>& overt, std::vector<Analysis>& out) const;

  const Lexicon* lex_;
  const MorphotacticTable* table_;
  std::multimap<std::string, StemRef, std::less<>> stems_;
  std::vector<TrieNode> trie_;
};

AnalysisSet analyze(const Lexicon& lex, const MorphotacticTable& table, std::string_view surface);

struct TokenResult {
  std::size_t offset = 0;  // byte offset of the token in the stream
  std::string token;       // normalized
  AnalysisSet result;
};

struct CorpusSummary {
  std::size_t tokens = 0;
  std::size_t unanalyzable = 0;
  std::size_t analyses = 0;

  double mean_ambiguity() const { return tokens ? static_cast<double>(analyses) / tokens : 0.0; }
};

struct CorpusError : std::runtime_error {
  CorpusError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// Analyzes every token of a UTF-8 stream in order. Tokens that fail
/// normalization or the alphabet check count as unanalyzable.
CorpusSummary analyze_corpus(const Analyzer& analyzer, std::istream& in,
                             const std::function<void(const TokenResult&)>& sink);

}  // namespace mapu
