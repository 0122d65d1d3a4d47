#pragma once

#include <algorithm>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mapu {

enum class LexCategory { N, Aj, Av, Dem, Int, NU, SP, Conj, VI, VT };

enum class Valency { intransitive, transitive, labile };

enum class ValencyEffect { none, requires_intransitive_base, transitivizes, detransitivizes };

/// Reference works attesting a root.
enum class Source { K, S, G };

std::string_view to_string(LexCategory c);
std::string_view to_string(Valency v);
std::string_view to_string(ValencyEffect e);
std::string_view to_string(Source s);
std::optional<LexCategory> parse_category(std::string_view s);
std::optional<Valency> parse_valency(std::string_view s);
std::optional<ValencyEffect> parse_valency_effect(std::string_view s);

/// Category code used in glosses: N -> NN, Aj -> AJ, VI -> IV, ...
std::string_view gloss_code(LexCategory c);

inline bool is_verbal(LexCategory c) { return c == LexCategory::VI || c == LexCategory::VT; }

/// Lexically conditioned stem change before a given suffix.
///   replace   "CA-m:lang"  la -> lang (only the alternant surfaces)
///   add       "CA-m:~nelk" nel -> nel, nelk (both surface, canonical first)
///   rewrite   "CA-m:f>p"   stem-final f becomes p
///   vowel     "CA-l:+e"    epenthetic vowel e instead of ü
struct Alternant {
  enum class Kind { replace, add, rewrite, vowel };
  std::string trigger;  // suffix id or gloss label
  Kind kind = Kind::replace;
  std::string from;     // lemma (replace/add), ending (rewrite), unused (vowel)
  std::string to;       // stem (replace/add), ending (rewrite), vowel (vowel)

  bool operator==(const Alternant&) const = default;
};

std::string to_string(const Alternant& a);
/// Parses "trigger:spec" for the root with the given lemma.
Alternant parse_alternant(std::string_view text, std::string_view lemma);

struct LexEntry {
  std::string lemma;
  LexCategory category = LexCategory::N;
  std::optional<Valency> valency;
  std::optional<std::string> gloss_iv;  // definition for non-verbal roots
  std::optional<std::string> gloss_tv;
  std::vector<std::string> extracted_suffixes;
  std::vector<Alternant> alternants;
  std::vector<std::string> variants;
  std::vector<Source> sources;
  std::optional<LexCategory> initial_category;

  /// Category the root had before reclassification (itself if never reclassified).
  LexCategory original_category() const { return initial_category.value_or(category); }
  const std::string& definition() const;

  bool operator==(const LexEntry&) const = default;
};

struct Allomorph {
  enum class Context { any, after_vowel, after_consonant };
  std::string form;        // empty for the null morpheme
  bool epenthetic = false; // "(ü)m": vowel inserted after a consonant-final base
  Context context = Context::any;

  bool is_null() const { return form.empty(); }
  bool operator==(const Allomorph&) const = default;
};

std::string to_string(const Allomorph& a);
Allomorph parse_allomorph(std::string_view text);

struct SuffixEntry {
  std::string id;  // unique, e.g. "CA-m"; the gloss label is the part before '-'
  std::vector<Allomorph> allomorphs;
  int slot = 0;
  std::string excl_class;
  ValencyEffect valency_effect = ValencyEffect::none;
  bool mood = false;
  bool person = false;
  bool verbal = false;             // only attaches to a verbal theme
  std::optional<int> fuses;        // portmanteau: also fills this slot
  std::optional<int> needs;        // requires a realized morpheme in this slot

  std::string label() const;
  int low_slot() const { return fuses ? std::min(slot, *fuses) : slot; }
  int high_slot() const { return fuses ? std::max(slot, *fuses) : slot; }
  bool has_null() const;

  bool operator==(const SuffixEntry&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(std::string file, std::size_t line, const std::string& what);
  std::string file;
  std::size_t line;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Diagnostic {
  std::string code;     // e.g. "duplicate-entry", "slot-out-of-range"
  std::string subject;  // entry or suffix the diagnostic is about
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

std::vector<LexEntry> parse_roots(std::istream& in, const std::string& name = "roots.tsv");
std::vector<SuffixEntry> parse_suffixes(std::istream& in, const std::string& name = "suffixes.tsv");
void write_roots(std::ostream& out, const std::vector<LexEntry>& roots);
void write_suffixes(std::ostream& out, const std::vector<SuffixEntry>& suffixes);

/// Immutable root lexicon and suffix inventory with lookup indices.
class Lexicon {
 public:
  Lexicon() = default;
  /// Builds the indices without validating; see validate_lexicon.
  Lexicon(std::vector<LexEntry> roots, std::vector<SuffixEntry> suffixes);

  const std::vector<LexEntry>& roots() const { return roots_; }
  const std::vector<SuffixEntry>& suffixes() const { return suffixes_; }

  /// Entries whose lemma or variant equals `surface`: lemma matches first,
  /// then variant matches, each ordered lexicographically.
  std::vector<const LexEntry*> lookup_root(std::string_view surface) const;
  /// Entries with exactly this lemma.
  std::vector<const LexEntry*> by_lemma(std::string_view lemma) const;

  const SuffixEntry* suffix(std::string_view id) const;
  /// Suffixes having an allomorph with this surface ("" for null morphemes).
  std::vector<const SuffixEntry*> suffixes_by_allomorph(std::string_view surface) const;

  bool operator==(const Lexicon& other) const {
    return roots_ == other.roots_ && suffixes_ == other.suffixes_;
  }

 private:
  std::vector<LexEntry> roots_;
  std::vector<SuffixEntry> suffixes_;
  std::multimap<std::string, std::size_t, std::less<>> lemma_index_;
  std::multimap<std::string, std::size_t, std::less<>> variant_index_;
  std::map<std::string, std::size_t, std::less<>> suffix_index_;
  std::multimap<std::string, std::size_t, std::less<>> allomorph_index_;
};

/// Every invariant violation; empty iff the lexicon is valid.
std::vector<Diagnostic> validate_lexicon(const Lexicon& lex);

/// Parses, indexes and validates. Throws ParseError or ValidationError.
Lexicon load_lexicon(const std::filesystem::path& root_file,
                     const std::filesystem::path& suffix_file);

}  // namespace mapu
