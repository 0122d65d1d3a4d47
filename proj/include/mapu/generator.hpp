#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapu/analyzer.hpp"
#include "mapu/lexicon.hpp"
#include "mapu/morphotactics.hpp"

namespace mapu {

struct GenRequest {
  std::string lemma;
  LexCategory category = LexCategory::VI;
  std::optional<Valency> reading;  // intransitive/transitive; for labile roots
  std::vector<std::string> tags;   // ids ("CA-m"), labels ("CA") or "VRB.ø"
};

/// Parses "lemma:CAT[+valency]" plus a comma-separated tag list, e.g.
/// ("monge:VI+transitive", "IND,3"). Throws std::invalid_argument.
GenRequest parse_request(std::string_view root, std::string_view tags);
std::string to_string(const GenRequest& req);

struct UnknownLemma : std::runtime_error {
  explicit UnknownLemma(const std::string& what) : std::runtime_error(what) {}
};

struct GeneratedForm {
  std::string surface;
  RootReading root;
  std::vector<std::string> tags;  // resolved suffix ids in slot order, nulls included
};

struct Generation {
  std::vector<GeneratedForm> forms;
  std::vector<Violation> violations;  // why expansions produced nothing

  std::vector<std::string> surfaces() const;
  bool empty() const { return forms.empty(); }
};

/// Surfaces for a root reading plus tags. Tags are sorted by slot; a null
/// verbaliser is added for non-verbal roots when a verbal suffix needs it.
/// Canonical lemma surfaces come before variant spellings; phonological
/// variants keep their canonical-first order. Throws UnknownLemma or UnknownTag.
Generation generate(const Lexicon& lex, const MorphotacticTable& table, const GenRequest& req);

struct RoundTrip {
  bool ok = false;
  std::string detail;  // "nothing-generated", or the first surface that failed
};

RoundTrip roundtrip_check(const Analyzer& analyzer, const GenRequest& req);
RoundTrip roundtrip_check(const Lexicon& lex, const MorphotacticTable& table, const GenRequest& req);

/// Re-derives every row of a root+causative table (root, category,
/// comma-separated surfaces) with the -(ü)m- causative and reports rows whose
/// generated surfaces differ. Throws ParseError on malformed rows.
std::vector<Diagnostic> check_causative_table(const Lexicon& lex, const MorphotacticTable& table,
                                              std::istream& rows, const std::string& name,
                                              const std::string& causative_id = "CA-m");

}  // namespace mapu
