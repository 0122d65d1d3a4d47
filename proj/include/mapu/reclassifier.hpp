#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapu/analyzer.hpp"
#include "mapu/lexicon.hpp"

namespace mapu {

struct CorpusToken {
  std::string source;
  std::size_t index = 0;        // position within the whole index
  std::size_t byte_offset = 0;  // offset within its source
  std::string raw;
  std::string form;             // normalized
};

/// Position-indexed tokens of one or more sources.
class CorpusIndex {
 public:
  void add(std::istream& in, const std::string& source_id);

  const std::vector<CorpusToken>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  /// Token indices whose normalized form is `form`.
  const std::vector<std::size_t>& occurrences(std::string_view form) const;
  /// Distinct normalized forms, sorted.
  std::vector<std::string> forms() const;
  /// Raw tokens within ±radius of `index`, same source only, space-joined.
  std::string context(std::size_t index, std::size_t radius = 5) const;

 private:
  std::vector<CorpusToken> tokens_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_form_;
};

CorpusIndex index_corpus(std::istream& in, const std::string& source_id);

struct Attestation {
  std::string source;
  std::size_t offset = 0;  // token position
  std::string context;

  bool operator==(const Attestation&) const = default;
};

enum class Proposal { keep, to_nonverbal, to_intransitive, conflict };

std::string_view to_string(Proposal p);

struct EvidenceReport {
  std::string root;
  LexCategory initial_category = LexCategory::VI;
  LexCategory current_category = LexCategory::VI;
  std::string definition;
  std::vector<std::string> extracted_suffixes;
  std::vector<Attestation> isolated_uses;
  std::vector<Attestation> causative_um_uses;
  std::vector<Attestation> causative_l_uses;
  Proposal proposal = Proposal::keep;
  std::optional<LexCategory> category_hint;  // set for to_nonverbal

  /// "to_nonverbal(N)", "keep", ...
  std::string proposal_text() const;
  /// Category the proposal leads to.
  LexCategory final_category() const;
};

struct EvidenceOptions {
  std::size_t threshold = 1;       // isolated uses needed for a non-verbal proposal
  bool context_heuristic = false;  // guess N/Aj from the preceding word
  std::vector<std::string> causative_um_ids{"CA-m"};
  std::vector<std::string> causative_l_ids{"CA-l"};
};

/// Decides a proposal from evidence counts alone.
Proposal decide(std::size_t isolated, std::size_t causative_um, std::size_t causative_l,
                std::size_t threshold);

/// Collects evidence for roots over one corpus index, analyzing each
/// distinct token form once.
class EvidenceGatherer {
 public:
  EvidenceGatherer(const Analyzer& analyzer, const CorpusIndex& index, EvidenceOptions options = {});

  EvidenceReport gather(std::string_view root) const;
  /// One report per distinct lemma of the lexicon, in lemma order.
  std::vector<EvidenceReport> gather_all() const;

 private:
  const AnalysisSet& analyses_of(const std::string& form) const;
  std::optional<LexCategory> heuristic_category(std::size_t token_index) const;

  const Analyzer* analyzer_;
  const CorpusIndex* index_;
  EvidenceOptions options_;
  mutable std::map<std::string, AnalysisSet, std::less<>> cache_;
};

EvidenceReport gather_evidence(const Analyzer& analyzer, const CorpusIndex& index,
                               std::string_view root, const EvidenceOptions& options = {});

enum class ReportFormat { tsv, table };

/// Throws std::invalid_argument for anything but "tsv" or "table".
ReportFormat parse_report_format(std::string_view name);

/// Table-1-shaped document: root, initial and final category, proposal,
/// evidence counts, extracted suffixes and definition.
std::string report(const std::vector<EvidenceReport>& reports, ReportFormat format);

}  // namespace mapu
