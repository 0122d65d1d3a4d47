#include "mapu/reclassifier.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "mapu/text.hpp"

namespace mapu {

void CorpusIndex::add(std::istream& in, const std::string& source_id) {
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    for (auto& tok : tokenize(line, offset)) {
      CorpusToken t;
      t.source = source_id;
      t.index = tokens_.size();
      t.byte_offset = tok.byte_offset;
      t.form = normalize(tok.text);
      t.raw = std::move(tok.text);
      by_form_[t.form].push_back(t.index);
      tokens_.push_back(std::move(t));
    }
    offset += line.size() + 1;
  }
  if (in.bad()) throw std::runtime_error("read error in " + source_id + " at byte " + std::to_string(offset));
}

const std::vector<std::size_t>& CorpusIndex::occurrences(std::string_view form) const {
  static const std::vector<std::size_t> none;
  auto it = by_form_.find(form);
  return it == by_form_.end() ? none : it->second;
}

std::vector<std::string> CorpusIndex::forms() const {
  std::vector<std::string> out;
  for (const auto& [form, _] : by_form_) out.push_back(form);
  return out;
}

std::string CorpusIndex::context(std::size_t index, std::size_t radius) const {
  if (index >= tokens_.size()) return {};
  const auto& source = tokens_[index].source;
  std::size_t lo = index >= radius ? index - radius : 0;
  std::size_t hi = std::min(tokens_.size() - 1, index + radius);
  std::string out;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (tokens_[i].source != source) continue;
    if (!out.empty()) out += ' ';
    out += tokens_[i].raw;
  }
  return out;
}

CorpusIndex index_corpus(std::istream& in, const std::string& source_id) {
  CorpusIndex idx;
  idx.add(in, source_id);
  return idx;
}

std::string_view to_string(Proposal p) {
  switch (p) {
    case Proposal::keep: return "keep";
    case Proposal::to_nonverbal: return "to_nonverbal";
    case Proposal::to_intransitive: return "to_intransitive";
    case Proposal::conflict: return "conflict";
  }
  return "?";
}

std::string EvidenceReport::proposal_text() const {
  std::string out(to_string(proposal));
  if (proposal == Proposal::to_nonverbal && category_hint)
    out += "(" + std::string(to_string(*category_hint)) + ")";
  return out;
}

LexCategory EvidenceReport::final_category() const {
  switch (proposal) {
    case Proposal::to_nonverbal: return category_hint.value_or(LexCategory::N);
    case Proposal::to_intransitive: return LexCategory::VI;
    default: return current_category;
  }
}

Proposal decide(std::size_t isolated, std::size_t causative_um, std::size_t causative_l,
                std::size_t threshold) {
  // any bare use next to a causative is reported, even below the threshold
  if (isolated > 0 && (causative_um > 0 || causative_l > 0)) return Proposal::conflict;
  if (isolated > 0 && isolated >= threshold) return Proposal::to_nonverbal;
  // -(ü)m- is the diagnostic causative; -l- also follows labile roots
  if (isolated == 0 && causative_um > 0) return Proposal::to_intransitive;
  return Proposal::keep;
}

EvidenceGatherer::EvidenceGatherer(const Analyzer& analyzer, const CorpusIndex& index,
                                   EvidenceOptions options)
    : analyzer_(&analyzer), index_(&index), options_(std::move(options)) {}

const AnalysisSet& EvidenceGatherer::analyses_of(const std::string& form) const {
  auto it = cache_.find(form);
  if (it != cache_.end()) return it->second;
  AnalysisSet set{form, {}};
  try {
    set = analyzer_->analyze(form);
  } catch (const AnalysisError&) {
  }
  return cache_.emplace(form, std::move(set)).first->second;
}

namespace {

// numerals and determiner-like particles that precede nouns
const std::set<std::string, std::less<>> kNounCues{"kiñe", "epu", "küla", "meli", "kechu", "kayu",
                                                   "regle", "pura", "aylla", "mari", "ta", "ti",
                                                   "chi", "tüfa", "tüfachi", "feychi", "pu"};
// degree words that precede adjectives
const std::set<std::string, std::less<>> kAdjectiveCues{"müna", "doy", "rume", "alü"};

}  // namespace

std::optional<LexCategory> EvidenceGatherer::heuristic_category(std::size_t token_index) const {
  if (token_index == 0) return std::nullopt;
  const auto& prev = index_->tokens()[token_index - 1];
  if (prev.source != index_->tokens()[token_index].source) return std::nullopt;
  if (kNounCues.contains(prev.form)) return LexCategory::N;
  if (kAdjectiveCues.contains(prev.form)) return LexCategory::Aj;
  return std::nullopt;
}

EvidenceReport EvidenceGatherer::gather(std::string_view root_raw) const {
  const std::string root = normalize(root_raw);
  const Lexicon& lex = analyzer_->lexicon();
  auto entries = lex.by_lemma(root);

  EvidenceReport rep;
  rep.root = root;
  std::vector<std::string> spellings{root};
  if (!entries.empty()) {
    const LexEntry* first = entries.front();
    rep.initial_category = first->original_category();
    rep.current_category = first->category;
    rep.definition = first->definition();
    rep.extracted_suffixes = first->extracted_suffixes;
    for (const auto* e : entries)
      for (const auto& v : e->variants)
        if (std::find(spellings.begin(), spellings.end(), v) == spellings.end()) spellings.push_back(v);
  }

  auto attest = [&](std::size_t i) {
    const auto& t = index_->tokens()[i];
    return Attestation{t.source, t.index, index_->context(i)};
  };

  std::map<LexCategory, std::size_t> hints;
  std::set<std::size_t> isolated;
  for (const auto& s : spellings)
    for (auto i : index_->occurrences(s)) isolated.insert(i);
  for (auto i : isolated) {
    rep.isolated_uses.push_back(attest(i));
    if (options_.context_heuristic)
      if (auto c = heuristic_category(i)) ++hints[*c];
  }

  auto is_in = [](const std::vector<std::string>& ids, const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  for (const auto& form : index_->forms()) {
    if (std::find(spellings.begin(), spellings.end(), form) != spellings.end()) continue;
    const auto& set = analyses_of(form);
    bool um = false, l = false;
    for (const auto& a : set.analyses) {
      if (a.root.entry->lemma != root) continue;
      for (const auto& m : a.morphemes) {
        um |= is_in(options_.causative_um_ids, m.tag);
        l |= is_in(options_.causative_l_ids, m.tag);
      }
    }
    if (!um && !l) continue;
    for (auto i : index_->occurrences(form)) {
      if (um) rep.causative_um_uses.push_back(attest(i));
      if (l) rep.causative_l_uses.push_back(attest(i));
    }
  }
  auto by_offset = [](const Attestation& a, const Attestation& b) { return a.offset < b.offset; };
  std::sort(rep.causative_um_uses.begin(), rep.causative_um_uses.end(), by_offset);
  std::sort(rep.causative_l_uses.begin(), rep.causative_l_uses.end(), by_offset);

  rep.proposal = decide(rep.isolated_uses.size(), rep.causative_um_uses.size(),
                        rep.causative_l_uses.size(), options_.threshold);
  if (rep.proposal == Proposal::to_nonverbal) {
    if (!hints.empty()) {
      auto best = std::max_element(hints.begin(), hints.end(),
                                   [](auto& a, auto& b) { return a.second < b.second; });
      rep.category_hint = best->first;
    } else if (!entries.empty() && !is_verbal(rep.current_category)) {
      rep.category_hint = rep.current_category;
    } else {
      rep.category_hint = LexCategory::N;
    }
  }
  return rep;
}

std::vector<EvidenceReport> EvidenceGatherer::gather_all() const {
  std::set<std::string> lemmas;
  for (const auto& e : analyzer_->lexicon().roots()) lemmas.insert(e.lemma);
  std::vector<EvidenceReport> out;
  for (const auto& l : lemmas) out.push_back(gather(l));
  return out;
}

EvidenceReport gather_evidence(const Analyzer& analyzer, const CorpusIndex& index,
                               std::string_view root, const EvidenceOptions& options) {
  return EvidenceGatherer(analyzer, index, options).gather(root);
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "tsv") return ReportFormat::tsv;
  if (name == "table") return ReportFormat::table;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string report(const std::vector<EvidenceReport>& reports, ReportFormat format) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Root", "Initial Cat.", "Final Cat.", "Proposal", "Isolated", "CA -(ü)m-",
                  "CA -(ü/e)l-", "Extracted Suffixes", "Definition"});
  for (const auto& r : reports) {
    std::string extracted;
    for (const auto& s : r.extracted_suffixes) extracted += (extracted.empty() ? "-" : ", -") + s + "-";
    rows.push_back({r.root, std::string(to_string(r.initial_category)),
                    std::string(to_string(r.final_category())), r.proposal_text(),
                    std::to_string(r.isolated_uses.size()), std::to_string(r.causative_um_uses.size()),
                    std::to_string(r.causative_l_uses.size()), extracted, r.definition});
  }
  std::ostringstream out;
  if (format == ReportFormat::tsv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << '\n';
    }
    return out.str();
  }
  // column widths in code points
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], to_u32(row[i]).size());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - to_u32(row[i]).size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mapu
