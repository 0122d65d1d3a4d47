#include "mapu/analyzer.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <tuple>

#include "mapu/phonology.hpp"
#include "mapu/text.hpp"

namespace mapu {

std::string Analysis::segmentation() const {
  std::string out = root_surface;
  for (const auto& m : morphemes)
    if (!m.form.empty()) out += "-" + m.form;
  return out;
}

std::vector<std::string> Analysis::tags() const {
  std::vector<std::string> out;
  for (const auto& m : morphemes) out.push_back(m.tag);
  return out;
}

std::string render_gloss(const RootReading& root, const MorphemeSeq& morphemes,
                         const MorphotacticTable& table) {
  std::string out = "-";
  if (root.valency) out += *root.valency == Valency::transitive ? "TV" : "IV";
  else out += gloss_code(root.entry->category);
  out += "." + root.entry->lemma;
  for (const auto& m : morphemes) {
    const auto* s = table.find(m.tag);
    out += " +" + (s ? s->label() : m.tag);
    if (m.form.empty()) out += ".ø";
  }
  return out;
}

std::string render_gloss(const Analysis& a) { return a.gloss; }

Analyzer::Analyzer(const Lexicon& lex, const MorphotacticTable& table)
    : lex_(&lex), table_(&table), trie_(1) {
  for (const auto& entry : lex.roots()) {
    std::vector<std::string> spellings{entry.lemma};
    spellings.insert(spellings.end(), entry.variants.begin(), entry.variants.end());
    for (const auto& sp : spellings) {
      std::set<std::string> surfaces{sp};
      for (const auto& suffix : table.suffixes())
        for (auto& st : alternate_stem(sp, suffix, entry.alternants)) surfaces.insert(st);
      for (const auto& s : surfaces) stems_.emplace(s, StemRef{&entry, sp});
    }
  }

  // epenthetic vowels: ü plus any per-root override
  std::set<std::string> vowels{"ü"};
  for (const auto& entry : lex.roots())
    for (const auto& a : entry.alternants)
      if (a.kind == Alternant::Kind::vowel) vowels.insert(a.to);

  for (const auto& suffix : table.suffixes()) {
    for (const auto& allo : suffix.allomorphs) {
      if (allo.is_null()) continue;
      add_to_trie(&suffix, allo.form);
      if (allo.epenthetic)
        for (const auto& v : vowels) add_to_trie(&suffix, v + allo.form);
    }
  }
}

void Analyzer::add_to_trie(const SuffixEntry* suffix, const std::string& realized) {
  std::size_t node = 0;
  for (auto it = realized.rbegin(); it != realized.rend(); ++it) {
    auto found = trie_[node].next.find(*it);
    if (found == trie_[node].next.end()) {
      trie_.emplace_back();
      found = trie_[node].next.emplace(*it, trie_.size() - 1).first;
    }
    node = found->second;
  }
  auto& terms = trie_[node].terminals;
  bool dup = std::any_of(terms.begin(), terms.end(), [&](const Terminal& t) {
    return t.suffix == suffix && t.realized == realized;
  });
  if (!dup) terms.push_back({suffix, realized});
}

AnalysisSet Analyzer::analyze(std::string_view raw) const {
  if (trim(raw).empty()) throw AnalysisError("empty-form", "empty form");
  std::string surface = normalize(trim(raw));
  if (!in_alphabet(surface))
    throw AnalysisError("bad-alphabet", "'" + surface + "' has characters outside the alphabet");

  std::vector<Analysis> found;
  std::vector<Overt> stack;
  search(surface, surface.size(), 0, stack, found);

  // dedupe identical segmentations reached along different search paths
  std::vector<Analysis> unique;
  std::set<std::tuple<const LexEntry*, int, std::string, std::vector<std::string>, std::string>> seen;
  for (auto& a : found) {
    std::vector<std::string> forms;
    for (const auto& m : a.morphemes) forms.push_back(m.tag + "=" + m.form);
    int reading = a.root.valency ? static_cast<int>(*a.root.valency) : -1;
    if (seen.emplace(a.root.entry, reading, a.root_surface, forms, a.gloss).second)
      unique.push_back(std::move(a));
  }
  std::stable_sort(unique.begin(), unique.end(), [](const Analysis& x, const Analysis& y) {
    return std::make_tuple(x.morphemes.size(), x.gloss, x.segmentation()) <
           std::make_tuple(y.morphemes.size(), y.gloss, y.segmentation());
  });
  return AnalysisSet{surface, std::move(unique)};
}

void Analyzer::search(const std::string& surface, std::size_t end, int bound,
                      std::vector<Overt>& stack, std::vector<Analysis>& out) const {
  // the remaining prefix as a root
  auto [b, e] = stems_.equal_range(std::string_view(surface).substr(0, end));
  if (b != e) {
    std::vector<Overt> overt(stack.rbegin(), stack.rend());
    for (auto it = b; it != e; ++it) complete(surface, it->second, it->first, overt, out);
  }
  // peel one more suffix off the right edge of the prefix
  std::size_t node = 0;
  for (std::size_t pos = end; pos > 0; --pos) {
    auto next = trie_[node].next.find(surface[pos - 1]);
    if (next == trie_[node].next.end()) break;
    node = next->second;
    const std::size_t start = pos - 1;
    if (start == 0) break;  // a root must remain
    for (const auto& t : trie_[node].terminals) {
      if (t.suffix->low_slot() <= bound) continue;
      stack.push_back({t.suffix, t.realized});
      search(surface, start, t.suffix->high_slot(), stack, out);
      stack.pop_back();
    }
  }
}

void Analyzer::complete(const std::string& surface, const StemRef& stem,
                        const std::string& root_surface, const std::vector<Overt>& overt,
                        std::vector<Analysis>& out) const {
  const LexEntry& entry = *stem.entry;
  bool has_mood = false, has_person = false, has_verbal = false, has_verbaliser = false;
  for (const auto& o : overt) {
    has_mood |= o.suffix->mood;
    has_person |= o.suffix->person || o.suffix->fuses == MorphotacticTable::kPersonSlot;
    has_verbal |= o.suffix->verbal;
    has_verbaliser |= o.suffix->slot == MorphotacticTable::kVerbaliserSlot;
  }

  std::vector<const SuffixEntry*> person_options{nullptr};
  if (has_mood && !has_person) {
    person_options = table_->null_persons();
    if (person_options.empty()) return;
  }

  for (const SuffixEntry* person : person_options) {
    std::vector<Overt> seq = overt;
    bool verbal = has_verbal || (person && person->verbal);
    if (person) seq.push_back({person, ""});
    if (!is_verbal(entry.category) && verbal && !has_verbaliser) {
      if (const SuffixEntry* vrb = table_->null_verbaliser()) seq.push_back({vrb, ""});
    }
    std::stable_sort(seq.begin(), seq.end(), [](const Overt& x, const Overt& y) {
      return x.suffix->slot > y.suffix->slot;
    });

    MorphemeSeq morphemes;
    std::vector<const SuffixEntry*> suffixes;
    for (const auto& o : seq) {
      morphemes.push_back({o.suffix->id, o.realized, o.suffix->slot});
      suffixes.push_back(o.suffix);
    }
    if (!check_sequence(*table_, morphemes).empty()) continue;
    if (check_verbalization(*table_, entry, morphemes)) continue;
    const bool finite = claims_finiteness(*table_, morphemes);
    if (finite && check_finite(*table_, morphemes)) continue;

    // the segmentation must be what the phonology produces for this root
    bool realizable = false;
    for (const auto& r : realize(stem.spelling, entry.alternants, suffixes)) {
      if (r.surface != surface || r.root_surface != root_surface) continue;
      bool same = true;
      for (std::size_t i = 0; i < morphemes.size() && same; ++i)
        same = r.forms[i] == morphemes[i].form;
      if (same) {
        realizable = true;
        break;
      }
    }
    if (!realizable) continue;

    for (const auto& reading : readings(entry)) {
      if (check_causative(*table_, reading, morphemes)) continue;
      Analysis a;
      a.root = reading;
      a.root_surface = root_surface;
      a.morphemes = morphemes;
      a.verbalized = std::any_of(morphemes.begin(), morphemes.end(), [](const Morpheme& m) {
        return m.slot == MorphotacticTable::kVerbaliserSlot;
      });
      a.finite = finite;
      a.gloss = render_gloss(reading, morphemes, *table_);
      out.push_back(std::move(a));
    }
  }
}

AnalysisSet analyze(const Lexicon& lex, const MorphotacticTable& table, std::string_view surface) {
  return Analyzer(lex, table).analyze(surface);
}

CorpusSummary analyze_corpus(const Analyzer& analyzer, std::istream& in,
                             const std::function<void(const TokenResult&)>& sink) {
  CorpusSummary summary;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    for (const auto& tok : tokenize(line, offset)) {
      TokenResult r;
      r.offset = tok.byte_offset;
      r.token = normalize(tok.text);
      try {
        r.result = analyzer.analyze(r.token);
      } catch (const AnalysisError&) {
        r.result = AnalysisSet{r.token, {}};
      }
      ++summary.tokens;
      summary.analyses += r.result.ambiguity();
      if (!r.result.analyzable()) ++summary.unanalyzable;
      if (sink) sink(r);
    }
    offset += line.size() + 1;
  }
  if (in.bad()) throw CorpusError(offset, "read error");
  return summary;
}

}  // namespace mapu
