#include "mapu/morphotactics.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace mapu {

MorphotacticTable::MorphotacticTable(std::vector<SuffixEntry> suffixes,
                                     const std::vector<SuffixEntry>& overrides)
    : suffixes_(std::move(suffixes)) {
  for (const auto& o : overrides) {
    auto it = std::find_if(suffixes_.begin(), suffixes_.end(),
                           [&](const SuffixEntry& s) { return s.id == o.id; });
    if (it != suffixes_.end()) *it = o;
    else suffixes_.push_back(o);
  }
  for (std::size_t i = 0; i < suffixes_.size(); ++i) {
    index_.emplace(suffixes_[i].id, i);
    exclusion_[suffixes_[i].excl_class].push_back(suffixes_[i].id);
  }
}

const SuffixEntry* MorphotacticTable::find(std::string_view tag) const {
  auto it = index_.find(tag);
  return it == index_.end() ? nullptr : &suffixes_[it->second];
}

const SuffixEntry& MorphotacticTable::at(std::string_view tag) const {
  if (auto* s = find(tag)) return *s;
  throw UnknownTag(std::string(tag));
}

std::vector<const SuffixEntry*> MorphotacticTable::by_label(std::string_view label) const {
  std::vector<const SuffixEntry*> out;
  for (const auto& s : suffixes_)
    if (s.label() == label) out.push_back(&s);
  return out;
}

const SuffixEntry* MorphotacticTable::null_verbaliser() const {
  for (const auto& s : suffixes_)
    if (s.slot == kVerbaliserSlot && s.has_null()) return &s;
  return nullptr;
}

std::vector<const SuffixEntry*> MorphotacticTable::null_persons() const {
  std::vector<const SuffixEntry*> out;
  for (const auto& s : suffixes_)
    if (s.person && s.has_null()) out.push_back(&s);
  return out;
}

MorphotacticTable load_table(const Lexicon& lex,
                             const std::optional<std::filesystem::path>& overrides) {
  std::vector<SuffixEntry> extra;
  if (overrides) {
    std::ifstream in(*overrides);
    if (!in) throw std::runtime_error("cannot open " + overrides->string());
    extra = parse_suffixes(in, overrides->string());
  }
  return MorphotacticTable(lex.suffixes(), extra);
}

std::vector<Diagnostic> validate_table(const MorphotacticTable& table) {
  std::vector<Diagnostic> out;
  std::map<int, std::set<std::string>> classes_by_slot;
  for (const auto& s : table.suffixes()) {
    if (s.mood && s.slot != MorphotacticTable::kMoodSlot)
      out.push_back({"mood-slot", s.id, "mood suffixes belong in slot 4, found slot " +
                                            std::to_string(s.slot)});
    if (s.person && s.slot != MorphotacticTable::kPersonSlot)
      out.push_back({"person-slot", s.id, "person suffixes belong in slot 3, found slot " +
                                              std::to_string(s.slot)});
    if (s.slot < 1 || s.slot > 36)
      out.push_back({"slot-out-of-range", s.id, "slot " + std::to_string(s.slot) + " is outside 1..36"});
    if (s.fuses && (*s.fuses < 1 || *s.fuses > 36 || *s.fuses == s.slot))
      out.push_back({"slot-out-of-range", s.id, "fused slot must be another slot in 1..36"});
    classes_by_slot[s.slot].insert(s.excl_class);
  }
  for (const auto& [slot, classes] : classes_by_slot) {
    if (classes.size() > 1) {
      std::string names;
      for (const auto& c : classes) names += (names.empty() ? "" : ", ") + c;
      out.push_back({"slot-conflict", "slot " + std::to_string(slot),
                     "suffixes sharing a slot must share an exclusion class: " + names});
    }
  }
  return out;
}

namespace {

struct Span {
  int low;
  int high;
};

Span span_of(const SuffixEntry& s) { return {s.low_slot(), s.high_slot()}; }

}  // namespace

std::vector<Violation> check_sequence(const MorphotacticTable& table, const MorphemeSeq& seq) {
  std::vector<Violation> out;
  std::vector<const SuffixEntry*> entries;
  entries.reserve(seq.size());
  for (const auto& m : seq) entries.push_back(&table.at(m.tag));

  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (span_of(*entries[i - 1]).low <= span_of(*entries[i]).high) {
      out.push_back({"slot-order", seq[i - 1].tag + " (slot " + std::to_string(entries[i - 1]->slot) +
                                       ") precedes " + seq[i].tag + " (slot " +
                                       std::to_string(entries[i]->slot) + ")"});
      break;
    }
  }
  std::set<std::string> classes;
  for (const auto* e : entries) {
    if (!classes.insert(e->excl_class).second) {
      out.push_back({"exclusion", "class " + e->excl_class + " occurs more than once"});
      break;
    }
  }
  auto moods = std::count_if(entries.begin(), entries.end(), [](auto* e) { return e->mood; });
  if (moods > 1) out.push_back({"multiple-moods", std::to_string(moods) + " mood suffixes"});

  std::set<int> filled;
  for (const auto* e : entries) {
    filled.insert(e->slot);
    if (e->fuses) filled.insert(*e->fuses);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto* e = entries[i];
    if (!e->needs) continue;
    // the required slot must hold a realized (non-null) morpheme
    bool ok = false;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j == i) continue;
      const auto* other = entries[j];
      bool covers = other->slot == *e->needs || (other->fuses && *other->fuses == *e->needs);
      if (covers && !seq[j].form.empty()) ok = true;
    }
    if (!ok)
      out.push_back({"missing-required", seq[i].tag + " needs a realized morpheme in slot " +
                                             std::to_string(*e->needs)});
  }
  return out;
}

bool claims_finiteness(const MorphotacticTable& table, const MorphemeSeq& seq) {
  return std::any_of(seq.begin(), seq.end(), [&](const Morpheme& m) {
    const auto& e = table.at(m.tag);
    return e.mood || e.person;
  });
}

std::optional<Violation> check_finite(const MorphotacticTable& table, const MorphemeSeq& seq) {
  int moods = 0;
  int persons = 0;
  for (const auto& m : seq) {
    const auto& e = table.at(m.tag);
    if (e.mood && e.slot == MorphotacticTable::kMoodSlot) ++moods;
    if (e.person && e.slot == MorphotacticTable::kPersonSlot) ++persons;
    if (e.fuses && *e.fuses == MorphotacticTable::kPersonSlot) ++persons;
  }
  if (moods == 0) return Violation{"non-finite", "no mood marker in slot 4"};
  if (moods > 1) return Violation{"multiple-moods", std::to_string(moods) + " mood markers"};
  if (persons == 0) return Violation{"missing-person", "no person morpheme in slot 3"};
  if (persons > 1) return Violation{"multiple-persons", std::to_string(persons) + " person morphemes"};
  return std::nullopt;
}

std::vector<RootReading> readings(const LexEntry& entry) {
  if (!is_verbal(entry.category)) return {{&entry, std::nullopt}};
  Valency v = entry.valency.value_or(entry.category == LexCategory::VI ? Valency::intransitive
                                                                       : Valency::transitive);
  if (v == Valency::labile) return {{&entry, Valency::intransitive}, {&entry, Valency::transitive}};
  return {{&entry, v}};
}

std::optional<Violation> check_causative(const MorphotacticTable& table, const RootReading& reading,
                                         const MorphemeSeq& seq) {
  // non-verbal roots enter the verbal domain as intransitive themes
  Valency current = reading.valency.value_or(Valency::intransitive);
  for (const auto& m : seq) {
    const auto& e = table.at(m.tag);
    switch (e.valency_effect) {
      case ValencyEffect::none:
        break;
      case ValencyEffect::requires_intransitive_base:
        if (current != Valency::intransitive)
          return Violation{"causative-on-transitive",
                           m.tag + " cannot attach to a transitive theme"};
        current = Valency::transitive;
        break;
      case ValencyEffect::transitivizes:
        current = Valency::transitive;
        break;
      case ValencyEffect::detransitivizes:
        current = Valency::intransitive;
        break;
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_verbalization(const MorphotacticTable& table, const LexEntry& entry,
                                             const MorphemeSeq& seq) {
  bool has_verbaliser = false;
  bool null_verbaliser = false;
  bool needs_verbal = false;
  for (const auto& m : seq) {
    const auto& e = table.at(m.tag);
    if (e.slot == MorphotacticTable::kVerbaliserSlot) {
      has_verbaliser = true;
      null_verbaliser = m.form.empty();
    }
    if (e.verbal) needs_verbal = true;
  }
  if (is_verbal(entry.category)) {
    if (has_verbaliser) return Violation{"verbaliser-on-verb", "verbal roots take no verbaliser"};
    return std::nullopt;
  }
  if (needs_verbal && !has_verbaliser)
    return Violation{"missing-verbaliser", "verbal suffixes need a verbalised theme"};
  if (null_verbaliser && !needs_verbal)
    return Violation{"idle-verbaliser", "verbaliser without any verbal suffix"};
  return std::nullopt;
}

}  // namespace mapu
