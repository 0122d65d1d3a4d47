#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapu/lexicon.hpp"

namespace mapu {

/// One morpheme of a verb form: suffix id, realized surface ("" for null), slot.
struct Morpheme {
  std::string tag;
  std::string form;
  int slot = 0;

  bool operator==(const Morpheme&) const = default;
};

/// Morphemes in surface order, root side first.
using MorphemeSeq = std::vector<Morpheme>;

struct Violation {
  std::string code;    // slot-order, exclusion, multiple-moods, non-finite, ...
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct UnknownTag : std::runtime_error {
  explicit UnknownTag(const std::string& tag)
      : std::runtime_error("unknown suffix tag '" + tag + "'"), tag(tag) {}
  std::string tag;
};

/// Slot template and co-occurrence data for the suffix inventory.
class MorphotacticTable {
 public:
  static constexpr int kMoodSlot = 4;
  static constexpr int kPersonSlot = 3;
  static constexpr int kVerbaliserSlot = 36;

  MorphotacticTable() = default;
  /// Rows in `overrides` replace base rows with the same id or are appended.
  explicit MorphotacticTable(std::vector<SuffixEntry> suffixes,
                             const std::vector<SuffixEntry>& overrides = {});

  const std::vector<SuffixEntry>& suffixes() const { return suffixes_; }
  const SuffixEntry* find(std::string_view tag) const;
  /// Throws UnknownTag.
  const SuffixEntry& at(std::string_view tag) const;
  int slot_of(std::string_view tag) const { return at(tag).slot; }
  /// Suffix ids grouped by exclusion class.
  const std::map<std::string, std::vector<std::string>>& exclusion() const { return exclusion_; }
  /// Suffixes whose gloss label is `label`, in table order.
  std::vector<const SuffixEntry*> by_label(std::string_view label) const;
  /// The verbaliser with a null allomorph, if the inventory has one.
  const SuffixEntry* null_verbaliser() const;
  /// Person suffixes with a null allomorph, in table order.
  std::vector<const SuffixEntry*> null_persons() const;

 private:
  std::vector<SuffixEntry> suffixes_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::string, std::vector<std::string>> exclusion_;
};

MorphotacticTable load_table(const Lexicon& lex, const std::optional<std::filesystem::path>& overrides);

/// Table-level invariants: moods in slot 4, persons in slot 3, one exclusion
/// class per slot, fused and required slots in range.
std::vector<Diagnostic> validate_table(const MorphotacticTable& table);

/// Slots strictly decrease, no exclusion class repeats, at most one mood,
/// required slots present. Throws UnknownTag.
std::vector<Violation> check_sequence(const MorphotacticTable& table, const MorphemeSeq& seq);

/// True if the sequence contains a mood or person morpheme.
bool claims_finiteness(const MorphotacticTable& table, const MorphemeSeq& seq);

/// Exactly one mood in slot 4 and exactly one person in slot 3 (null or fused).
std::optional<Violation> check_finite(const MorphotacticTable& table, const MorphemeSeq& seq);

/// Valency reading of a root: intransitive or transitive for verbal roots
/// (labile roots have one reading each), absent for non-verbal roots.
struct RootReading {
  const LexEntry* entry = nullptr;
  std::optional<Valency> valency;

  bool operator==(const RootReading&) const = default;
};

std::vector<RootReading> readings(const LexEntry& entry);

/// Causatives (requires_intransitive_base) only attach to an intransitive
/// theme: an intransitive reading, or a verbalised non-verbal root.
std::optional<Violation> check_causative(const MorphotacticTable& table, const RootReading& reading,
                                         const MorphemeSeq& seq);

/// A non-verbal root takes the verbaliser iff some suffix needs a verbal
/// theme; verbal roots never take it.
std::optional<Violation> check_verbalization(const MorphotacticTable& table, const LexEntry& entry,
                                             const MorphemeSeq& seq);

}  // namespace mapu
