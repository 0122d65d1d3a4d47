#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "mapu/morphotactics.hpp"

using namespace mapu;

namespace {

const MorphotacticTable& table() { return fixtures::shipped().table; }
const Lexicon& lex() { return fixtures::shipped().lex; }

Morpheme m(const std::string& tag, const std::string& form = "") { return {tag, form, table().slot_of(tag)}; }

MorphemeSeq e01() {
  return {m("PRPS", "nie"), m("IO", "ñma"), m("ITR", "r"), m("LOC", "pu"), m("RE", "tu"),
          m("INV", "e"),    m("IND", "y"),  m("1"),        m("PL", "iñ"),  m("3A", "mu")};
}

const LexEntry& root(const std::string& lemma) {
  auto hits = lex().by_lemma(lemma);
  REQUIRE_MESSAGE(!hits.empty(), lemma);
  return *hits.front();
}

bool has_code(const std::vector<Violation>& vs, const std::string& code) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("slots of the long example follow the slot diagram") {
  // Third row of the slot diagram: after the root marker S, one mark per slot
  // from 36 down to 1; X is an overt suffix, ø a null one.
  const std::string row = "S . . . . X . . . . . X . . . . . . . X X X . . . . . . . . . X . X ø X X";
  std::istringstream in(row);
  std::string mark;
  in >> mark;  // S
  std::vector<int> filled;
  int slot = 36;
  while (in >> mark) {
    if (mark != ".") filled.push_back(slot);
    --slot;
  }
  REQUIRE(slot == 0);
  const std::vector<std::string> tags{"PRPS", "IO", "ITR", "LOC", "RE", "INV", "IND", "1", "PL", "3A"};
  REQUIRE(filled.size() == tags.size());
  for (std::size_t i = 0; i < tags.size(); ++i) CHECK_MESSAGE(table().slot_of(tags[i]) == filled[i], tags[i]);
}

TEST_CASE("check_sequence") {
  CHECK(check_sequence(table(), e01()).empty());
  CHECK(has_code(check_sequence(table(), {m("IND", "y"), m("PRPS", "nie")}), "slot-order"));
  CHECK(check_sequence(table(), {}).empty());
  CHECK(has_code(check_sequence(table(), {m("CA-m", "m"), m("CA-l", "l")}), "slot-order"));
  CHECK(has_code(check_sequence(table(), {m("IND", "y"), m("IMP2SG", "nge")}), "slot-order"));
  // the null first person needs the plural
  CHECK(has_code(check_sequence(table(), {m("IND", "y"), m("1")}), "missing-required"));
  CHECK_THROWS_AS(check_sequence(table(), {{"NOPE", "", 5}}), UnknownTag);
}

TEST_CASE("check_sequence rejects every misordered permutation") {
  const auto base = e01();
  // all adjacent swaps
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    auto s = base;
    std::swap(s[i], s[i + 1]);
    CHECK(has_code(check_sequence(table(), s), "slot-order"));
  }
  // random permutations: only the identity passes
  std::mt19937 rng(11);
  for (int round = 0; round < 3000; ++round) {
    auto s = base;
    std::shuffle(s.begin(), s.end(), rng);
    bool sorted = std::is_sorted(s.begin(), s.end(), [](const Morpheme& a, const Morpheme& b) { return a.slot > b.slot; });
    CHECK(check_sequence(table(), s).empty() == sorted);
  }
}

TEST_CASE("check_finite") {
  CHECK(!check_finite(table(), {m("IND", "y"), m("3")}));
  CHECK(check_finite(table(), {m("CA-l", "l")})->code == "non-finite");
  CHECK(check_finite(table(), {m("IND", "y"), m("3"), m("IMP2SG", "nge")})->code == "multiple-moods");
  CHECK(check_finite(table(), {m("IND", "y")})->code == "missing-person");
  CHECK(check_finite(table(), {m("IND", "y"), m("3"), m("1")})->code == "multiple-persons");
  // fused mood+person portmanteaus count for both slots
  CHECK(!check_finite(table(), {m("CA-l", "l"), m("IND1SG", "ün")}));
  CHECK(!check_finite(table(), {m("3P", "fi"), m("IMP2SG", "nge")}));
  CHECK(!check_finite(table(), e01()));
  CHECK(claims_finiteness(table(), {m("IND", "y")}));
  CHECK(!claims_finiteness(table(), {m("CONT", "ka"), m("OVN", "el")}));
}

TEST_CASE("check_causative") {
  auto one = [](const std::string& tag) { return MorphemeSeq{m(tag, "x")}; };
  const auto& nu = root("nü");
  CHECK(check_causative(table(), readings(nu).front(), one("CA-m"))->code == "causative-on-transitive");

  auto monge = readings(root("monge"));
  REQUIRE(monge.size() == 2);
  CHECK(!check_causative(table(), monge[0], one("CA-m")));
  CHECK(check_causative(table(), monge[1], one("CA-m")));

  CHECK(!check_causative(table(), readings(root("aku")).front(), one("CA-l")));
  // a verbalised non-verbal root is intransitive
  CHECK(!check_causative(table(), readings(root("la")).front(), {m("VRB"), m("CA-m", "üm")}));
  // a second causative applies to a transitive theme
  CHECK(check_causative(table(), readings(root("aku")).front(), {m("CA-m", "m"), m("CA-l", "l")}));
  // no causative, no constraint
  CHECK(!check_causative(table(), readings(nu).front(), {m("IND", "y"), m("3")}));
}

TEST_CASE("causatives reject transitive-only roots and accept the -l- list") {
  for (const auto& e : lex().roots()) {
    if (e.valency != Valency::transitive) continue;
    for (const char* ca : {"CA-m", "CA-l"})
      for (const auto& a : table().at(ca).allomorphs)
        CHECK_MESSAGE(check_causative(table(), readings(e).front(), {m(ca, a.form)}), e.lemma);
  }
  for (const char* r : {"aku", "allfü", "amu", "apo", "kümtrü", "küpa", "miaw", "monge", "montu", "nepe", "pültrü",
                        "rapi", "reyü", "ru", "rümu", "rünga", "tripa", "ürfi", "wüda", "wüño", "yewe"}) {
    CHECK_MESSAGE(!check_causative(table(), readings(root(r)).front(), {m("CA-l", "l")}), r);
  }
}

TEST_CASE("check_verbalization") {
  CHECK(!check_verbalization(table(), root("la"), {m("VRB"), m("CA-m", "üm")}));
  CHECK(check_verbalization(table(), root("la"), {m("CA-m", "üm")})->code == "missing-verbaliser");
  CHECK(check_verbalization(table(), root("tripa"), {m("VRB"), m("IND", "y"), m("3")})->code == "verbaliser-on-verb");
  CHECK(check_verbalization(table(), root("pichi"), {m("VRB"), m("CONT", "ka"), m("OVN", "el")})->code ==
        "idle-verbaliser");
  CHECK(!check_verbalization(table(), root("pichi"), {m("CONT", "ka"), m("OVN", "el")}));
  CHECK(!check_verbalization(table(), root("chadi"), {}));
}

TEST_CASE("table invariants and overrides") {
  CHECK(validate_table(table()).empty());
  for (const auto& s : table().suffixes()) {
    if (s.mood) CHECK(s.slot == MorphotacticTable::kMoodSlot);
    if (s.person) CHECK(s.slot == MorphotacticTable::kPersonSlot);
  }
  auto codes = [](const std::vector<Diagnostic>& ds) {
    std::vector<std::string> out;
    for (const auto& d : ds) out.push_back(d.code);
    return out;
  };
  SUBCASE("a mood moved out of slot 4") {
    auto ind = table().at("IND");
    ind.slot = 5;
    MorphotacticTable t(table().suffixes(), {ind});
    CHECK(t.slot_of("IND") == 5);
    auto c = codes(validate_table(t));
    CHECK(std::find(c.begin(), c.end(), "mood-slot") != c.end());
  }
  SUBCASE("two exclusion classes in one slot") {
    auto pl = table().at("PL");
    pl.slot = 4;
    MorphotacticTable t(table().suffixes(), {pl});
    auto c = codes(validate_table(t));
    CHECK(std::find(c.begin(), c.end(), "slot-conflict") != c.end());
  }
  SUBCASE("appended rows") {
    SuffixEntry fe;
    fe.id = "AGT";
    fe.allomorphs = {Allomorph{"fe"}};
    fe.slot = 5;
    fe.excl_class = "AGT";
    MorphotacticTable t(table().suffixes(), {fe});
    CHECK(t.find("AGT"));
    CHECK(t.suffixes().size() == table().suffixes().size() + 1);
  }
}

TEST_CASE("table lookups") {
  CHECK(table().null_verbaliser()->id == "VRB");
  auto persons = table().null_persons();
  CHECK(persons.size() == 2);
  auto ca = table().by_label("CA");
  REQUIRE(ca.size() == 2);
  CHECK(ca[0]->id == "CA-m");
  CHECK(table().exclusion().at("MOOD").size() == 4);
  CHECK_THROWS_AS(table().at("XYZ"), UnknownTag);
}
