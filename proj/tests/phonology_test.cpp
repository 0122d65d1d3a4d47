#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "mapu/phonology.hpp"
#include "mapu/text.hpp"

using namespace mapu;

namespace {

const MorphotacticTable& table() { return fixtures::shipped().table; }
const SuffixEntry& sx(const char* id) { return table().at(id); }

std::vector<Alternant> alts(std::initializer_list<const char*> specs, const char* lemma) {
  std::vector<Alternant> out;
  for (const char* s : specs) out.push_back(parse_alternant(s, lemma));
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("join at the causative boundary") {
  CHECK(join("kon", sx("CA-m")) == std::vector<std::string>{"konüm"});
  CHECK(join("anü", sx("CA-m")) == std::vector<std::string>{"anüm"});
  CHECK(join("la", sx("CA-m"), alts({"CA-m:lang"}, "la")) == std::vector<std::string>{"langüm"});
  CHECK(join("lüf", sx("CA-m"), alts({"CA-m:f>p"}, "lüf")) == std::vector<std::string>{"lüpüm"});
  CHECK(join("nel", sx("CA-m"), alts({"CA-m:~nelk"}, "nel")) == std::vector<std::string>{"nelüm", "nelküm"});
  CHECK(join("küpa", sx("CA-l")) == std::vector<std::string>{"küpal"});
}

TEST_CASE("alternants only fire for their trigger") {
  auto la = alts({"CA-m:lang"}, "la");
  CHECK(join("la", sx("CA-l"), la) == std::vector<std::string>{"lal"});
  CHECK(join("la", sx("IND"), la) == std::vector<std::string>{"lay"});
  // a label trigger covers every suffix with that label
  auto both = alts({"CA:lang"}, "la");
  CHECK(join("la", sx("CA-l"), both) == std::vector<std::string>{"langül"});
  // the e variant of -(ü/e)l-
  CHECK(join("kon", sx("CA-l"), alts({"CA-l:+e"}, "kon")) == std::vector<std::string>{"konel"});
  CHECK(join("kon", sx("CA-m"), alts({"CA-l:+e"}, "kon")) == std::vector<std::string>{"konüm"});
}

TEST_CASE("context-conditioned and fused allomorphs") {
  CHECK(join("tripa", sx("IND")) == std::vector<std::string>{"tripay"});
  CHECK(join("kon", sx("IND")) == std::vector<std::string>{"koni"});
  CHECK(join("küpal", sx("IND1SG")) == std::vector<std::string>{"küpalün"});
  CHECK(join("tripa", sx("IND1SG")) == std::vector<std::string>{"tripan"});
  CHECK(join("tripa", sx("3")) == std::vector<std::string>{"tripa"});
}

TEST_CASE("split inverts join") {
  auto lang = split("langüm", sx("CA-m"), alts({"CA-m:lang"}, "la"));
  CHECK(contains(lang, "lang"));
  CHECK(contains(lang, "la"));
  CHECK(split("konüm", sx("CA-m")) == std::vector<std::string>{"kon", "konü"});
  CHECK(split("x", sx("CA-m")).empty());
  CHECK(contains(split("lüpüm", sx("CA-m"), alts({"CA-m:f>p"}, "lüf")), "lüf"));
  CHECK(contains(split("nelküm", sx("CA-m"), alts({"CA-m:~nelk"}, "nel")), "nel"));
}

TEST_CASE("round trip over every shipped stem and suffix") {
  const auto& lex = fixtures::shipped().lex;
  std::size_t checked = 0;
  for (const auto& e : lex.roots()) {
    std::vector<std::string> stems{e.lemma};
    stems.insert(stems.end(), e.variants.begin(), e.variants.end());
    for (const auto& stem : stems) {
      for (const auto& s : table().suffixes()) {
        for (const auto& u : join(stem, s, e.alternants)) {
          CHECK_MESSAGE(contains(split(u, s, e.alternants), stem), stem << " + " << s.id << " = " << u);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("epenthesis always separates a consonant from an epenthetic allomorph") {
  const auto& lex = fixtures::shipped().lex;
  for (const auto& e : lex.roots()) {
    for (const auto& s : table().suffixes()) {
      for (const auto& a : s.allomorphs) {
        if (!a.epenthetic) continue;
        for (const auto& j : join_allomorph(e.lemma, a, s, e.alternants)) {
          // the junction is base + suffix; the suffix must start with a vowel
          // whenever the base ends in a consonant
          if (!ends_in_vowel(j.base)) CHECK_MESSAGE(is_vowel(to_u32(j.suffix).front()), j.base << "+" << j.suffix);
          CHECK(j.suffix.ends_with(a.form));
        }
      }
    }
  }
}

TEST_CASE("alternation is idempotent on its output") {
  struct Case {
    const char* lemma;
    const char* spec;
  };
  for (auto c : {Case{"la", "CA-m:lang"}, Case{"nel", "CA-m:~nelk"}, Case{"lüf", "CA-m:f>p"}}) {
    auto a = alts({c.spec}, c.lemma);
    auto once = alternate_stem(c.lemma, sx("CA-m"), a);
    std::vector<std::string> twice;
    for (const auto& s : once)
      for (const auto& t : alternate_stem(s, sx("CA-m"), a))
        if (!contains(twice, t)) twice.push_back(t);
    CHECK_MESSAGE(twice == once, c.lemma);
  }
}

TEST_CASE("variant order is deterministic, canonical first") {
  auto nel = alts({"CA-m:~nelk"}, "nel");
  for (int i = 0; i < 5; ++i) CHECK(join("nel", sx("CA-m"), nel) == std::vector<std::string>{"nelüm", "nelküm"});
  CHECK(epenthetic_vowel(sx("CA-l"), alts({"CA-l:+e"}, "kon")) == "e");
  CHECK(epenthetic_vowel(sx("CA-m"), {}) == "ü");
}

TEST_CASE("realize threads forms left to right") {
  const SuffixEntry* seq[] = {&sx("CA-l"), &sx("IND1SG")};
  auto r = realize("küpa", {}, seq);
  REQUIRE(r.size() == 1);
  CHECK(r[0].surface == "küpalün");
  CHECK(r[0].forms == std::vector<std::string>{"l", "ün"});

  auto la = alts({"CA-m:lang"}, "la");
  const SuffixEntry* seq2[] = {&sx("VRB"), &sx("CA-m"), &sx("IND1SG")};
  auto r2 = realize("la", la, seq2);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].surface == "langümün");
  CHECK(r2[0].root_surface == "lang");
  CHECK(r2[0].forms == std::vector<std::string>{"", "üm", "ün"});

  // alternants only apply at the root boundary
  const SuffixEntry* seq3[] = {&sx("CONT"), &sx("CA-m")};
  CHECK(realize("la", la, seq3).front().surface == "lakam");
}
