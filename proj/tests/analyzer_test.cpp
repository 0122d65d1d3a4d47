#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "mapu/analyzer.hpp"
#include "mapu/generator.hpp"
#include "oracle.hpp"

using namespace mapu;
using fixtures::contains_gloss;

namespace {

const Analyzer& analyzer() { return fixtures::shipped().analyzer; }

std::vector<std::string> glosses(const AnalysisSet& s) {
  std::vector<std::string> out;
  for (const auto& a : s.analyses) out.push_back(a.gloss);
  return out;
}

}  // namespace

TEST_CASE("worked examples") {
  auto tripay = analyzer().analyze("tripay");
  CHECK(glosses(tripay) == std::vector<std::string>{"-IV.tripa +IND +3.ø"});
  CHECK(tripay.ambiguity() == 1);
  CHECK(tripay.analyses[0].finite);
  CHECK(tripay.analyses[0].segmentation() == "tripa-y");
  CHECK(tripay.analyses[0].tags() == std::vector<std::string>{"IND", "3"});

  CHECK(contains_gloss(analyzer().analyze("küpalün"), "-IV.küpa +CA +IND1SG"));
  CHECK(contains_gloss(analyzer().analyze("düngufinge"), "-NN.düngu +VRB.ø +3P +IMP2SG"));
  CHECK(contains_gloss(analyzer().analyze("pichikael"), "-AJ.pichi +CONT +OVN"));
  CHECK(contains_gloss(analyzer().analyze("nünieñmarputueyiñmu"),
                       "-TV.nü +PRPS +IO +ITR +LOC +RE +INV +IND +1.ø +PL +3A"));
}

TEST_CASE("alternant stems") {
  auto set = analyzer().analyze("langümün");
  const Analysis* hit = nullptr;
  for (const auto& a : set.analyses)
    if (a.gloss == "-AJ.la +VRB.ø +CA +IND1SG") hit = &a;
  REQUIRE(hit);
  CHECK(hit->root_surface == "lang");
  CHECK(hit->verbalized);
  CHECK(hit->segmentation() == "lang-üm-ün");
  // the exhaustive segmenter finds exactly the same readings
  CHECK(oracle::keys_of(set) == oracle::segment(analyzer().lexicon(), analyzer().table(), "langümün"));

  CHECK(contains_gloss(analyzer().analyze("nelküm"), "-AJ.nel +VRB.ø +CA"));
  CHECK(contains_gloss(analyzer().analyze("nelüm"), "-AJ.nel +VRB.ø +CA"));
  CHECK(!analyzer().analyze("lam").analyzable());
}

TEST_CASE("causatives never take the transitive reading of a labile root") {
  auto set = analyzer().analyze("mongeli");
  REQUIRE(set.analyzable());
  for (const auto& a : set.analyses) {
    CHECK(a.root.entry->lemma == "monge");
    CHECK(a.root.valency == Valency::intransitive);
  }
  CHECK(oracle::keys_of(set) == oracle::segment(analyzer().lexicon(), analyzer().table(), "mongeli"));
}

TEST_CASE("labile roots with neutral inflection are ambiguous") {
  auto set = analyzer().analyze("ayey");
  CHECK(glosses(set) == std::vector<std::string>{"-IV.aye +IND +3.ø", "-TV.aye +IND +3.ø"});
}

TEST_CASE("input errors") {
  try {
    analyzer().analyze("");
    FAIL("expected an error");
  } catch (const AnalysisError& e) {
    CHECK(e.code == "empty-form");
  }
  try {
    analyzer().analyze("abc1");
    FAIL("expected an error");
  } catch (const AnalysisError& e) {
    CHECK(e.code == "bad-alphabet");
  }
  CHECK_THROWS_AS(analyzer().analyze("tri pay"), AnalysisError);
}

TEST_CASE("input is normalized before analysis") {
  // decomposed ü and upper case
  auto set = analyzer().analyze("KU\xCC\x88PALU\xCC\x88N");
  CHECK(contains_gloss(set, "-IV.küpa +CA +IND1SG"));
  CHECK(set.input == "küpalün");
}

TEST_CASE("gloss rendering") {
  const auto& s = fixtures::shipped();
  const auto& chadi = *s.lex.by_lemma("chadi").front();
  CHECK(render_gloss(readings(chadi).front(), {}, s.table) == "-NN.chadi");
  CHECK(glosses(analyzer().analyze("chadi")) == std::vector<std::string>{"-NN.chadi"});
  const auto& fa = *s.lex.by_lemma("fa").front();
  CHECK(render_gloss(readings(fa).front(), {{"VRB", "", 36}, {"CA-m", "m", 34}}, s.table) == "-DP.fa +VRB.ø +CA");
}

TEST_CASE("output order: fewer morphemes first, then gloss") {
  for (const char* w : {"ayey", "konüm", "mongeli", "puwüm", "nünieñmarputueyiñmu", "umawün"}) {
    auto set = analyzer().analyze(w);
    for (std::size_t i = 1; i < set.analyses.size(); ++i) {
      const auto& a = set.analyses[i - 1];
      const auto& b = set.analyses[i];
      CHECK((a.morphemes.size() < b.morphemes.size() ||
             (a.morphemes.size() == b.morphemes.size() && a.gloss <= b.gloss)));
    }
  }
}

TEST_CASE("every analysis is sound, ordered and finite when it claims to be") {
  const auto& s = fixtures::shipped();
  std::mt19937 rng(3);
  std::vector<std::string> ids;
  for (const auto& sx : s.table.suffixes()) ids.push_back(sx.id);
  std::size_t forms = 0;
  for (int round = 0; round < 1500; ++round) {
    const auto& e = s.lex.roots()[rng() % s.lex.roots().size()];
    GenRequest req{e.lemma, e.category, std::nullopt, {}};
    int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) req.tags.push_back(ids[rng() % ids.size()]);
    Generation g;
    try {
      g = generate(s.lex, s.table, req);
    } catch (const std::exception&) {
      continue;
    }
    for (const auto& u : g.surfaces()) {
      ++forms;
      auto set = analyzer().analyze(u);
      CHECK(set.analyzable());
      for (const auto& a : set.analyses) {
        std::string rebuilt = a.root_surface;
        for (const auto& m : a.morphemes) rebuilt += m.form;
        CHECK(rebuilt == u);
        CHECK(check_sequence(s.table, a.morphemes).empty());
        if (claims_finiteness(s.table, a.morphemes)) CHECK(!check_finite(s.table, a.morphemes));
        CHECK(!check_causative(s.table, a.root, a.morphemes));
        CHECK(a.gloss == render_gloss(a));
      }
    }
  }
  CHECK(forms > 100);
}

TEST_CASE("analyze_corpus") {
  SUBCASE("the four worked forms") {
    std::istringstream in("pichikael düngufinge! tripay, küpalün.");
    std::vector<TokenResult> got;
    auto sum = analyze_corpus(analyzer(), in, [&](const TokenResult& t) { got.push_back(t); });
    REQUIRE(got.size() == 4);
    CHECK(sum.tokens == 4);
    CHECK(sum.unanalyzable == 0);
    CHECK(got[0].token == "pichikael");
    CHECK(got[1].token == "düngufinge");
    CHECK(got[2].offset == std::string("pichikael düngufinge! ").size());
    std::size_t total = 0;
    for (const auto& t : got) total += t.result.ambiguity();
    CHECK(sum.analyses == total);
    CHECK(sum.mean_ambiguity() == doctest::Approx(static_cast<double>(total) / 4));
  }
  SUBCASE("empty stream") {
    std::istringstream in("");
    auto sum = analyze_corpus(analyzer(), in, [](const TokenResult&) {});
    CHECK(sum.tokens == 0);
    CHECK(sum.unanalyzable == 0);
    CHECK(sum.mean_ambiguity() == 0.0);
  }
  SUBCASE("unknown token") {
    std::istringstream in("tripay zzz\nküpalün\n");
    std::vector<std::string> order;
    auto sum = analyze_corpus(analyzer(), in, [&](const TokenResult& t) { order.push_back(t.token); });
    CHECK(sum.tokens == 3);
    CHECK(sum.unanalyzable == 1);
    CHECK(order == std::vector<std::string>{"tripay", "zzz", "küpalün"});
  }
}
