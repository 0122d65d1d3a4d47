#include "mapu/generator.hpp"

#include <algorithm>
#include <istream>

#include "mapu/phonology.hpp"
#include "mapu/text.hpp"

namespace mapu {

GenRequest parse_request(std::string_view root, std::string_view tags) {
  GenRequest req;
  auto colon = root.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw std::invalid_argument("request '" + std::string(root) + "' is not lemma:CAT");
  req.lemma = normalize(root.substr(0, colon));
  std::string_view cat = root.substr(colon + 1);
  std::string_view val;
  if (auto plus = cat.find('+'); plus != std::string_view::npos) {
    val = cat.substr(plus + 1);
    cat = cat.substr(0, plus);
  }
  auto c = parse_category(cat);
  if (!c) throw std::invalid_argument("unknown category '" + std::string(cat) + "'");
  req.category = *c;
  if (!val.empty()) {
    auto v = parse_valency(val);
    if (!v || *v == Valency::labile)
      throw std::invalid_argument("valency reading must be intransitive or transitive, got '" +
                                  std::string(val) + "'");
    req.reading = *v;
  }
  for (auto& t : split(tags, ',')) {
    auto tag = trim(t);
    if (!tag.empty()) req.tags.push_back(tag);
  }
  return req;
}

std::string to_string(const GenRequest& req) {
  std::string out = req.lemma + ":" + std::string(to_string(req.category));
  if (req.reading) out += "+" + std::string(to_string(*req.reading));
  out += " ";
  for (std::size_t i = 0; i < req.tags.size(); ++i) out += (i ? "," : "") + req.tags[i];
  return out;
}

std::vector<std::string> Generation::surfaces() const {
  std::vector<std::string> out;
  for (const auto& f : forms)
    if (std::find(out.begin(), out.end(), f.surface) == out.end()) out.push_back(f.surface);
  return out;
}

namespace {

std::vector<const SuffixEntry*> resolve_tag(const MorphotacticTable& table, std::string tag) {
  constexpr std::string_view null_mark = ".ø";
  if (tag.ends_with(null_mark)) tag.resize(tag.size() - null_mark.size());
  if (const auto* s = table.find(tag)) return {s};
  auto by_label = table.by_label(tag);
  if (by_label.empty()) throw UnknownTag(tag);
  return by_label;
}

/// Root readings the request selects.
std::vector<RootReading> select_readings(const Lexicon& lex, const GenRequest& req) {
  std::vector<RootReading> out;
  auto entries = lex.by_lemma(req.lemma);
  if (entries.empty()) throw UnknownLemma("unknown lemma '" + req.lemma + "'");
  for (const auto* e : entries) {
    bool labile = e->valency == Valency::labile;
    bool category_ok = e->category == req.category || (labile && is_verbal(req.category));
    if (!category_ok) continue;
    for (const auto& r : readings(*e)) {
      if (req.reading && r.valency != req.reading) continue;
      // a labile root asked for as VT means its transitive reading
      if (labile && !req.reading && req.category != e->category) {
        if (r.valency != (req.category == LexCategory::VT ? Valency::transitive : Valency::intransitive))
          continue;
      }
      out.push_back(r);
    }
  }
  if (out.empty())
    throw UnknownLemma("no entry '" + req.lemma + "' with category " +
                       std::string(to_string(req.category)));
  return out;
}

}  // namespace

Generation generate(const Lexicon& lex, const MorphotacticTable& table, const GenRequest& req) {
  std::vector<std::vector<const SuffixEntry*>> options;
  for (const auto& t : req.tags) options.push_back(resolve_tag(table, t));
  auto root_readings = select_readings(lex, req);

  Generation gen;
  auto note = [&](Violation v) {
    if (std::find(gen.violations.begin(), gen.violations.end(), v) == gen.violations.end())
      gen.violations.push_back(std::move(v));
  };

  // every combination of tag expansions (labels with several ids)
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    std::vector<const SuffixEntry*> chosen;
    for (std::size_t i = 0; i < options.size(); ++i) chosen.push_back(options[i][choice[i]]);
    std::stable_sort(chosen.begin(), chosen.end(),
                     [](const SuffixEntry* a, const SuffixEntry* b) { return a->slot > b->slot; });

    for (const auto& reading : root_readings) {
      const LexEntry& entry = *reading.entry;
      std::vector<const SuffixEntry*> seq = chosen;
      bool needs_verbal = std::any_of(seq.begin(), seq.end(), [](auto* s) { return s->verbal; });
      bool has_verbaliser = std::any_of(seq.begin(), seq.end(), [](auto* s) {
        return s->slot == MorphotacticTable::kVerbaliserSlot;
      });
      if (!is_verbal(entry.category) && needs_verbal && !has_verbaliser) {
        if (const auto* vrb = table.null_verbaliser()) seq.insert(seq.begin(), vrb);
      }

      std::vector<std::string> ids;
      for (const auto* s : seq) ids.push_back(s->id);

      std::vector<std::string> spellings{entry.lemma};
      spellings.insert(spellings.end(), entry.variants.begin(), entry.variants.end());
      for (const auto& spelling : spellings) {
        for (const auto& r : realize(spelling, entry.alternants, seq)) {
          MorphemeSeq morphemes;
          for (std::size_t i = 0; i < seq.size(); ++i)
            morphemes.push_back({seq[i]->id, r.forms[i], seq[i]->slot});
          auto violations = check_sequence(table, morphemes);
          if (auto v = check_verbalization(table, entry, morphemes)) violations.push_back(*v);
          if (claims_finiteness(table, morphemes))
            if (auto v = check_finite(table, morphemes)) violations.push_back(*v);
          if (auto v = check_causative(table, reading, morphemes)) violations.push_back(*v);
          if (!violations.empty()) {
            for (auto& v : violations) note(std::move(v));
            continue;
          }
          bool dup = std::any_of(gen.forms.begin(), gen.forms.end(), [&](const GeneratedForm& f) {
            return f.surface == r.surface && f.root == reading && f.tags == ids;
          });
          if (!dup) gen.forms.push_back({r.surface, reading, ids});
        }
      }
    }

    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < options[i].size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  if (!gen.forms.empty()) gen.violations.clear();
  return gen;
}

RoundTrip roundtrip_check(const Analyzer& analyzer, const GenRequest& req) {
  auto gen = generate(analyzer.lexicon(), analyzer.table(), req);
  if (gen.empty()) return {false, "nothing-generated"};
  for (const auto& form : gen.forms) {
    auto set = analyzer.analyze(form.surface);
    bool found = std::any_of(set.analyses.begin(), set.analyses.end(), [&](const Analysis& a) {
      return a.root == form.root && a.tags() == form.tags;
    });
    if (!found) return {false, "'" + form.surface + "' does not analyze back to " + to_string(req)};
  }
  return {true, {}};
}

RoundTrip roundtrip_check(const Lexicon& lex, const MorphotacticTable& table, const GenRequest& req) {
  return roundtrip_check(Analyzer(lex, table), req);
}

std::vector<Diagnostic> check_causative_table(const Lexicon& lex, const MorphotacticTable& table,
                                              std::istream& rows, const std::string& name,
                                              const std::string& causative_id) {
  std::vector<Diagnostic> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(rows, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto f = split(t, '\t');
    if (f.size() != 3) throw ParseError(name, lineno, "expected root, category and surfaces");
    auto cat = parse_category(trim(f[1]));
    if (!cat) throw ParseError(name, lineno, "unknown category '" + f[1] + "'");
    std::vector<std::string> expected;
    for (auto& s : split(f[2], ',')) expected.push_back(normalize(trim(s)));
    GenRequest req{normalize(trim(f[0])), *cat, std::nullopt, {causative_id}};
    std::vector<std::string> got;
    try {
      got = generate(lex, table, req).surfaces();
    } catch (const std::exception& e) {
      out.push_back({"causative-table", req.lemma, e.what()});
      continue;
    }
    if (got != expected) {
      std::string g, x;
      for (auto& s : got) g += (g.empty() ? "" : ",") + s;
      for (auto& s : expected) x += (x.empty() ? "" : ",") + s;
      out.push_back({"causative-mismatch", req.lemma, "expected " + x + ", generated " + (g.empty() ? "nothing" : g)});
    }
  }
  return out;
}

}  // namespace mapu
