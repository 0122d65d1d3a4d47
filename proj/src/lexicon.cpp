#include "mapu/lexicon.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "mapu/text.hpp"

namespace mapu {

namespace {

constexpr std::string_view kNull = "∅";

struct CategoryName {
  LexCategory category;
  std::string_view name;
  std::string_view gloss;
};

constexpr CategoryName kCategories[] = {
    {LexCategory::N, "N", "NN"},       {LexCategory::Aj, "Aj", "AJ"},
    {LexCategory::Av, "Av", "AV"},     {LexCategory::Dem, "Dem", "DP"},
    {LexCategory::Int, "Int", "IP"},   {LexCategory::NU, "NU", "NU"},
    {LexCategory::SP, "SP", "SP"},     {LexCategory::Conj, "Conj", "CJ"},
    {LexCategory::VI, "VI", "IV"},     {LexCategory::VT, "VT", "TV"},
};

std::string field_or_dash(const std::optional<std::string>& s) { return s ? *s : "-"; }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> list_field(std::string_view text) {
  std::vector<std::string> out;
  if (text == "-" || text.empty()) return out;
  for (auto& item : split(text, ',')) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

bool comment_or_blank(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string_view to_string(LexCategory c) {
  for (const auto& n : kCategories)
    if (n.category == c) return n.name;
  return "?";
}

std::string_view gloss_code(LexCategory c) {
  for (const auto& n : kCategories)
    if (n.category == c) return n.gloss;
  return "?";
}

std::optional<LexCategory> parse_category(std::string_view s) {
  for (const auto& n : kCategories)
    if (n.name == s) return n.category;
  return std::nullopt;
}

std::string_view to_string(Valency v) {
  switch (v) {
    case Valency::intransitive: return "intransitive";
    case Valency::transitive: return "transitive";
    case Valency::labile: return "labile";
  }
  return "?";
}

std::optional<Valency> parse_valency(std::string_view s) {
  if (s == "intransitive" || s == "IV") return Valency::intransitive;
  if (s == "transitive" || s == "TV") return Valency::transitive;
  if (s == "labile") return Valency::labile;
  return std::nullopt;
}

std::string_view to_string(ValencyEffect e) {
  switch (e) {
    case ValencyEffect::none: return "none";
    case ValencyEffect::requires_intransitive_base: return "requires_intransitive_base";
    case ValencyEffect::transitivizes: return "transitivizes";
    case ValencyEffect::detransitivizes: return "detransitivizes";
  }
  return "?";
}

std::optional<ValencyEffect> parse_valency_effect(std::string_view s) {
  for (auto e : {ValencyEffect::none, ValencyEffect::requires_intransitive_base,
                 ValencyEffect::transitivizes, ValencyEffect::detransitivizes})
    if (to_string(e) == s) return e;
  return std::nullopt;
}

std::string_view to_string(Source s) {
  switch (s) {
    case Source::K: return "K";
    case Source::S: return "S";
    case Source::G: return "G";
  }
  return "?";
}

const std::string& LexEntry::definition() const {
  static const std::string empty;
  if (gloss_iv) return *gloss_iv;
  if (gloss_tv) return *gloss_tv;
  return empty;
}

std::string to_string(const Alternant& a) {
  switch (a.kind) {
    case Alternant::Kind::replace: return a.trigger + ":" + a.to;
    case Alternant::Kind::add: return a.trigger + ":~" + a.to;
    case Alternant::Kind::rewrite: return a.trigger + ":" + a.from + ">" + a.to;
    case Alternant::Kind::vowel: return a.trigger + ":+" + a.to;
  }
  return {};
}

Alternant parse_alternant(std::string_view text, std::string_view lemma) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw std::invalid_argument("alternant '" + std::string(text) + "' is not trigger:stem");
  Alternant a;
  a.trigger = std::string(text.substr(0, colon));
  std::string spec = normalize(text.substr(colon + 1));
  if (spec.starts_with("~")) {
    a.kind = Alternant::Kind::add;
    a.from = std::string(lemma);
    a.to = spec.substr(1);
  } else if (spec.starts_with("+")) {
    a.kind = Alternant::Kind::vowel;
    a.to = spec.substr(1);
  } else if (auto gt = spec.find('>'); gt != std::string::npos) {
    a.kind = Alternant::Kind::rewrite;
    a.from = spec.substr(0, gt);
    a.to = spec.substr(gt + 1);
    if (a.from.empty())
      throw std::invalid_argument("alternant '" + std::string(text) + "' rewrites an empty ending");
  } else {
    a.kind = Alternant::Kind::replace;
    a.from = std::string(lemma);
    a.to = spec;
  }
  return a;
}

std::string to_string(const Allomorph& a) {
  if (a.is_null()) return std::string(kNull);
  std::string out = a.epenthetic ? "(ü)" + a.form : a.form;
  if (a.context == Allomorph::Context::after_vowel) out += "@V";
  if (a.context == Allomorph::Context::after_consonant) out += "@C";
  return out;
}

Allomorph parse_allomorph(std::string_view text) {
  Allomorph a;
  std::string s = trim(text);
  if (s == kNull || s == "ø" || s == "0") return a;
  if (s.ends_with("@V")) {
    a.context = Allomorph::Context::after_vowel;
    s.resize(s.size() - 2);
  } else if (s.ends_with("@C")) {
    a.context = Allomorph::Context::after_consonant;
    s.resize(s.size() - 2);
  }
  constexpr std::string_view ep = "(ü)";
  s = normalize(s);
  if (s.starts_with(ep)) {
    a.epenthetic = true;
    s.erase(0, ep.size());
  }
  if (s.empty()) throw std::invalid_argument("allomorph '" + std::string(text) + "' is empty");
  a.form = std::move(s);
  return a;
}

std::string SuffixEntry::label() const {
  auto dash = id.find('-');
  return dash == std::string::npos || dash == 0 ? id : id.substr(0, dash);
}

bool SuffixEntry::has_null() const {
  return std::any_of(allomorphs.begin(), allomorphs.end(),
                     [](const Allomorph& a) { return a.is_null(); });
}

ParseError::ParseError(std::string f, std::size_t l, const std::string& what)
    : std::runtime_error(f + ":" + std::to_string(l) + ": " + what), file(std::move(f)), line(l) {}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
  return os << d.code << "\t" << d.subject << "\t" << d.message;
}

std::vector<LexEntry> parse_roots(std::istream& in, const std::string& name) {
  std::vector<LexEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (comment_or_blank(line)) continue;
    auto f = split(line, '\t');
    if (f.size() < 8 || f.size() > 10)
      throw ParseError(name, lineno, "expected 8 to 10 tab-separated fields, got " +
                                         std::to_string(f.size()));
    for (auto& field : f) field = trim(field);
    LexEntry e;
    e.lemma = normalize(f[0]);
    if (f[1] == "VI/VT") {
      e.category = LexCategory::VI;
      e.valency = Valency::labile;
    } else if (auto c = parse_category(f[1])) {
      e.category = *c;
    } else {
      throw ParseError(name, lineno, "unknown category '" + f[1] + "'");
    }
    if (f[2] != "-") {
      auto v = parse_valency(f[2]);
      if (!v) throw ParseError(name, lineno, "unknown valency '" + f[2] + "'");
      e.valency = *v;
    } else if (!e.valency && is_verbal(e.category)) {
      e.valency = e.category == LexCategory::VI ? Valency::intransitive : Valency::transitive;
    }
    if (f[3] != "-" && !f[3].empty()) e.gloss_iv = f[3];
    if (f[4] != "-" && !f[4].empty()) e.gloss_tv = f[4];
    for (auto& v : list_field(f[5])) e.variants.push_back(normalize(v));
    try {
      for (auto& a : list_field(f[6])) e.alternants.push_back(parse_alternant(a, e.lemma));
    } catch (const std::invalid_argument& err) {
      throw ParseError(name, lineno, err.what());
    }
    for (auto& s : list_field(f[7])) {
      std::string t = s;
      if (!t.empty() && t.back() == '.') t.pop_back();
      if (t == "K") e.sources.push_back(Source::K);
      else if (t == "S") e.sources.push_back(Source::S);
      else if (t == "G") e.sources.push_back(Source::G);
      else throw ParseError(name, lineno, "unknown source '" + s + "'");
    }
    if (f.size() > 8) {
      for (auto& s : list_field(f[8])) {
        std::string t = s;
        while (!t.empty() && t.front() == '-') t.erase(0, 1);
        while (!t.empty() && t.back() == '-') t.pop_back();
        e.extracted_suffixes.push_back(normalize(t));
      }
    }
    if (f.size() > 9 && f[9] != "-" && !f[9].empty()) {
      auto c = parse_category(f[9]);
      if (!c) throw ParseError(name, lineno, "unknown initial category '" + f[9] + "'");
      e.initial_category = *c;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SuffixEntry> parse_suffixes(std::istream& in, const std::string& name) {
  std::vector<SuffixEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (comment_or_blank(line)) continue;
    auto f = split(line, '\t');
    if (f.size() < 5 || f.size() > 6)
      throw ParseError(name, lineno, "expected 5 or 6 tab-separated fields, got " +
                                         std::to_string(f.size()));
    for (auto& field : f) field = trim(field);
    SuffixEntry s;
    s.id = f[0];
    if (s.id.empty()) throw ParseError(name, lineno, "empty suffix id");
    try {
      for (auto& a : split(f[1], ',')) s.allomorphs.push_back(parse_allomorph(a));
    } catch (const std::invalid_argument& err) {
      throw ParseError(name, lineno, err.what());
    }
    auto slot = parse_int(f[2]);
    if (!slot) throw ParseError(name, lineno, "slot '" + f[2] + "' is not an integer");
    s.slot = *slot;
    s.excl_class = f[3];
    auto effect = parse_valency_effect(f[4]);
    if (!effect) throw ParseError(name, lineno, "unknown valency effect '" + f[4] + "'");
    s.valency_effect = *effect;
    if (f.size() == 6) {
      for (auto& feat : list_field(f[5])) {
        if (feat == "mood") s.mood = true;
        else if (feat == "person") s.person = true;
        else if (feat == "verbal") s.verbal = true;
        else if (feat.starts_with("fuses=") || feat.starts_with("needs=")) {
          auto n = parse_int(std::string_view(feat).substr(6));
          if (!n) throw ParseError(name, lineno, "bad feature '" + feat + "'");
          (feat[0] == 'f' ? s.fuses : s.needs) = *n;
        } else {
          throw ParseError(name, lineno, "unknown feature '" + feat + "'");
        }
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

void write_roots(std::ostream& out, const std::vector<LexEntry>& roots) {
  out << "# lemma\tcategory\tvalency\tgloss_iv\tgloss_tv\tvariants\talternants\tsources"
         "\textracted\tinitial_category\n";
  for (const auto& e : roots) {
    std::vector<std::string> alts, srcs;
    for (const auto& a : e.alternants) alts.push_back(to_string(a));
    for (auto s : e.sources) srcs.emplace_back(to_string(s));
    out << e.lemma << '\t' << to_string(e.category) << '\t'
        << (e.valency ? std::string(to_string(*e.valency)) : "-") << '\t'
        << field_or_dash(e.gloss_iv) << '\t' << field_or_dash(e.gloss_tv) << '\t'
        << (e.variants.empty() ? "-" : join(e.variants, ",")) << '\t'
        << (alts.empty() ? "-" : join(alts, ",")) << '\t'
        << (srcs.empty() ? "-" : join(srcs, ",")) << '\t'
        << (e.extracted_suffixes.empty() ? "-" : join(e.extracted_suffixes, ",")) << '\t'
        << (e.initial_category ? std::string(to_string(*e.initial_category)) : "-") << '\n';
  }
}

void write_suffixes(std::ostream& out, const std::vector<SuffixEntry>& suffixes) {
  out << "# id\tallomorphs\tslot\texcl_class\tvalency_effect\tfeatures\n";
  for (const auto& s : suffixes) {
    std::vector<std::string> allo, feats;
    for (const auto& a : s.allomorphs) allo.push_back(to_string(a));
    if (s.mood) feats.emplace_back("mood");
    if (s.person) feats.emplace_back("person");
    if (s.verbal) feats.emplace_back("verbal");
    if (s.fuses) feats.push_back("fuses=" + std::to_string(*s.fuses));
    if (s.needs) feats.push_back("needs=" + std::to_string(*s.needs));
    out << s.id << '\t' << join(allo, ",") << '\t' << s.slot << '\t' << s.excl_class << '\t'
        << to_string(s.valency_effect) << '\t' << (feats.empty() ? "-" : join(feats, ","))
        << '\n';
  }
}

Lexicon::Lexicon(std::vector<LexEntry> roots, std::vector<SuffixEntry> suffixes)
    : roots_(std::move(roots)), suffixes_(std::move(suffixes)) {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    lemma_index_.emplace(roots_[i].lemma, i);
    for (const auto& v : roots_[i].variants) variant_index_.emplace(v, i);
  }
  for (std::size_t i = 0; i < suffixes_.size(); ++i) {
    suffix_index_.emplace(suffixes_[i].id, i);
    for (const auto& a : suffixes_[i].allomorphs) {
      allomorph_index_.emplace(a.form, i);
      if (a.epenthetic) allomorph_index_.emplace("ü" + a.form, i);
    }
  }
}

namespace {

auto entry_key(const LexEntry* e) {
  return std::make_tuple(e->lemma, static_cast<int>(e->category),
                         e->valency ? static_cast<int>(*e->valency) : -1);
}

void sort_entries(std::vector<const LexEntry*>& v) {
  std::sort(v.begin(), v.end(),
            [](const LexEntry* a, const LexEntry* b) { return entry_key(a) < entry_key(b); });
}

}  // namespace

std::vector<const LexEntry*> Lexicon::lookup_root(std::string_view surface) const {
  std::vector<const LexEntry*> lemma_hits = by_lemma(surface);
  std::vector<const LexEntry*> variant_hits;
  auto [b, e] = variant_index_.equal_range(surface);
  for (auto it = b; it != e; ++it) {
    const LexEntry* entry = &roots_[it->second];
    if (std::find(lemma_hits.begin(), lemma_hits.end(), entry) == lemma_hits.end() &&
        std::find(variant_hits.begin(), variant_hits.end(), entry) == variant_hits.end())
      variant_hits.push_back(entry);
  }
  sort_entries(variant_hits);
  lemma_hits.insert(lemma_hits.end(), variant_hits.begin(), variant_hits.end());
  return lemma_hits;
}

std::vector<const LexEntry*> Lexicon::by_lemma(std::string_view lemma) const {
  std::vector<const LexEntry*> out;
  auto [b, e] = lemma_index_.equal_range(lemma);
  for (auto it = b; it != e; ++it) out.push_back(&roots_[it->second]);
  sort_entries(out);
  return out;
}

const SuffixEntry* Lexicon::suffix(std::string_view id) const {
  auto it = suffix_index_.find(id);
  return it == suffix_index_.end() ? nullptr : &suffixes_[it->second];
}

std::vector<const SuffixEntry*> Lexicon::suffixes_by_allomorph(std::string_view surface) const {
  std::vector<const SuffixEntry*> out;
  auto [b, e] = allomorph_index_.equal_range(surface);
  for (auto it = b; it != e; ++it) {
    const SuffixEntry* s = &suffixes_[it->second];
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<Diagnostic> validate_lexicon(const Lexicon& lex) {
  std::vector<Diagnostic> out;
  auto add = [&](std::string code, std::string subject, std::string msg) {
    out.push_back({std::move(code), std::move(subject), std::move(msg)});
  };

  std::set<std::tuple<std::string, int, int>> seen;
  for (const auto& e : lex.roots()) {
    const std::string subject = e.lemma.empty() ? "<empty>" : e.lemma;
    if (e.lemma.empty()) add("empty-lemma", subject, "root has an empty lemma");
    else if (!in_alphabet(e.lemma))
      add("bad-alphabet", subject, "lemma contains characters outside the alphabet");
    for (const auto& v : e.variants) {
      if (!in_alphabet(v)) add("bad-alphabet", subject, "variant '" + v + "' is not spelled in the alphabet");
      if (v == e.lemma) add("variant-equals-lemma", subject, "variant repeats the lemma");
    }
    if (!is_verbal(e.category) && e.valency)
      add("valency-on-nonverbal", subject, "non-verbal root carries a valency");
    if (is_verbal(e.category) && !e.valency)
      add("verbal-missing-valency", subject, "verbal root has no valency");
    if (e.valency && ((e.category == LexCategory::VI && *e.valency == Valency::transitive) ||
                      (e.category == LexCategory::VT && *e.valency == Valency::intransitive)))
      add("valency-category-mismatch", subject, "valency contradicts the category");
    if (e.valency == Valency::labile) {
      if (!e.gloss_iv) add("labile-missing-intransitive-gloss", subject, "labile root needs an intransitive gloss");
      if (!e.gloss_tv) add("labile-missing-transitive-gloss", subject, "labile root needs a transitive gloss");
    }
    for (const auto& a : e.alternants) {
      if (a.to.empty()) add("alternant-empty", subject, "alternant " + to_string(a) + " is empty");
      else if ((a.kind == Alternant::Kind::replace || a.kind == Alternant::Kind::add) && a.to == e.lemma)
        add("alternant-equals-lemma", subject, "alternant " + to_string(a) + " repeats the lemma");
      else if (a.kind == Alternant::Kind::rewrite && a.from == a.to)
        add("alternant-equals-lemma", subject, "alternant " + to_string(a) + " rewrites to itself");
      if (a.kind != Alternant::Kind::vowel && !a.to.empty() && !in_alphabet(a.to))
        add("bad-alphabet", subject, "alternant " + to_string(a) + " is not spelled in the alphabet");
      if (!lex.suffix(a.trigger)) {
        bool label_match = std::any_of(lex.suffixes().begin(), lex.suffixes().end(),
                                       [&](const SuffixEntry& s) { return s.label() == a.trigger; });
        if (!label_match)
          add("unknown-trigger", subject, "alternant trigger '" + a.trigger + "' is not a suffix");
      }
    }
    auto key = std::make_tuple(e.lemma, static_cast<int>(e.category),
                               e.valency ? static_cast<int>(*e.valency) : -1);
    if (!seen.insert(key).second)
      add("duplicate-entry", subject,
          "another entry has the same lemma, category " + std::string(to_string(e.category)) +
              " and valency");
  }

  std::set<std::string> ids;
  for (const auto& s : lex.suffixes()) {
    if (!ids.insert(s.id).second) add("duplicate-suffix", s.id, "suffix id defined twice");
    if (s.slot < 1 || s.slot > 36)
      add("slot-out-of-range", s.id, "slot " + std::to_string(s.slot) + " is outside 1..36");
    if (s.fuses && (*s.fuses < 1 || *s.fuses > 36))
      add("slot-out-of-range", s.id, "fused slot " + std::to_string(*s.fuses) + " is outside 1..36");
    if (s.needs && (*s.needs < 1 || *s.needs > 36))
      add("slot-out-of-range", s.id, "required slot " + std::to_string(*s.needs) + " is outside 1..36");
    if (s.allomorphs.empty()) add("no-allomorphs", s.id, "suffix has no allomorphs");
    if (s.has_null() && !((s.person && s.slot == 3) || s.slot == 36))
      add("null-allomorph-not-licensed", s.id,
          "null allomorphs are only licensed for person (slot 3) and the verbaliser (slot 36)");
    for (const auto& a : s.allomorphs)
      if (!a.is_null() && !in_alphabet(a.form))
        add("bad-alphabet", s.id, "allomorph '" + a.form + "' is not spelled in the alphabet");
  }
  return out;
}

Lexicon load_lexicon(const std::filesystem::path& root_file,
                     const std::filesystem::path& suffix_file) {
  std::ifstream roots_in(root_file);
  if (!roots_in) throw std::runtime_error("cannot open " + root_file.string());
  std::ifstream suffixes_in(suffix_file);
  if (!suffixes_in) throw std::runtime_error("cannot open " + suffix_file.string());
  Lexicon lex(parse_roots(roots_in, root_file.string()),
              parse_suffixes(suffixes_in, suffix_file.string()));
  auto diags = validate_lexicon(lex);
  if (!diags.empty()) {
    std::ostringstream msg;
    msg << diags.size() << " lexicon error(s); first: " << diags.front().code << " in '"
        << diags.front().subject << "': " << diags.front().message;
    throw ValidationError(msg.str());
  }
  return lex;
}

}  // namespace mapu
