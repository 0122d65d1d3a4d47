#include "mapu/phonology.hpp"

#include <algorithm>

#include "mapu/text.hpp"

namespace mapu {

namespace {

bool triggered_by(const Alternant& a, const SuffixEntry& suffix) {
  return a.trigger == suffix.id || a.trigger == suffix.label();
}

template <typename T>
void push_unique(std::vector<T>& v, T item) {
  if (std::find(v.begin(), v.end(), item) == v.end()) v.push_back(std::move(item));
}

}  // namespace

std::vector<std::string> alternate_stem(std::string_view stem, const SuffixEntry& suffix,
                                        std::span<const Alternant> alternants) {
  std::vector<std::string> stems{std::string(stem)};
  for (const auto& a : alternants) {
    if (!triggered_by(a, suffix)) continue;
    std::vector<std::string> next;
    for (const auto& s : stems) {
      switch (a.kind) {
        case Alternant::Kind::replace:
          push_unique(next, s == a.from ? a.to : s);
          break;
        case Alternant::Kind::add:
          push_unique(next, s);
          if (s == a.from) push_unique(next, a.to);
          break;
        case Alternant::Kind::rewrite:
          if (s.ends_with(a.from))
            push_unique(next, s.substr(0, s.size() - a.from.size()) + a.to);
          else
            push_unique(next, s);
          break;
        case Alternant::Kind::vowel:
          push_unique(next, s);
          break;
      }
    }
    stems = std::move(next);
  }
  return stems;
}

std::string epenthetic_vowel(const SuffixEntry& suffix, std::span<const Alternant> alternants) {
  for (const auto& a : alternants)
    if (a.kind == Alternant::Kind::vowel && triggered_by(a, suffix)) return a.to;
  return "ü";
}

std::vector<Junction> join_allomorph(std::string_view stem, const Allomorph& allomorph,
                                     const SuffixEntry& suffix,
                                     std::span<const Alternant> alternants,
                                     bool root_boundary) {
  std::vector<Junction> out;
  if (allomorph.is_null()) {
    out.push_back({std::string(stem), ""});
    return out;
  }
  std::vector<std::string> stems =
      root_boundary ? alternate_stem(stem, suffix, alternants)
                    : std::vector<std::string>{std::string(stem)};
  const std::string vowel =
      root_boundary ? epenthetic_vowel(suffix, alternants) : std::string("ü");
  for (auto& base : stems) {
    const bool vowel_final = ends_in_vowel(base);
    if (allomorph.context == Allomorph::Context::after_vowel && !vowel_final) continue;
    if (allomorph.context == Allomorph::Context::after_consonant && vowel_final) continue;
    std::string realized = allomorph.epenthetic && !vowel_final ? vowel + allomorph.form
                                                                : allomorph.form;
    push_unique(out, Junction{std::move(base), std::move(realized)});
  }
  return out;
}

std::vector<std::string> join(std::string_view stem, const SuffixEntry& suffix,
                              std::span<const Alternant> alternants) {
  std::vector<std::string> out;
  for (const auto& allo : suffix.allomorphs)
    for (auto& j : join_allomorph(stem, allo, suffix, alternants))
      push_unique(out, j.base + j.suffix);
  return out;
}

std::vector<std::string> split(std::string_view surface, const SuffixEntry& suffix,
                               std::span<const Alternant> alternants) {
  std::vector<std::string> out;
  auto consider = [&](const std::string& candidate) {
    if (candidate.empty()) return;
    auto joined = join(candidate, suffix, alternants);
    if (std::find(joined.begin(), joined.end(), surface) != joined.end())
      push_unique(out, candidate);
  };
  const std::string vowel = epenthetic_vowel(suffix, alternants);
  for (const auto& allo : suffix.allomorphs) {
    std::vector<std::string> realized;
    if (allo.epenthetic) realized.push_back(vowel + allo.form);
    realized.push_back(allo.form);
    for (const auto& r : realized) {
      if (!surface.ends_with(r) || surface.size() == r.size()) continue;
      std::string prefix(surface.substr(0, surface.size() - r.size()));
      consider(prefix);
      // undo lexical alternations
      for (const auto& a : alternants) {
        if (!triggered_by(a, suffix)) continue;
        if ((a.kind == Alternant::Kind::replace || a.kind == Alternant::Kind::add) &&
            prefix == a.to)
          consider(a.from);
        if (a.kind == Alternant::Kind::rewrite && prefix.ends_with(a.to))
          consider(prefix.substr(0, prefix.size() - a.to.size()) + a.from);
      }
    }
  }
  return out;
}

std::vector<Realization> realize(std::string_view root, std::span<const Alternant> alternants,
                                 std::span<const SuffixEntry* const> suffixes) {
  struct Partial {
    Realization r;
    bool at_root = true;  // no overt suffix attached yet
  };
  std::vector<Partial> states{{Realization{std::string(root), std::string(root), {}}, true}};
  for (const SuffixEntry* suffix : suffixes) {
    std::vector<Partial> next;
    for (const auto& st : states) {
      for (const auto& allo : suffix->allomorphs) {
        if (allo.is_null()) {
          Partial p = st;
          p.r.forms.emplace_back();
          next.push_back(std::move(p));
          continue;
        }
        for (auto& j : join_allomorph(st.r.surface, allo, *suffix, alternants, st.at_root)) {
          Partial p = st;
          if (st.at_root) p.r.root_surface = j.base;
          p.r.surface = j.base + j.suffix;
          p.r.forms.push_back(j.suffix);
          p.at_root = false;
          next.push_back(std::move(p));
        }
      }
    }
    states = std::move(next);
  }
  std::vector<Realization> out;
  for (auto& st : states) push_unique(out, std::move(st.r));
  return out;
}

}  // namespace mapu
