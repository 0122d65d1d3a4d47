#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mapu/lexicon.hpp"

namespace mapu {

/// Stems a root takes before `suffix`, canonical first. Only alternants whose
/// trigger names the suffix (by id or gloss label) fire.
std::vector<std::string> alternate_stem(std::string_view stem, const SuffixEntry& suffix,
                                        std::span<const Alternant> alternants);

/// Vowel inserted before an epenthetic allomorph of `suffix`: ü unless an
/// alternant overrides it for this root.
std::string epenthetic_vowel(const SuffixEntry& suffix, std::span<const Alternant> alternants);

struct Junction {
  std::string base;    // stem after alternation
  std::string suffix;  // realized allomorph, with any epenthetic vowel

  bool operator==(const Junction&) const = default;
};

/// Realizations of one allomorph after `stem`. Alternants apply to `stem`
/// only when `root_boundary` is set. Empty if the allomorph's context does
/// not match the base.
std::vector<Junction> join_allomorph(std::string_view stem, const Allomorph& allomorph,
                                     const SuffixEntry& suffix,
                                     std::span<const Alternant> alternants,
                                     bool root_boundary = true);

/// Every well-formed surface of `stem` + `suffix` across its allomorphs.
std::vector<std::string> join(std::string_view stem, const SuffixEntry& suffix,
                              std::span<const Alternant> alternants = {});

/// Every stem s with `surface` in join(s, suffix, alternants). Over-generates;
/// callers filter against the lexicon.
std::vector<std::string> split(std::string_view surface, const SuffixEntry& suffix,
                               std::span<const Alternant> alternants = {});

struct Realization {
  std::string surface;
  std::string root_surface;         // root after alternation
  std::vector<std::string> forms;   // realized allomorph per suffix, "" for null

  bool operator==(const Realization&) const = default;
};

/// Realizes root + suffixes left to right. Alternants fire at the boundary
/// between the root and the first overt suffix.
std::vector<Realization> realize(std::string_view root, std::span<const Alternant> alternants,
                                 std::span<const SuffixEntry* const> suffixes);

}  // namespace mapu
