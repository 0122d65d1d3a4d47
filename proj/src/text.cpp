#include "mapu/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace mapu {

std::string normalize(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU: NFC normalizer unavailable");
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  ustr.toLower(icu::Locale::getRoot());
  icu::UnicodeString out = nfc->normalize(ustr, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU: normalization failed");
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::u32string to_u32(std::string_view text) {
  std::u32string out;
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  for (int32_t i = 0; i < ustr.length();) {
    UChar32 cp = ustr.char32At(i);
    out.push_back(static_cast<char32_t>(cp));
    i += U16_LENGTH(cp);
  }
  return out;
}

std::string to_utf8(std::u32string_view text) {
  icu::UnicodeString ustr;
  for (char32_t cp : text) ustr.append(static_cast<UChar32>(cp));
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

bool is_vowel(char32_t cp) {
  switch (cp) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'ü':
    case U'á': case U'é': case U'í': case U'ó': case U'ú':
    case U'ë': case U'ï': case U'ö':
      return true;
    default:
      return false;
  }
}

namespace {

// Letters used by the common Mapudüngun orthographies (Unificado, Azümchefe,
// Ragileo) in lowercase. Digraphs (ch, ll, ng, tr, sh) are sequences of these.
constexpr std::u32string_view kAlphabet = U"abcdefghijklmnopqrstuvwxyzñüëïöáéíóú";

}  // namespace

bool in_alphabet(std::string_view text) {
  if (text.empty()) return false;
  for (char32_t cp : to_u32(text)) {
    if (kAlphabet.find(cp) == std::u32string_view::npos) return false;
  }
  return true;
}

char32_t last_code_point(std::string_view text) {
  if (text.empty()) return 0;
  std::size_t i = text.size() - 1;
  while (i > 0 && (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) --i;
  auto cps = to_u32(text.substr(i));
  return cps.empty() ? 0 : cps.back();
}

bool ends_in_vowel(std::string_view text) { return is_vowel(last_code_point(text)); }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view text) {
  const char* ws = " \t\r\n";
  auto b = text.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = text.find_last_not_of(ws);
  return std::string(text.substr(b, e - b + 1));
}

std::vector<RawToken> tokenize(std::string_view text, std::size_t base_offset) {
  std::vector<RawToken> out;
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  std::string current;
  std::size_t current_start = 0;
  std::size_t byte = 0;
  auto flush = [&] {
    if (!current.empty()) out.push_back({std::move(current), base_offset + current_start});
    current.clear();
  };
  for (int32_t i = 0; i < ustr.length();) {
    UChar32 cp = ustr.char32At(i);
    i += U16_LENGTH(cp);
    std::string piece;
    icu::UnicodeString(cp).toUTF8String(piece);
    // combining marks stay with their base letter
    bool word_char = u_isalpha(cp) || u_getCombiningClass(cp) != 0 ||
                     u_charType(cp) == U_NON_SPACING_MARK;
    if (word_char) {
      if (current.empty()) current_start = byte;
      current += piece;
    } else {
      flush();
    }
    byte += piece.size();
  }
  flush();
  return out;
}

}  // namespace mapu
