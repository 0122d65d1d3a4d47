#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mapu {

/// NFC-normalizes and lowercases a UTF-8 string.
std::string normalize(std::string_view text);

/// True iff every code point of `text` is a letter of the Mapudüngun alphabet
/// (after normalization). The empty string is not a valid form.
bool in_alphabet(std::string_view text);

bool is_vowel(char32_t cp);

/// Last code point of a UTF-8 string, or 0 if empty.
char32_t last_code_point(std::string_view text);

/// True if the string ends in a vowel (a e i o u ü).
bool ends_in_vowel(std::string_view text);

std::u32string to_u32(std::string_view text);
std::string to_utf8(std::u32string_view text);

/// Splits on `sep`, keeping empty fields.
std::vector<std::string> split(std::string_view text, char sep);

std::string trim(std::string_view text);

struct RawToken {
  std::string text;          // as it appears, punctuation stripped
  std::size_t byte_offset;   // offset of the first byte in the source line/stream
};

/// Splits text on whitespace and punctuation. Offsets are relative to `text`.
std::vector<RawToken> tokenize(std::string_view text, std::size_t base_offset = 0);

}  // namespace mapu
