#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 text toolkit shared by the extractor (entity decoding,
// whitespace normalization) and the classifier (lowercasing, canonical
// composition, tokenizing). No locale dependence anywhere.
namespace pxc::text {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes UTF-8; invalid sequences become U+FFFD (one replacement per
// rejected byte).
std::u32string decode_utf8_lossy(std::string_view s);
std::string encode_utf8(const std::u32string& s);
void append_utf8(std::string& out, char32_t cp);

// Re-encodes arbitrary bytes as valid UTF-8 (invalid sequences replaced).
std::string sanitize_utf8(std::string_view s);

// Lowercasing for ASCII, Latin-1 Supplement, and Latin Extended-A. Other
// codepoints pass through unchanged.
char32_t to_lower(char32_t cp);
std::string lowercase(std::string_view utf8);

// Canonical composition of combining-mark sequences for the Latin-1
// Supplement / Latin Extended-A repertoire (covers the accented letters of
// the supported European languages). Sequences outside the table pass
// through as-is.
std::string compose_latin(std::string_view utf8);

bool is_space(char32_t cp);  // ASCII whitespace plus U+00A0

// Collapses whitespace runs (including NBSP) to single spaces and trims.
std::string collapse_whitespace(std::string_view utf8);

// Decodes numeric character references and the common named entities
// (amp, lt, gt, quot, apos, nbsp, ...). Unknown references pass through.
std::string decode_entities(std::string_view s);

// Removes <...> tag spans; used to strip embedded markup out of description
// values. Not a parser: unterminated '<' is dropped to end of string.
std::string strip_markup(std::string_view s);

// Truncates to at most max_chars codepoints, never splitting a UTF-8
// sequence.
std::string truncate_chars(std::string_view utf8, size_t max_chars);

std::vector<std::string> tokenize_whitespace(std::string_view utf8);

std::string trim(std::string_view s);  // ASCII whitespace trim
std::string ascii_lower(std::string_view s);

}  // namespace pxc::text
