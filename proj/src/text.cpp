#include "pxc/text.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <unordered_map>

namespace pxc::text {

namespace {

// Returns the codepoint at s[i] and advances i. Invalid bytes yield U+FFFD
// and advance by one byte.
char32_t next_codepoint(std::string_view s, size_t& i) {
  const auto byte = [&](size_t k) -> uint8_t {
    return static_cast<uint8_t>(s[k]);
  };
  uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kReplacementChar;
  }
  if (i + len > s.size()) {
    ++i;
    return kReplacementChar;
  }
  for (size_t k = 1; k < len; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) {
      ++i;
      return kReplacementChar;
    }
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  // Overlong encodings, surrogates, and out-of-range values are invalid.
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++i;
    return kReplacementChar;
  }
  i += len;
  return cp;
}

// Canonical composition pairs (base, combining mark) -> precomposed, for the
// Latin-1 Supplement and Latin Extended-A repertoire.
struct ComposeKey {
  char32_t base;
  char32_t mark;
  bool operator==(const ComposeKey&) const = default;
};

struct ComposeKeyHash {
  size_t operator()(const ComposeKey& k) const {
    return static_cast<size_t>(k.base) * 0x10001u + k.mark;
  }
};

const std::unordered_map<ComposeKey, char32_t, ComposeKeyHash>& compose_table() {
  static const std::unordered_map<ComposeKey, char32_t, ComposeKeyHash> table = {
      // grave U+0300
      {{U'A', 0x300}, 0xC0}, {{U'E', 0x300}, 0xC8}, {{U'I', 0x300}, 0xCC},
      {{U'O', 0x300}, 0xD2}, {{U'U', 0x300}, 0xD9},
      {{U'a', 0x300}, 0xE0}, {{U'e', 0x300}, 0xE8}, {{U'i', 0x300}, 0xEC},
      {{U'o', 0x300}, 0xF2}, {{U'u', 0x300}, 0xF9},
      // acute U+0301
      {{U'A', 0x301}, 0xC1}, {{U'E', 0x301}, 0xC9}, {{U'I', 0x301}, 0xCD},
      {{U'O', 0x301}, 0xD3}, {{U'U', 0x301}, 0xDA}, {{U'Y', 0x301}, 0xDD},
      {{U'a', 0x301}, 0xE1}, {{U'e', 0x301}, 0xE9}, {{U'i', 0x301}, 0xED},
      {{U'o', 0x301}, 0xF3}, {{U'u', 0x301}, 0xFA}, {{U'y', 0x301}, 0xFD},
      {{U'C', 0x301}, 0x106}, {{U'c', 0x301}, 0x107},
      {{U'N', 0x301}, 0x143}, {{U'n', 0x301}, 0x144},
      {{U'S', 0x301}, 0x15A}, {{U's', 0x301}, 0x15B},
      {{U'Z', 0x301}, 0x179}, {{U'z', 0x301}, 0x17A},
      // circumflex U+0302
      {{U'A', 0x302}, 0xC2}, {{U'E', 0x302}, 0xCA}, {{U'I', 0x302}, 0xCE},
      {{U'O', 0x302}, 0xD4}, {{U'U', 0x302}, 0xDB},
      {{U'a', 0x302}, 0xE2}, {{U'e', 0x302}, 0xEA}, {{U'i', 0x302}, 0xEE},
      {{U'o', 0x302}, 0xF4}, {{U'u', 0x302}, 0xFB},
      // tilde U+0303
      {{U'A', 0x303}, 0xC3}, {{U'N', 0x303}, 0xD1}, {{U'O', 0x303}, 0xD5},
      {{U'a', 0x303}, 0xE3}, {{U'n', 0x303}, 0xF1}, {{U'o', 0x303}, 0xF5},
      // macron U+0304
      {{U'A', 0x304}, 0x100}, {{U'a', 0x304}, 0x101},
      {{U'E', 0x304}, 0x112}, {{U'e', 0x304}, 0x113},
      {{U'I', 0x304}, 0x12A}, {{U'i', 0x304}, 0x12B},
      {{U'O', 0x304}, 0x14C}, {{U'o', 0x304}, 0x14D},
      {{U'U', 0x304}, 0x16A}, {{U'u', 0x304}, 0x16B},
      // diaeresis U+0308
      {{U'A', 0x308}, 0xC4}, {{U'E', 0x308}, 0xCB}, {{U'I', 0x308}, 0xCF},
      {{U'O', 0x308}, 0xD6}, {{U'U', 0x308}, 0xDC},
      {{U'a', 0x308}, 0xE4}, {{U'e', 0x308}, 0xEB}, {{U'i', 0x308}, 0xEF},
      {{U'o', 0x308}, 0xF6}, {{U'u', 0x308}, 0xFC},
      {{U'y', 0x308}, 0xFF}, {{U'Y', 0x308}, 0x178},
      // ring U+030A
      {{U'A', 0x30A}, 0xC5}, {{U'a', 0x30A}, 0xE5},
      {{U'U', 0x30A}, 0x16E}, {{U'u', 0x30A}, 0x16F},
      // caron U+030C
      {{U'C', 0x30C}, 0x10C}, {{U'c', 0x30C}, 0x10D},
      {{U'S', 0x30C}, 0x160}, {{U's', 0x30C}, 0x161},
      {{U'Z', 0x30C}, 0x17D}, {{U'z', 0x30C}, 0x17E},
      // cedilla U+0327
      {{U'C', 0x327}, 0xC7}, {{U'c', 0x327}, 0xE7},
      {{U'S', 0x327}, 0x15E}, {{U's', 0x327}, 0x15F},
  };
  return table;
}

const std::unordered_map<std::string_view, char32_t>& named_entities() {
  static const std::unordered_map<std::string_view, char32_t> table = {
      {"amp", U'&'},    {"lt", U'<'},      {"gt", U'>'},
      {"quot", U'"'},   {"apos", U'\''},   {"nbsp", 0xA0},
      {"copy", 0xA9},   {"reg", 0xAE},     {"trade", 0x2122},
      {"deg", 0xB0},    {"plusmn", 0xB1},  {"frac12", 0xBD},
      {"times", 0xD7},  {"divide", 0xF7},  {"szlig", 0xDF},
      {"auml", 0xE4},   {"ouml", 0xF6},    {"uuml", 0xFC},
      {"Auml", 0xC4},   {"Ouml", 0xD6},    {"Uuml", 0xDC},
      {"eacute", 0xE9}, {"egrave", 0xE8},  {"ecirc", 0xEA},
      {"agrave", 0xE0}, {"acirc", 0xE2},   {"ccedil", 0xE7},
      {"ndash", 0x2013},{"mdash", 0x2014}, {"hellip", 0x2026},
      {"lsquo", 0x2018},{"rsquo", 0x2019}, {"ldquo", 0x201C},
      {"rdquo", 0x201D},{"bull", 0x2022},  {"euro", 0x20AC},
      {"pound", 0xA3},  {"yen", 0xA5},     {"cent", 0xA2},
      {"sect", 0xA7},   {"middot", 0xB7},  {"laquo", 0xAB},
      {"raquo", 0xBB},
  };
  return table;
}

}  // namespace

void append_utf8(std::string& out, char32_t cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacementChar;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::u32string decode_utf8_lossy(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) out.push_back(next_codepoint(s, i));
  return out;
}

std::string encode_utf8(const std::u32string& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

std::string sanitize_utf8(std::string_view s) {
  return encode_utf8(decode_utf8_lossy(s));
}

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'A' && cp <= U'Z') ? cp + 0x20 : cp;
  }
  // Latin-1 Supplement uppercase block, multiplication sign excluded.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A alternates upper/lower pairs.
  if (cp >= 0x100 && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;  // Y with diaeresis
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  return cp;
}

std::string lowercase(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  size_t i = 0;
  while (i < utf8.size()) append_utf8(out, to_lower(next_codepoint(utf8, i)));
  return out;
}

std::string compose_latin(std::string_view utf8) {
  std::u32string cps = decode_utf8_lossy(utf8);
  std::string out;
  out.reserve(utf8.size());
  const auto& table = compose_table();
  size_t i = 0;
  while (i < cps.size()) {
    if (i + 1 < cps.size()) {
      auto it = table.find(ComposeKey{cps[i], cps[i + 1]});
      if (it != table.end()) {
        append_utf8(out, it->second);
        i += 2;
        continue;
      }
    }
    append_utf8(out, cps[i]);
    ++i;
  }
  return out;
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0xA0;
}

std::string collapse_whitespace(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  bool pending_space = false;
  bool seen_char = false;
  size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = next_codepoint(utf8, i);
    if (is_space(cp)) {
      pending_space = seen_char;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, cp);
    seen_char = true;
  }
  return out;
}

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i]);
      ++i;
      continue;
    }
    size_t end = s.find(';', i + 1);
    // References are short; a distant or missing ';' means plain '&'.
    if (end == std::string_view::npos || end - i > 32) {
      out.push_back('&');
      ++i;
      continue;
    }
    std::string_view body = s.substr(i + 1, end - i - 1);
    char32_t cp = 0;
    bool ok = false;
    if (!body.empty() && body[0] == '#') {
      std::string_view digits = body.substr(1);
      int base = 10;
      if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
        base = 16;
        digits = digits.substr(1);
      }
      if (!digits.empty() && digits.size() <= 8) {
        char32_t value = 0;
        ok = true;
        for (char c : digits) {
          int d;
          if (c >= '0' && c <= '9') d = c - '0';
          else if (base == 16 && c >= 'a' && c <= 'f') d = c - 'a' + 10;
          else if (base == 16 && c >= 'A' && c <= 'F') d = c - 'A' + 10;
          else { ok = false; break; }
          value = value * base + d;
          if (value > 0x10FFFF) { ok = false; break; }
        }
        if (ok) cp = value == 0 ? kReplacementChar : value;
      }
    } else {
      auto it = named_entities().find(body);
      if (it != named_entities().end()) {
        cp = it->second;
        ok = true;
      }
    }
    if (ok) {
      append_utf8(out, cp);
      i = end + 1;
    } else {
      out.push_back('&');
      ++i;
    }
  }
  return out;
}

std::string strip_markup(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_tag = false;
  for (char c : s) {
    if (in_tag) {
      if (c == '>') {
        in_tag = false;
        out.push_back(' ');  // tags separate words
      }
      continue;
    }
    if (c == '<') {
      in_tag = true;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string truncate_chars(std::string_view utf8, size_t max_chars) {
  size_t i = 0;
  size_t count = 0;
  while (i < utf8.size() && count < max_chars) {
    next_codepoint(utf8, i);
    ++count;
  }
  return std::string(utf8.substr(0, i));
}

std::vector<std::string> tokenize_whitespace(std::string_view utf8) {
  std::vector<std::string> tokens;
  std::string current;
  size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = next_codepoint(utf8, i);
    if (is_space(cp)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      append_utf8(current, cp);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace pxc::text
