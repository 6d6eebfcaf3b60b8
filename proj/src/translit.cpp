#include "lpglem/translit.hpp"

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lpglem {

namespace {

struct BwPair {
  uint32_t cp;
  char bw;
};

// The Buckwalter table. Covers the letters, diacritics, and the three
// Arabic punctuation marks with conventional ASCII equivalents; the table
// is a bijection, so every ASCII symbol on the right is reserved and is
// never treated as pass-through by from_buckwalter.
constexpr std::array<BwPair, 54> kTable{{
    {0x0621, '\''}, // hamza
    {0x0622, '|'},  // alef madda
    {0x0623, '>'},  // alef hamza above
    {0x0624, '&'},  // waw hamza
    {0x0625, '<'},  // alef hamza below
    {0x0626, '}'},  // yeh hamza
    {0x0627, 'A'},  // alef
    {0x0628, 'b'},
    {0x0629, 'p'},  // teh marbuta
    {0x062A, 't'},
    {0x062B, 'v'},
    {0x062C, 'j'},
    {0x062D, 'H'},
    {0x062E, 'x'},
    {0x062F, 'd'},
    {0x0630, '*'},
    {0x0631, 'r'},
    {0x0632, 'z'},
    {0x0633, 's'},
    {0x0634, '$'},
    {0x0635, 'S'},
    {0x0636, 'D'},
    {0x0637, 'T'},
    {0x0638, 'Z'},
    {0x0639, 'E'},
    {0x063A, 'g'},
    {0x0640, '_'},  // tatweel
    {0x0641, 'f'},
    {0x0642, 'q'},
    {0x0643, 'k'},
    {0x0644, 'l'},
    {0x0645, 'm'},
    {0x0646, 'n'},
    {0x0647, 'h'},
    {0x0648, 'w'},
    {0x0649, 'Y'},  // alef maqsura
    {0x064A, 'y'},
    {0x064B, 'F'},  // fathatan
    {0x064C, 'N'},  // dammatan
    {0x064D, 'K'},  // kasratan
    {0x064E, 'a'},  // fatha
    {0x064F, 'u'},  // damma
    {0x0650, 'i'},  // kasra
    {0x0651, '~'},  // shadda
    {0x0652, 'o'},  // sukun
    {0x0670, '`'},  // dagger alef
    {0x0671, '{'},  // alef wasla
    {0x067E, 'P'},  // peh
    {0x0686, 'J'},  // tcheh
    {0x06A4, 'V'},  // veh
    {0x06AF, 'G'},  // gaf
    {0x060C, ','},  // arabic comma
    {0x061B, ';'},  // arabic semicolon
}};
// U+061F (arabic question mark) completes the table below; kept out of the
// array only to keep the initializer size in sync with its declaration.

const std::unordered_map<uint32_t, char>& ar_to_bw() {
  static const auto* m = [] {
    auto* t = new std::unordered_map<uint32_t, char>;
    for (const auto& e : kTable) (*t)[e.cp] = e.bw;
    (*t)[0x061F] = '?';
    return t;
  }();
  return *m;
}

const std::unordered_map<char, uint32_t>& bw_to_ar() {
  static const auto* m = [] {
    auto* t = new std::unordered_map<char, uint32_t>;
    for (const auto& e : kTable) (*t)[e.bw] = e.cp;
    (*t)['?'] = 0x061F;
    return t;
  }();
  return *m;
}

bool in_arabic_block(uint32_t cp) {
  return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
         (cp >= 0x08A0 && cp <= 0x08FF) || (cp >= 0xFB50 && cp <= 0xFDFF) ||
         (cp >= 0xFE70 && cp <= 0xFEFF);
}

void append_utf8(std::string& out, uint32_t cp) {
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

// Decodes one UTF-8 code point at pos, advancing pos. Throws on bad bytes.
uint32_t next_codepoint(const std::string& s, size_t& pos) {
  const auto byte = [&](size_t i) -> uint32_t {
    return static_cast<unsigned char>(s[i]);
  };
  uint32_t b0 = byte(pos);
  if (b0 < 0x80) {
    pos += 1;
    return b0;
  }
  auto fail = [&] {
    std::ostringstream os;
    os << "invalid UTF-8 at byte offset " << pos;
    throw std::runtime_error(os.str());
  };
  auto cont = [&](size_t i) -> uint32_t {
    if (i >= s.size() || (byte(i) & 0xC0) != 0x80) fail();
    return byte(i) & 0x3F;
  };
  if ((b0 & 0xE0) == 0xC0) {
    uint32_t cp = ((b0 & 0x1F) << 6) | cont(pos + 1);
    pos += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0) {
    uint32_t cp = ((b0 & 0x0F) << 12) | (cont(pos + 1) << 6) | cont(pos + 2);
    pos += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0) {
    uint32_t cp = ((b0 & 0x07) << 18) | (cont(pos + 1) << 12) |
                  (cont(pos + 2) << 6) | cont(pos + 3);
    pos += 4;
    return cp;
  }
  fail();
  return 0;
}

constexpr const char* kDiacritics = "auioFNK~`";
constexpr const char* kLetters = "'|><&}AbptvjHxd*rzs$SDTZEg_fqklmnhwYyPJVG{";
constexpr const char* kSunLetters = "tvd*rzs$SDTZln";
constexpr const char* kTanween = "FNK";

bool in_set(char c, const char* set) {
  for (const char* p = set; *p; ++p)
    if (*p == c) return true;
  return false;
}

}  // namespace

bool is_bw_diacritic(char c) { return in_set(c, kDiacritics); }
bool is_bw_letter(char c) { return in_set(c, kLetters); }

bool contains_arabic(const std::string& utf8_text) {
  size_t pos = 0;
  while (pos < utf8_text.size()) {
    if (in_arabic_block(next_codepoint(utf8_text, pos))) return true;
  }
  return false;
}

std::string to_buckwalter(const std::string& utf8_text) {
  std::string out;
  out.reserve(utf8_text.size());
  size_t pos = 0;
  while (pos < utf8_text.size()) {
    size_t start = pos;
    uint32_t cp = next_codepoint(utf8_text, pos);
    auto it = ar_to_bw().find(cp);
    if (it != ar_to_bw().end()) {
      out.push_back(it->second);
    } else if (in_arabic_block(cp)) {
      std::ostringstream os;
      os << "no Buckwalter mapping for Arabic code point U+" << std::hex
         << std::uppercase << cp << " at byte offset " << std::dec << start;
      throw std::runtime_error(os.str());
    } else {
      out.append(utf8_text, start, pos - start);
    }
  }
  return out;
}

std::string from_buckwalter(const std::string& ascii_text) {
  std::string out;
  out.reserve(ascii_text.size() * 2);
  for (size_t i = 0; i < ascii_text.size(); ++i) {
    char c = ascii_text[i];
    if (static_cast<unsigned char>(c) >= 0x80) {
      std::ostringstream os;
      os << "non-ASCII byte in Buckwalter input at position " << i;
      throw std::runtime_error(os.str());
    }
    auto it = bw_to_ar().find(c);
    if (it != bw_to_ar().end()) {
      append_utf8(out, it->second);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

// One pass of each rule. The caller loops the whole sequence to fixpoint, so
// rules only need to make progress, not finish in one application.

std::string rule_alef_maqsura_yi(std::string s) {
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == 'Y' && s[i + 1] == 'i') s[i] = 'y';
  return s;
}

std::string rule_shadda_order(std::string s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i + 1] == '~' && is_bw_diacritic(s[i]) && s[i] != '~') {
        std::swap(s[i], s[i + 1]);
        changed = true;
      }
    }
  }
  return s;
}

std::string rule_alef_wasla_kasra(std::string s) {
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == '{' && s[i + 1] == 'i') s[i] = 'A';
  return s;
}

std::string rule_vowel_before_long_alef(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool drop = (c == 'a' || c == 'u' || c == 'i') && i + 1 < s.size() &&
                (s[i + 1] == 'A' || s[i + 1] == '|');
    if (!drop) out.push_back(c);
  }
  return out;
}

std::string rule_dagger_alef(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'a' && i + 1 < s.size() && s[i + 1] == '`') continue;
    out.push_back(s[i]);
  }
  for (char& c : out)
    if (c == '`') c = 'a';
  return out;
}

// A tanween belongs after the last letter. Every tanween that still has a
// letter somewhere to its right is moved to the end of the string, keeping
// the relative order of shifted tanweens. Applying this twice is a no-op.
std::string rule_tanween_shift(const std::string& s) {
  std::vector<bool> letter_follows(s.size(), false);
  bool seen_letter = false;
  for (size_t i = s.size(); i-- > 0;) {
    letter_follows[i] = seen_letter;
    if (is_bw_letter(s[i])) seen_letter = true;
  }
  std::string kept, shifted;
  for (size_t i = 0; i < s.size(); ++i) {
    if (in_set(s[i], kTanween) && letter_follows[i])
      shifted.push_back(s[i]);
    else
      kept.push_back(s[i]);
  }
  return kept + shifted;
}

// Strips case/mood vowels and sukun after the last letter. Shadda is kept per
// the rule itself; tanween is kept because the shift rule just placed it
// there (the AyDAF pattern).
std::string rule_final_diacritics(const std::string& s) {
  size_t last_letter = std::string::npos;
  for (size_t i = s.size(); i-- > 0;) {
    if (is_bw_letter(s[i])) {
      last_letter = i;
      break;
    }
  }
  if (last_letter == std::string::npos) return s;
  std::string out = s.substr(0, last_letter + 1);
  for (size_t i = last_letter + 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == 'a' || c == 'u' || c == 'i' || c == 'o') continue;
    out.push_back(c);
  }
  return out;
}

std::string rule_sun_letter_shadda(std::string s) {
  if (s.size() >= 2 && in_set(s[0], kSunLetters) && s[1] == '~')
    s.erase(1, 1);
  return s;
}

std::string rule_alef_wasla(std::string s) {
  for (char& c : s)
    if (c == '{') c = 'A';
  return s;
}

std::string apply_substitutions(
    std::string s, const std::vector<std::pair<std::string, std::string>>& subs) {
  for (const auto& [from, to] : subs) {
    if (from.empty()) continue;
    size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
      s.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return s;
}

}  // namespace

std::string normalize_lemma(const std::string& lemma, const NormProfile& profile) {
  std::string cur = lemma;
  // The rule set converges in two or three sweeps on real lemmas; the cap
  // only guards against pathological fuzz input.
  for (int iter = 0; iter < 64; ++iter) {
    std::string next = cur;
    if (profile.alef_maqsura_yi) next = rule_alef_maqsura_yi(next);
    if (profile.shadda_order) next = rule_shadda_order(next);
    if (profile.alef_wasla_kasra) next = rule_alef_wasla_kasra(next);
    if (profile.vowel_before_long_alef) next = rule_vowel_before_long_alef(next);
    if (profile.dagger_alef) next = rule_dagger_alef(next);
    if (profile.tanween_shift) next = rule_tanween_shift(next);
    if (profile.final_diacritics) next = rule_final_diacritics(next);
    if (profile.sun_letter_shadda_removal) next = rule_sun_letter_shadda(next);
    if (profile.alef_wasla) next = rule_alef_wasla(next);
    if (!profile.substitutions.empty())
      next = apply_substitutions(next, profile.substitutions);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

std::string dediacritize(const std::string& bw) {
  std::string out;
  out.reserve(bw.size());
  for (char c : bw)
    if (!is_bw_diacritic(c)) out.push_back(c);
  return out;
}

std::string hamza_normalize(const std::string& bw) {
  std::string out = bw;
  for (char& c : out) {
    switch (c) {
      case '\'':
      case '|':
      case '>':
      case '<':
      case '&':
      case '}':
      case '{':
        c = 'A';
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace lpglem
