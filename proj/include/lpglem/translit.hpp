#ifndef LPGLEM_TRANSLIT_HPP
#define LPGLEM_TRANSLIT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpglem {

// Bijective Arabic <-> Buckwalter transliteration plus the lemma
// normalization rule pipeline. All lemma-level processing in this library
// runs on Buckwalter ASCII; Arabic Unicode is converted at I/O boundaries.

/// Identifiers for the normalization rules, in their fixed application order.
enum class NormRule {
  AlefMaqsuraYi,       // Yi -> yi
  ShaddaOrder,         // vowel+shadda -> shadda+vowel
  AlefWaslaKasra,      // {i -> Ai
  VowelBeforeLongAlef, // short vowel dropped before A / |
  DaggerAlef,          // a` -> `, then ` -> a
  TanweenShift,        // tanween moved past the last letter
  FinalDiacritics,     // strip final a/u/i/o, keep shadda and tanween
  SunLetterShadda,     // strip word-initial sun-letter shadda
  AlefWasla,           // { -> A
  CustomSubstitutions, // user-supplied dataset adjustments
};

/// Which normalization rules run, plus optional dataset-specific tweaks.
struct NormProfile {
  bool alef_maqsura_yi = true;
  bool shadda_order = true;
  bool alef_wasla_kasra = true;
  bool vowel_before_long_alef = true;
  bool dagger_alef = true;
  bool tanween_shift = true;
  bool final_diacritics = true;
  bool sun_letter_shadda_removal = false; // Quran-style data only
  bool alef_wasla = true;
  // Applied verbatim (from -> to), last in the rule order.
  std::vector<std::pair<std::string, std::string>> substitutions;

  static NormProfile standard() { return NormProfile{}; }
  static NormProfile quran() {
    NormProfile p;
    p.sun_letter_shadda_removal = true;
    return p;
  }
};

/// Arabic Unicode -> Buckwalter ASCII. Non-Arabic characters pass through.
/// Throws std::runtime_error for an Arabic-block code point outside the
/// transliteration table, naming the code point.
std::string to_buckwalter(const std::string& utf8_text);

/// Exact inverse of to_buckwalter. Throws on non-ASCII input, with position.
std::string from_buckwalter(const std::string& ascii_text);

/// True if the UTF-8 string contains at least one Arabic-block code point.
bool contains_arabic(const std::string& utf8_text);

/// Buckwalter string with every enabled rule applied, in order, to fixpoint.
std::string normalize_lemma(const std::string& lemma,
                            const NormProfile& profile = NormProfile::standard());

/// Strips all diacritic symbols (a u i o ~ F N K `), keeping letters in order.
std::string dediacritize(const std::string& bw);

/// Folds every hamza carrier (' | > < & } {) to plain alef. Used by error
/// typing, where hamza-placement differences count as diacritization errors.
std::string hamza_normalize(const std::string& bw);

/// True for Buckwalter diacritic symbols.
bool is_bw_diacritic(char c);
/// True for Buckwalter letter symbols (consonants and long-vowel carriers).
bool is_bw_letter(char c);

}  // namespace lpglem

#endif
