// translit.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Romanized text to phoneme sequences.  Tokenization is greedy
// longest match over the active map's ids, so digraphs ("kh", "bh",
// "ai") always win over their one-letter prefixes.

#ifndef PANINI_TRANSLIT_HPP_
#define PANINI_TRANSLIT_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "panini/phonology.hpp"

namespace panini {

struct PhonemeSequence {
  std::vector<std::string> ids;
  std::string source_text;  // input as given, before normalization

  // Two sequences are the same word iff their ids match.
  friend bool operator==(const PhonemeSequence& a, const PhonemeSequence& b) {
    return a.ids == b.ids;
  }
  friend bool operator!=(const PhonemeSequence& a, const PhonemeSequence& b) {
    return !(a == b);
  }
};

// ASCII keyboard fallbacks: lowercases A-Z and rewrites
//   aa -> ā, ii -> ī, uu -> ū, sh -> ś,
//   .t -> ṭ, .d -> ḍ, .n -> ṇ, .s -> ṣ, ~n -> ñ
// in one left-to-right pass.  Idempotent.
std::string normalize(std::string_view text);

// Trims, normalizes, then segments.  Throws IllegalInitialError when
// the word opens with the anusvara or visarga, and TokenizeError
// (with 1-based codepoint position and the offending fragment) when
// no map id matches.
PhonemeSequence tokenize(const PhoneticMap& map, std::string_view text);

// Concatenated ids; render(tokenize(map, w)) == normalize(w) for any
// trimmed w that tokenizes.
std::string render(const PhonemeSequence& seq);

// The distinct ids used by a word.
std::set<std::string> unique_ids(const PhonemeSequence& seq);

}  // namespace panini

#endif  // PANINI_TRANSLIT_HPP_
