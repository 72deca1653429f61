// baselines.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Reference similarity measures the map-based metric is compared
// against: edit distance and the classic Soundex name code.

#ifndef PANINI_BASELINES_HPP_
#define PANINI_BASELINES_HPP_

#include <string>
#include <string_view>

namespace panini {

// Levenshtein distance over Unicode scalar values (one multibyte
// character counts as one edit unit).
int levenshtein(std::string_view a, std::string_view b);

// Classic Soundex: initial letter plus three digits in 1..6, zero
// padded.  H and W are transparent, vowels (and Y) separate runs, and
// a letter sharing the initial's class is absorbed into it.  Throws
// NonAlphabeticInputError unless the input is one ASCII-alphabetic
// word.
std::string soundex(std::string_view name);

}  // namespace panini

#endif  // PANINI_BASELINES_HPP_
