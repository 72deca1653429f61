// baselines.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "panini/error.hpp"
#include "panini/utf8.hpp"

namespace panini {

int levenshtein(std::string_view a, std::string_view b) {
  std::vector<char32_t> s = utf8::decode(a);
  std::vector<char32_t> t = utf8::decode(b);
  if (s.size() < t.size()) std::swap(s, t);

  std::vector<int> prev(t.size() + 1);
  std::vector<int> cur(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= t.size(); ++j) {
      int subst = prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[t.size()];
}

namespace {

// 0 = vowel or Y (separates runs), -1 = H or W (transparent).
int soundex_class(char upper) {
  switch (upper) {
    case 'B': case 'F': case 'P': case 'V':
      return 1;
    case 'C': case 'G': case 'J': case 'K':
    case 'Q': case 'S': case 'X': case 'Z':
      return 2;
    case 'D': case 'T':
      return 3;
    case 'L':
      return 4;
    case 'M': case 'N':
      return 5;
    case 'R':
      return 6;
    case 'H': case 'W':
      return -1;
    default:
      return 0;
  }
}

}  // namespace

std::string soundex(std::string_view name) {
  if (name.empty()) {
    throw NonAlphabeticInputError("soundex input is empty");
  }
  std::string upper;
  upper.reserve(name.size());
  for (char c : name) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (!std::isalpha(uc) || uc > 0x7F) {
      throw NonAlphabeticInputError("soundex input must be ASCII letters: '" +
                                    std::string(name) + "'");
    }
    upper += static_cast<char>(std::toupper(uc));
  }

  std::string code(1, upper[0]);
  int prev = soundex_class(upper[0]);
  if (prev == -1) prev = 0;
  for (std::size_t i = 1; i < upper.size() && code.size() < 4; ++i) {
    int c = soundex_class(upper[i]);
    if (c == -1) continue;  // transparent, keeps the current run open
    if (c == 0) {
      prev = 0;
      continue;
    }
    if (c != prev) code += static_cast<char>('0' + c);
    prev = c;
  }
  code.append(4 - code.size(), '0');
  return code;
}

}  // namespace panini
