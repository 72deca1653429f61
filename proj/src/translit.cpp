// translit.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/translit.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "panini/error.hpp"
#include "panini/utf8.hpp"

namespace panini {

namespace {

constexpr std::pair<std::string_view, std::string_view> kFallbacks[] = {
    {"aa", "ā"}, {"ii", "ī"}, {"uu", "ū"}, {"sh", "ś"}, {".t", "ṭ"},
    {".d", "ḍ"}, {".n", "ṇ"}, {".s", "ṣ"}, {"~n", "ñ"},
};

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' ||
                           text.front() == '\n' || text.front() == '\r')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    bool matched = false;
    for (const auto& [from, to] : kFallbacks) {
      if (from.size() <= text.size() - pos) {
        // Case-blind compare on the ASCII pair.
        bool eq = true;
        for (std::size_t i = 0; i < from.size(); ++i) {
          char t = text[pos + i];
          if (t >= 'A' && t <= 'Z') t = static_cast<char>(t - 'A' + 'a');
          if (t != from[i]) {
            eq = false;
            break;
          }
        }
        if (eq) {
          out += to;
          pos += from.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) {
      out += c;
      ++pos;
    }
  }
  return out;
}

PhonemeSequence tokenize(const PhoneticMap& map, std::string_view text) {
  PhonemeSequence seq;
  seq.source_text = std::string(text);
  std::string_view trimmed = trim(text);
  if (trimmed.empty()) {
    throw TokenizeError("empty input", 1, "");
  }
  std::string norm = normalize(trimmed);

  std::size_t pos = 0;
  while (pos < norm.size()) {
    std::size_t window = std::min(map.max_id_bytes(), norm.size() - pos);
    const Phoneme* match = nullptr;
    std::size_t match_len = 0;
    for (std::size_t len = window; len >= 1; --len) {
      if (const Phoneme* p = map.find(std::string_view(norm).substr(pos, len))) {
        match = p;
        match_len = len;
        break;
      }
    }
    if (!match) {
      std::string_view rest = std::string_view(norm).substr(pos);
      throw TokenizeError("cannot tokenize input at '" +
                              utf8::prefix(rest, 4) + "'",
                          utf8::length(std::string_view(norm).substr(0, pos)) + 1,
                          utf8::prefix(rest, 4));
    }
    if (pos == 0 && (match->id == "ṁ" || match->id == "ḥ")) {
      throw IllegalInitialError(match->id);
    }
    seq.ids.push_back(match->id);
    pos += match_len;
  }
  return seq;
}

std::string render(const PhonemeSequence& seq) {
  std::string out;
  for (const std::string& id : seq.ids) out += id;
  return out;
}

std::set<std::string> unique_ids(const PhonemeSequence& seq) {
  return std::set<std::string>(seq.ids.begin(), seq.ids.end());
}

}  // namespace panini
