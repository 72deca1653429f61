// utf8.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/utf8.hpp"

namespace panini {
namespace utf8 {

std::size_t sequence_length(std::string_view text, std::size_t pos) {
  unsigned char lead = static_cast<unsigned char>(text[pos]);
  std::size_t len = 1;
  if ((lead & 0x80u) == 0x00u) {
    len = 1;
  } else if ((lead & 0xE0u) == 0xC0u) {
    len = 2;
  } else if ((lead & 0xF0u) == 0xE0u) {
    len = 3;
  } else if ((lead & 0xF8u) == 0xF0u) {
    len = 4;
  }
  // Truncated or stray continuation bytes count as length 1.
  if (pos + len > text.size()) return 1;
  for (std::size_t i = 1; i < len; ++i) {
    if ((static_cast<unsigned char>(text[pos + i]) & 0xC0u) != 0x80u) return 1;
  }
  return len;
}

std::vector<char32_t> decode(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = sequence_length(text, pos);
    char32_t cp = 0;
    unsigned char lead = static_cast<unsigned char>(text[pos]);
    switch (len) {
      case 1:
        cp = lead;
        break;
      case 2:
        cp = lead & 0x1Fu;
        break;
      case 3:
        cp = lead & 0x0Fu;
        break;
      default:
        cp = lead & 0x07u;
        break;
    }
    for (std::size_t i = 1; i < len; ++i) {
      cp = (cp << 6) | (static_cast<unsigned char>(text[pos + i]) & 0x3Fu);
    }
    out.push_back(cp);
    pos += len;
  }
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos += sequence_length(text, pos);
    ++n;
  }
  return n;
}

std::string prefix(std::string_view text, std::size_t n) {
  std::size_t pos = 0;
  while (pos < text.size() && n > 0) {
    pos += sequence_length(text, pos);
    --n;
  }
  return std::string(text.substr(0, pos));
}

}  // namespace utf8
}  // namespace panini
