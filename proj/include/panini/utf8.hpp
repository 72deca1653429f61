// utf8.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Minimal UTF-8 helpers.  Inputs are expected to be well formed;
// decode() treats a malformed byte as a single-byte codepoint so the
// library degrades gracefully on dirty data instead of aborting.

#ifndef PANINI_UTF8_HPP_
#define PANINI_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace panini {
namespace utf8 {

// Byte length of the sequence starting at text[pos] (1..4).
std::size_t sequence_length(std::string_view text, std::size_t pos);

// Decodes to Unicode scalar values.
std::vector<char32_t> decode(std::string_view text);

// Number of codepoints in text.
std::size_t length(std::string_view text);

// First n codepoints of text, as bytes.
std::string prefix(std::string_view text, std::size_t n);

}  // namespace utf8
}  // namespace panini

#endif  // PANINI_UTF8_HPP_
