// error.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Exception types thrown by the panini library.

#ifndef PANINI_ERROR_HPP_
#define PANINI_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace panini {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lookup of a phoneme id that is not in the active map.
class UnknownPhonemeError : public Error {
 public:
  explicit UnknownPhonemeError(const std::string& id)
      : Error("unknown phoneme id: '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Registering an id that the map already contains.
class DuplicatePhonemeError : public Error {
 public:
  explicit DuplicatePhonemeError(const std::string& id)
      : Error("duplicate phoneme id: '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Registering a phoneme at a coordinate that is already occupied,
// under the policy that treats collisions as errors.
class CoordinateCollisionError : public Error {
 public:
  using Error::Error;
};

// Input that cannot be segmented into map phonemes.  position is the
// 1-based codepoint offset of the unmatched fragment in the
// normalized text.
class TokenizeError : public Error {
 public:
  TokenizeError(const std::string& what, std::size_t position,
                std::string fragment)
      : Error(what), position_(position), fragment_(std::move(fragment)) {}
  std::size_t position() const { return position_; }
  const std::string& fragment() const { return fragment_; }

 private:
  std::size_t position_;
  std::string fragment_;
};

// A word starting with a sound that cannot begin one (anusvara or
// visarga).
class IllegalInitialError : public TokenizeError {
 public:
  explicit IllegalInitialError(const std::string& fragment)
      : TokenizeError("word may not begin with '" + fragment + "'", 1,
                      fragment) {}
};

// Malformed lexicon or extension file content.  line() is 1-based; 0
// means the line is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A language code that is not in the registry.
class UnknownLanguageError : public ParseError {
 public:
  UnknownLanguageError(const std::string& code, std::size_t line)
      : ParseError("unknown language code: '" + code + "'", line) {}
};

// A theme id that the loaded lexicon does not contain.
class UnknownThemeError : public Error {
 public:
  explicit UnknownThemeError(const std::string& theme)
      : Error("unknown theme: '" + theme + "'") {}
};

// Soundex input that is not a plain alphabetic name.
class NonAlphabeticInputError : public Error {
 public:
  using Error::Error;
};

// An operation that requires a deterministic automaton was handed a
// nondeterministic one.
class NotDeterministicError : public Error {
 public:
  using Error::Error;
};

// An automaton file whose content does not describe a valid machine.
class AutomatonFormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (file missing, unreadable, unwritable).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace panini

#endif  // PANINI_ERROR_HPP_
