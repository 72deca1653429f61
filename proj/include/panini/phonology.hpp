// phonology.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// The phonetic coordinate map.  Every sound is a point on a 17 x 10
// grid: vowels occupy rows 1-7, semivowels 8-11, sibilants and the
// aspirate row 12, and the five consonant rows 13-17 are articulation
// bands (tenuis, aspirated, voiced, voiced aspirate, nasal) with
// place running along the columns (guttural through labial).  Nasals
// and a few other sounds sit on half-unit positions, so coordinates
// are stored doubled: Coordinate{19, 2} is map position (9.5, 1).

#ifndef PANINI_PHONOLOGY_HPP_
#define PANINI_PHONOLOGY_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace panini {

// A grid position in half units.  row2 == 2 * row, col2 == 2 * col.
struct Coordinate {
  int row2 = 0;
  int col2 = 0;

  // Builds from plain map units; row and col must be multiples of 0.5.
  static Coordinate of(double row, double col);

  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

// "9.5" for odd half-unit counts, "13" for whole units.
std::string format_half_units(int doubled);

enum class Category { Vowel, Semivowel, Sibilant, Aspirate, Consonant };
enum class Place { Guttural, Palatal, Cerebral, Dental, Labial, None };
enum class Manner { Tenuis, Aspirated, Voiced, VoicedAspirated, Nasal, None };

std::string_view to_string(Category c);
std::string_view to_string(Place p);
std::string_view to_string(Manner m);
Category category_from_string(std::string_view s);
Place place_from_string(std::string_view s);
Manner manner_from_string(std::string_view s);

struct Phoneme {
  std::string id;          // romanized form, unique within a map
  std::string devanagari;  // may be empty
  Coordinate coord;
  Category category = Category::Consonant;
  Place place = Place::None;    // None outside the consonant block
  Manner manner = Manner::None; // likewise
  bool is_extension = false;

  friend bool operator==(const Phoneme&, const Phoneme&) = default;
};

// What to do when an extension lands on an occupied coordinate.
// Sharing a coordinate is suspicious but not necessarily wrong, so
// the default only records a warning.
enum class CollisionPolicy { Ignore, Warn, Error };

// Immutable phoneme inventory.  Extension registration returns a new
// map and leaves the original untouched.
class PhoneticMap {
 public:
  // The built-in 49-sound inventory.
  static const PhoneticMap& canonical();

  // Builds a map from an explicit inventory.  Validates id uniqueness
  // and grid bounds; band placement is the caller's business.
  static PhoneticMap from_phonemes(std::vector<Phoneme> phonemes);

  // Throws UnknownPhonemeError.
  const Phoneme& lookup(std::string_view id) const;

  // nullptr when absent.
  const Phoneme* find(std::string_view id) const;

  Coordinate coordinate_of(std::string_view id) const;

  // Returns a copy of this map with one more phoneme.  Throws
  // DuplicatePhonemeError on an id clash and CoordinateCollisionError
  // when policy is Error and the coordinate is taken; under Warn a
  // note is appended to warnings() instead.
  PhoneticMap with_extension(Phoneme phoneme,
                             CollisionPolicy policy = CollisionPolicy::Warn) const;

  // Registers every row of a tab-separated file:
  //   id <TAB> row <TAB> col <TAB> category <TAB> place <TAB> manner
  // '#' starts a comment; blank lines are skipped.
  PhoneticMap with_extensions_file(const std::string& path,
                                   CollisionPolicy policy = CollisionPolicy::Warn) const;

  // Insertion order: canonical inventory first, extensions after.
  const std::vector<Phoneme>& phonemes() const { return phonemes_; }

  // Collision notes accumulated by with_extension under Warn.
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::size_t size() const { return phonemes_.size(); }

  // Longest id in bytes; the tokenizer's match window.
  std::size_t max_id_bytes() const { return max_id_bytes_; }

  friend bool operator==(const PhoneticMap& a, const PhoneticMap& b) {
    return a.phonemes_ == b.phonemes_;
  }

 private:
  PhoneticMap() = default;
  void add(Phoneme phoneme, CollisionPolicy policy);

  std::vector<Phoneme> phonemes_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::string> warnings_;
  std::size_t max_id_bytes_ = 0;
};

}  // namespace panini

#endif  // PANINI_PHONOLOGY_HPP_
