// phonology.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/phonology.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "panini/error.hpp"

namespace panini {

namespace {

int to_halves(double units, const char* what) {
  double doubled = units * 2.0;
  double rounded = std::round(doubled);
  if (std::abs(doubled - rounded) > 1e-9) {
    throw std::invalid_argument(std::string(what) +
                                " must be a multiple of 0.5");
  }
  return static_cast<int>(rounded);
}

// Grid bounds in half units: rows 1..17, cols 1..10.
void check_grid(const Phoneme& p) {
  if (p.coord.row2 < 2 || p.coord.row2 > 34 || p.coord.col2 < 2 ||
      p.coord.col2 > 20) {
    throw std::invalid_argument("phoneme '" + p.id + "' is off the grid");
  }
}

}  // namespace

Coordinate Coordinate::of(double row, double col) {
  return Coordinate{to_halves(row, "row"), to_halves(col, "col")};
}

std::string format_half_units(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  // Negative odd values round toward zero under integer division;
  // rebuild from the magnitude instead.
  int mag = doubled < 0 ? -doubled : doubled;
  std::string s = std::to_string(mag / 2) + ".5";
  return doubled < 0 ? "-" + s : s;
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Vowel: return "vowel";
    case Category::Semivowel: return "semivowel";
    case Category::Sibilant: return "sibilant";
    case Category::Aspirate: return "aspirate";
    case Category::Consonant: return "consonant";
  }
  return "consonant";
}

std::string_view to_string(Place p) {
  switch (p) {
    case Place::Guttural: return "guttural";
    case Place::Palatal: return "palatal";
    case Place::Cerebral: return "cerebral";
    case Place::Dental: return "dental";
    case Place::Labial: return "labial";
    case Place::None: return "none";
  }
  return "none";
}

std::string_view to_string(Manner m) {
  switch (m) {
    case Manner::Tenuis: return "tenuis";
    case Manner::Aspirated: return "aspirated";
    case Manner::Voiced: return "voiced";
    case Manner::VoicedAspirated: return "voiced-aspirated";
    case Manner::Nasal: return "nasal";
    case Manner::None: return "none";
  }
  return "none";
}

Category category_from_string(std::string_view s) {
  if (s == "vowel") return Category::Vowel;
  if (s == "semivowel") return Category::Semivowel;
  if (s == "sibilant") return Category::Sibilant;
  if (s == "aspirate") return Category::Aspirate;
  if (s == "consonant") return Category::Consonant;
  throw std::invalid_argument("unknown category: '" + std::string(s) + "'");
}

Place place_from_string(std::string_view s) {
  if (s == "guttural") return Place::Guttural;
  if (s == "palatal") return Place::Palatal;
  if (s == "cerebral") return Place::Cerebral;
  if (s == "dental") return Place::Dental;
  if (s == "labial") return Place::Labial;
  if (s == "none") return Place::None;
  throw std::invalid_argument("unknown place: '" + std::string(s) + "'");
}

Manner manner_from_string(std::string_view s) {
  if (s == "tenuis") return Manner::Tenuis;
  if (s == "aspirated") return Manner::Aspirated;
  if (s == "voiced") return Manner::Voiced;
  if (s == "voiced-aspirated") return Manner::VoicedAspirated;
  if (s == "nasal") return Manner::Nasal;
  if (s == "none") return Manner::None;
  throw std::invalid_argument("unknown manner: '" + std::string(s) + "'");
}

namespace {

struct Row {
  const char* id;
  const char* devanagari;
  double row;
  double col;
  Category category;
  Place place;
  Manner manner;
};

// The full inventory.  Vowels sit in the low rows with the diphthongs
// and the anusvara/visarga pair below the simple vowels; the
// consonant block runs top-down from tenuis (row 13) to nasal
// (row 17) with nasals and "m" on half columns.
constexpr Row kCanonical[] = {
    // Vowels.
    {"a", "अ", 7, 1, Category::Vowel, Place::None, Manner::None},
    {"ā", "आ", 7, 2, Category::Vowel, Place::None, Manner::None},
    {"i", "इ", 7, 3, Category::Vowel, Place::None, Manner::None},
    {"ī", "ई", 7, 4, Category::Vowel, Place::None, Manner::None},
    {"ṛ", "ऋ", 7, 5, Category::Vowel, Place::None, Manner::None},
    {"ṝ", "ॠ", 7, 6, Category::Vowel, Place::None, Manner::None},
    {"ḷ̥", "ऌ", 7, 7, Category::Vowel, Place::None, Manner::None},
    {"ḹ", "ॡ", 7, 8, Category::Vowel, Place::None, Manner::None},
    {"u", "उ", 7, 9, Category::Vowel, Place::None, Manner::None},
    {"ū", "ऊ", 7, 10, Category::Vowel, Place::None, Manner::None},
    {"ai", "ऐ", 6, 2, Category::Vowel, Place::None, Manner::None},
    {"e", "ए", 5, 2, Category::Vowel, Place::None, Manner::None},
    {"au", "औ", 4, 5, Category::Vowel, Place::None, Manner::None},
    {"o", "ओ", 3, 5, Category::Vowel, Place::None, Manner::None},
    {"ṁ", "ं", 2, 5, Category::Vowel, Place::None, Manner::None},
    {"ḥ", "ः", 1, 1, Category::Vowel, Place::None, Manner::None},
    // Semivowels.
    {"y", "य्", 8, 2.5, Category::Semivowel, Place::None, Manner::None},
    {"r", "र्", 9, 3.5, Category::Semivowel, Place::None, Manner::None},
    {"l", "ल्", 10, 4.5, Category::Semivowel, Place::None, Manner::None},
    {"v", "व्", 11, 5.5, Category::Semivowel, Place::None, Manner::None},
    // Sibilants and the aspirate, all on row 12.
    {"h", "ह्", 12, 1.5, Category::Aspirate, Place::None, Manner::None},
    {"ś", "श्", 12, 3.5, Category::Sibilant, Place::None, Manner::None},
    {"ṣ", "ष्", 12, 5.5, Category::Sibilant, Place::None, Manner::None},
    {"s", "स्", 12, 7.5, Category::Sibilant, Place::None, Manner::None},
    // Consonant block, row by row within each place column pair.
    {"k", "क्", 13, 1, Category::Consonant, Place::Guttural, Manner::Tenuis},
    {"kh", "ख्", 14, 2, Category::Consonant, Place::Guttural, Manner::Aspirated},
    {"g", "ग्", 15, 1, Category::Consonant, Place::Guttural, Manner::Voiced},
    {"gh", "घ्", 16, 2, Category::Consonant, Place::Guttural,
     Manner::VoicedAspirated},
    {"ṅ", "ङ्", 17, 1.5, Category::Consonant, Place::Guttural, Manner::Nasal},
    {"c", "च्", 13, 3, Category::Consonant, Place::Palatal, Manner::Tenuis},
    {"ch", "छ्", 14, 4, Category::Consonant, Place::Palatal, Manner::Aspirated},
    {"j", "ज्", 15, 3, Category::Consonant, Place::Palatal, Manner::Voiced},
    {"jh", "झ्", 16, 4, Category::Consonant, Place::Palatal,
     Manner::VoicedAspirated},
    {"ñ", "ञ्", 17, 3.5, Category::Consonant, Place::Palatal, Manner::Nasal},
    {"ṭ", "ट्", 13, 5, Category::Consonant, Place::Cerebral, Manner::Tenuis},
    {"ṭh", "ठ्", 14, 6, Category::Consonant, Place::Cerebral, Manner::Aspirated},
    {"ḍ", "ड्", 15, 5, Category::Consonant, Place::Cerebral, Manner::Voiced},
    {"ḻ", "ळ्", 15, 6, Category::Consonant, Place::Cerebral, Manner::Voiced},
    {"ḍh", "ढ्", 16, 6, Category::Consonant, Place::Cerebral,
     Manner::VoicedAspirated},
    {"ṇ", "ण्", 17, 5.5, Category::Consonant, Place::Cerebral, Manner::Nasal},
    {"t", "त्", 13, 7, Category::Consonant, Place::Dental, Manner::Tenuis},
    {"th", "थ्", 14, 8, Category::Consonant, Place::Dental, Manner::Aspirated},
    {"d", "द्", 15, 7, Category::Consonant, Place::Dental, Manner::Voiced},
    {"dh", "ध्", 16, 8, Category::Consonant, Place::Dental,
     Manner::VoicedAspirated},
    {"n", "न्", 17, 7.5, Category::Consonant, Place::Dental, Manner::Nasal},
    {"p", "प्", 13, 9, Category::Consonant, Place::Labial, Manner::Tenuis},
    {"ph", "फ्", 14, 10, Category::Consonant, Place::Labial, Manner::Aspirated},
    {"b", "ब्", 15, 9, Category::Consonant, Place::Labial, Manner::Voiced},
    {"bh", "भ्", 16, 10, Category::Consonant, Place::Labial,
     Manner::VoicedAspirated},
    {"m", "म्", 17, 9.5, Category::Consonant, Place::Labial, Manner::Nasal},
};

// Expected manner per consonant row, rows 13..17.
Manner band_manner(int row2) {
  switch (row2) {
    case 26: return Manner::Tenuis;
    case 28: return Manner::Aspirated;
    case 30: return Manner::Voiced;
    case 32: return Manner::VoicedAspirated;
    case 34: return Manner::Nasal;
    default: return Manner::None;
  }
}

PhoneticMap build_canonical() {
  std::vector<Phoneme> phonemes;
  phonemes.reserve(std::size(kCanonical));
  for (const Row& r : kCanonical) {
    Phoneme p;
    p.id = r.id;
    p.devanagari = r.devanagari;
    p.coord = Coordinate::of(r.row, r.col);
    p.category = r.category;
    p.place = r.place;
    p.manner = r.manner;
    phonemes.push_back(std::move(p));
  }
  // Canonical sanity: unique coordinates, and the consonant block
  // lies in the manner bands.  "ḻ" shares the voiced band with "ḍh"'s
  // column pair, so the band check is on rows, not exact manner.
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    for (std::size_t j = i + 1; j < phonemes.size(); ++j) {
      if (phonemes[i].coord == phonemes[j].coord) {
        throw std::logic_error("canonical inventory has a coordinate clash");
      }
    }
    if (phonemes[i].category == Category::Consonant) {
      Manner expected = band_manner(phonemes[i].coord.row2);
      bool band_ok = expected == phonemes[i].manner ||
                     (phonemes[i].id == "ḻ" && expected == Manner::Voiced);
      if (!band_ok) {
        throw std::logic_error("canonical consonant outside its manner band");
      }
    }
  }
  return PhoneticMap::from_phonemes(std::move(phonemes));
}

}  // namespace

const PhoneticMap& PhoneticMap::canonical() {
  static const PhoneticMap map = build_canonical();
  return map;
}

PhoneticMap PhoneticMap::from_phonemes(std::vector<Phoneme> phonemes) {
  PhoneticMap map;
  for (Phoneme& p : phonemes) {
    map.add(std::move(p), CollisionPolicy::Ignore);
  }
  return map;
}

void PhoneticMap::add(Phoneme phoneme, CollisionPolicy policy) {
  if (phoneme.id.empty()) {
    throw std::invalid_argument("phoneme id may not be empty");
  }
  check_grid(phoneme);
  if (index_.count(phoneme.id)) {
    throw DuplicatePhonemeError(phoneme.id);
  }
  if (policy != CollisionPolicy::Ignore) {
    for (const Phoneme& p : phonemes_) {
      if (p.coord == phoneme.coord) {
        std::string note = "coordinate (" + format_half_units(p.coord.row2) +
                           ", " + format_half_units(p.coord.col2) +
                           ") already holds '" + p.id + "'; also assigning '" +
                           phoneme.id + "'";
        if (policy == CollisionPolicy::Error) {
          throw CoordinateCollisionError(note);
        }
        warnings_.push_back(std::move(note));
        break;
      }
    }
  }
  max_id_bytes_ = std::max(max_id_bytes_, phoneme.id.size());
  index_.emplace(phoneme.id, phonemes_.size());
  phonemes_.push_back(std::move(phoneme));
}

const Phoneme& PhoneticMap::lookup(std::string_view id) const {
  const Phoneme* p = find(id);
  if (!p) throw UnknownPhonemeError(std::string(id));
  return *p;
}

const Phoneme* PhoneticMap::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return nullptr;
  return &phonemes_[it->second];
}

Coordinate PhoneticMap::coordinate_of(std::string_view id) const {
  return lookup(id).coord;
}

PhoneticMap PhoneticMap::with_extension(Phoneme phoneme,
                                        CollisionPolicy policy) const {
  PhoneticMap next = *this;
  phoneme.is_extension = true;
  next.add(std::move(phoneme), policy);
  return next;
}

PhoneticMap PhoneticMap::with_extensions_file(const std::string& path,
                                              CollisionPolicy policy) const {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open extensions file: " + path);
  PhoneticMap next = *this;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view trimmed(line);
    while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) {
      trimmed.remove_prefix(1);
    }
    if (trimmed.empty() || trimmed.front() == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 6) {
      throw ParseError("extension rows need 6 tab-separated fields", line_no);
    }
    Phoneme p;
    p.id = fields[0];
    try {
      p.coord = Coordinate::of(std::stod(fields[1]), std::stod(fields[2]));
      p.category = category_from_string(fields[3]);
      p.place = place_from_string(fields[4]);
      p.manner = manner_from_string(fields[5]);
      next = next.with_extension(std::move(p), policy);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return next;
}

}  // namespace panini
