// metric.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Distances on the phonetic map.  A word's distance is the running
// Manhattan total of the path that visits its phonemes in order,
// starting from the map origin (0, 0); two words are compared by the
// componentwise difference of those totals.  All values are in half
// units (doubled integers), matching Coordinate.

#ifndef PANINI_METRIC_HPP_
#define PANINI_METRIC_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "panini/phonology.hpp"
#include "panini/translit.hpp"

namespace panini {

// A (dx, dy) value in half units.
struct DistancePair {
  int dx2 = 0;
  int dy2 = 0;

  int score2() const { return dx2 + dy2; }

  friend auto operator<=>(const DistancePair&, const DistancePair&) = default;
  friend DistancePair operator+(DistancePair a, DistancePair b) {
    return DistancePair{a.dx2 + b.dx2, a.dy2 + b.dy2};
  }
};

// "dx,dy" with half units rendered to one decimal.
std::string to_string(DistancePair d);

// Cumulative totals after each phoneme of w, starting from (0, 0).
struct WordPath {
  struct Step {
    std::string id;
    Coordinate coord;
    DistancePair cumulative;
  };
  PhonemeSequence seq;
  std::vector<Step> steps;

  DistancePair total() const {
    return steps.empty() ? DistancePair{} : steps.back().cumulative;
  }
};

WordPath word_path(const PhoneticMap& map, const PhonemeSequence& w);

// total() of the path; the empty word measures (0, 0).
DistancePair word_distance(const PhoneticMap& map, const PhonemeSequence& w);

// Componentwise |a - b| of two word totals.  Symmetric; zero iff the
// totals coincide.
DistancePair inter_word_distance(DistancePair a, DistancePair b);

// Pairwise inter-word distances for a word group.  words holds the
// display labels (the rendered, normalized forms); row_sums[i] is the
// componentwise sum of row i.
struct DistanceMatrix {
  std::vector<std::string> words;
  std::vector<DistancePair> totals;
  std::vector<std::vector<DistancePair>> cells;
  std::vector<DistancePair> row_sums;

  // CSV round trips carry words, cells and row sums; totals are
  // derivable and excluded from equality.
  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.words == b.words && a.cells == b.cells && a.row_sums == b.row_sums;
  }
};

// Tokenizes each word against the map.  Tokenization failures are
// rethrown with the offending word named.  Requires at least one word.
DistanceMatrix distance_matrix(const PhoneticMap& map,
                               const std::vector<std::string>& words);
DistanceMatrix distance_matrix(const PhoneticMap& map,
                               const std::vector<PhonemeSequence>& words);

// Words ranked by row-sum magnitude dx + dy, smallest first.  Ties
// share a rank and keep matrix order.
struct CentralWord {
  std::string word;
  DistancePair row_sum;
  int score2 = 0;  // row_sum.dx2 + row_sum.dy2, in half units
  int rank = 1;
};

std::vector<CentralWord> central_words(const DistanceMatrix& m);

// Alphabet drift between a reference word and a cognate: ids gained,
// ids lost, and each lost id paired with the nearest gained id by
// grid Manhattan distance (ties broken by id order).
struct AlphabetDiff {
  struct Shift {
    std::string lost;
    std::string gained;
    DistancePair delta;
    friend bool operator==(const Shift&, const Shift&) = default;
  };
  std::set<std::string> gained;
  std::set<std::string> lost;
  std::vector<Shift> shifts;
};

AlphabetDiff alphabet_diff(const PhoneticMap& map, const PhonemeSequence& reference,
                           const PhonemeSequence& cognate);

// CSV with a header row, a label column and a trailing row_sum
// column; pair cells are quoted since they contain commas.
std::string matrix_to_csv(const DistanceMatrix& m);

// Inverse of matrix_to_csv (totals are not recovered).  Throws
// ParseError on malformed content.
DistanceMatrix matrix_from_csv(std::string_view csv);

// Fixed-width text table of the same content.
std::string matrix_to_table(const DistanceMatrix& m);

}  // namespace panini

#endif  // PANINI_METRIC_HPP_
