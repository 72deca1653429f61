// metric.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "panini/error.hpp"
#include "panini/utf8.hpp"

namespace panini {

namespace {

int abs_diff(int a, int b) { return a > b ? a - b : b - a; }

// "16.5" -> 33, "13" -> 26.  Throws ParseError (line 0) otherwise.
int parse_half_units(std::string_view s) {
  auto fail = [&] { throw ParseError("bad half-unit value: '" + std::string(s) + "'", 0); };
  if (s.empty()) fail();
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    i = 1;
  }
  long whole = 0;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    whole = whole * 10 + (s[i] - '0');
    ++i;
    ++digits;
  }
  if (digits == 0) fail();
  int doubled = static_cast<int>(whole * 2);
  if (i < s.size()) {
    if (s[i] != '.') fail();
    std::string_view frac = s.substr(i + 1);
    if (frac == "5") {
      doubled += 1;
    } else if (frac != "0" && frac != "00") {
      fail();
    }
  }
  return neg ? -doubled : doubled;
}

}  // namespace

std::string to_string(DistancePair d) {
  return format_half_units(d.dx2) + "," + format_half_units(d.dy2);
}

WordPath word_path(const PhoneticMap& map, const PhonemeSequence& w) {
  WordPath path;
  path.seq = w;
  Coordinate prev{0, 0};
  DistancePair running;
  path.steps.reserve(w.ids.size());
  for (const std::string& id : w.ids) {
    Coordinate c = map.coordinate_of(id);
    running.dx2 += abs_diff(c.row2, prev.row2);
    running.dy2 += abs_diff(c.col2, prev.col2);
    path.steps.push_back(WordPath::Step{id, c, running});
    prev = c;
  }
  return path;
}

DistancePair word_distance(const PhoneticMap& map, const PhonemeSequence& w) {
  return word_path(map, w).total();
}

DistancePair inter_word_distance(DistancePair a, DistancePair b) {
  return DistancePair{abs_diff(a.dx2, b.dx2), abs_diff(a.dy2, b.dy2)};
}

DistanceMatrix distance_matrix(const PhoneticMap& map,
                               const std::vector<std::string>& words) {
  std::vector<PhonemeSequence> seqs;
  seqs.reserve(words.size());
  for (const std::string& w : words) {
    try {
      seqs.push_back(tokenize(map, w));
    } catch (const TokenizeError& e) {
      throw TokenizeError("word '" + w + "': " + e.what(), e.position(),
                          e.fragment());
    }
  }
  return distance_matrix(map, seqs);
}

DistanceMatrix distance_matrix(const PhoneticMap& map,
                               const std::vector<PhonemeSequence>& words) {
  if (words.empty()) {
    throw std::invalid_argument("distance_matrix needs at least one word");
  }
  DistanceMatrix m;
  m.words.reserve(words.size());
  m.totals.reserve(words.size());
  for (const PhonemeSequence& w : words) {
    m.words.push_back(render(w));
    m.totals.push_back(word_distance(map, w));
  }
  m.cells.resize(words.size());
  m.row_sums.resize(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    m.cells[i].resize(words.size());
    for (std::size_t j = 0; j < words.size(); ++j) {
      m.cells[i][j] = inter_word_distance(m.totals[i], m.totals[j]);
      m.row_sums[i] = m.row_sums[i] + m.cells[i][j];
    }
  }
  return m;
}

std::vector<CentralWord> central_words(const DistanceMatrix& m) {
  std::vector<CentralWord> out;
  out.reserve(m.words.size());
  for (std::size_t i = 0; i < m.words.size(); ++i) {
    out.push_back(CentralWord{m.words[i], m.row_sums[i],
                              m.row_sums[i].score2(), 1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CentralWord& a, const CentralWord& b) {
                     return a.score2 < b.score2;
                   });
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i].rank = out[i].score2 == out[i - 1].score2 ? out[i - 1].rank
                                                     : out[i - 1].rank + 1;
  }
  return out;
}

AlphabetDiff alphabet_diff(const PhoneticMap& map, const PhonemeSequence& reference,
                           const PhonemeSequence& cognate) {
  std::set<std::string> ref_ids = unique_ids(reference);
  std::set<std::string> cog_ids = unique_ids(cognate);
  AlphabetDiff diff;
  for (const std::string& id : cog_ids) {
    if (!ref_ids.count(id)) diff.gained.insert(id);
  }
  for (const std::string& id : ref_ids) {
    if (!cog_ids.count(id)) diff.lost.insert(id);
  }
  for (const std::string& lost_id : diff.lost) {
    Coordinate from = map.coordinate_of(lost_id);
    const std::string* best = nullptr;
    DistancePair best_delta;
    for (const std::string& gained_id : diff.gained) {
      Coordinate to = map.coordinate_of(gained_id);
      DistancePair delta{abs_diff(from.row2, to.row2),
                         abs_diff(from.col2, to.col2)};
      if (!best || delta.score2() < best_delta.score2()) {
        best = &gained_id;
        best_delta = delta;
      }
    }
    if (best) {
      diff.shifts.push_back(AlphabetDiff::Shift{lost_id, *best, best_delta});
    }
  }
  return diff;
}

namespace {

std::string csv_field(std::string_view value) {
  bool needs_quotes = value.find_first_of(",\"\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
    ++i;
  }
  if (quoted) throw ParseError("unterminated quote in CSV", line_no);
  fields.push_back(current);
  return fields;
}

DistancePair parse_pair(std::string_view cell, std::size_t line_no) {
  std::size_t comma = cell.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("expected 'dx,dy' cell, got '" + std::string(cell) + "'",
                     line_no);
  }
  try {
    return DistancePair{parse_half_units(cell.substr(0, comma)),
                        parse_half_units(cell.substr(comma + 1))};
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_no);
  }
}

}  // namespace

std::string matrix_to_csv(const DistanceMatrix& m) {
  std::string out = "word";
  for (const std::string& w : m.words) {
    out += ',';
    out += csv_field(w);
  }
  out += ",row_sum\n";
  for (std::size_t i = 0; i < m.words.size(); ++i) {
    out += csv_field(m.words[i]);
    for (std::size_t j = 0; j < m.words.size(); ++j) {
      out += ',';
      out += csv_field(to_string(m.cells[i][j]));
    }
    out += ',';
    out += csv_field(to_string(m.row_sums[i]));
    out += '\n';
  }
  return out;
}

DistanceMatrix matrix_from_csv(std::string_view csv) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.emplace_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("empty CSV", 1);

  std::vector<std::string> header = split_csv_line(lines[0], 1);
  if (header.size() < 3 || header.front() != "word" || header.back() != "row_sum") {
    throw ParseError("expected header 'word,...,row_sum'", 1);
  }
  std::size_t n = header.size() - 2;
  if (lines.size() - 1 != n) {
    throw ParseError("matrix is not square: " + std::to_string(n) +
                         " columns, " + std::to_string(lines.size() - 1) + " rows",
                     1);
  }
  DistanceMatrix m;
  m.words.assign(header.begin() + 1, header.end() - 1);
  m.cells.resize(n);
  m.row_sums.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t line_no = i + 2;
    std::vector<std::string> fields = split_csv_line(lines[i + 1], line_no);
    if (fields.size() != n + 2) {
      throw ParseError("expected " + std::to_string(n + 2) + " fields", line_no);
    }
    if (fields[0] != m.words[i]) {
      throw ParseError("row label '" + fields[0] + "' does not match header '" +
                           m.words[i] + "'",
                       line_no);
    }
    m.cells[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      m.cells[i][j] = parse_pair(fields[j + 1], line_no);
    }
    m.row_sums[i] = parse_pair(fields[n + 1], line_no);
  }
  return m;
}

std::string matrix_to_table(const DistanceMatrix& m) {
  std::size_t n = m.words.size();
  std::vector<std::string> headers;
  headers.push_back("word");
  headers.insert(headers.end(), m.words.begin(), m.words.end());
  headers.push_back("row_sum");

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row;
    row.push_back(m.words[i]);
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_string(m.cells[i][j]));
    row.push_back(to_string(m.row_sums[i]));
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = utf8::length(headers[c]);
    for (const auto& row : rows) {
      widths[c] = std::max(widths[c], utf8::length(row[c]));
    }
  }

  std::string out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::size_t pad = widths[c] - utf8::length(row[c]);
      if (c == 0) {
        out += row[c];
        out.append(pad, ' ');
      } else {
        out.append(pad, ' ');
        out += row[c];
      }
      if (c + 1 < row.size()) out += "  ";
    }
    out += '\n';
  };
  emit_row(headers);
  for (const auto& row : rows) emit_row(row);
  return out;
}

}  // namespace panini
