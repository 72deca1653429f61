// acceptance_main.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// End-to-end acceptance gate.  Each criterion prints one PASS/FAIL
// line; the process exits nonzero when any criterion fails.  All
// distance comparisons are exact in integer half units.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "panini/automata.hpp"
#include "panini/baselines.hpp"
#include "panini/error.hpp"
#include "panini/metric.hpp"
#include "panini/mlanguage.hpp"
#include "panini/phonology.hpp"
#include "panini/translit.hpp"

using namespace panini;

namespace {

int g_failures = 0;

// Collects expectation failures for one criterion.
struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

void report(int number, const std::string& name, const Checker& c) {
  std::printf("%s criterion %2d: %s\n", c.ok ? "PASS" : "FAIL", number,
              name.c_str());
  if (!c.ok) {
    std::printf("     %s\n", c.detail.c_str());
    ++g_failures;
  }
}

void note(const std::string& text) {
  std::printf("     note: %s\n", text.c_str());
}

DistancePair dp(double x, double y) {
  return DistancePair{static_cast<int>(std::lround(x * 2)),
                      static_cast<int>(std::lround(y * 2))};
}

std::string show(DistancePair d) { return to_string(d); }

const PhoneticMap& the_map() { return PhoneticMap::canonical(); }

const std::vector<MLanguage>& groups() {
  static const std::vector<MLanguage> gs = group_by_theme(
      the_map(), load_lexicon(std::string(PANINI_DATA_DIR) + "/lexicon.tsv"));
  return gs;
}

PhonemeSequence tok(const std::string& w) { return tokenize(the_map(), w); }

DistancePair total_of(const PhoneticMap& map, const std::string& w) {
  return word_distance(map, tokenize(map, w));
}

// Independent oracle: naive fold over the coordinates.
DistancePair fold_distance(const PhoneticMap& map, const PhonemeSequence& seq) {
  int x = 0, y = 0, dx = 0, dy = 0;
  for (const std::string& id : seq.ids) {
    Coordinate c = map.coordinate_of(id);
    dx += std::abs(c.row2 - x);
    dy += std::abs(c.col2 - y);
    x = c.row2;
    y = c.col2;
  }
  return DistancePair{dx, dy};
}

void expect_path(Checker& c, const PhoneticMap& map, const std::string& word,
                 const std::vector<DistancePair>& expected) {
  WordPath path = word_path(map, tokenize(map, word));
  c.expect(path.steps.size() == expected.size(),
           word + ": step count " + std::to_string(path.steps.size()));
  for (std::size_t i = 0; i < path.steps.size() && i < expected.size(); ++i) {
    c.expect(path.steps[i].cumulative == expected[i],
             word + " prefix " + std::to_string(i + 1) + ": got " +
                 show(path.steps[i].cumulative) + ", want " + show(expected[i]));
  }
}

DistanceMatrix matrix_of(const MLanguage& g) {
  std::vector<PhonemeSequence> seqs;
  for (const MLanguage::Member& m : g.members) seqs.push_back(m.seq);
  return distance_matrix(the_map(), seqs);
}

void expect_cells(Checker& c, const DistanceMatrix& m,
                  const std::vector<std::vector<DistancePair>>& cells,
                  const std::vector<DistancePair>& row_sums) {
  c.expect(m.cells.size() == cells.size(),
           "matrix size " + std::to_string(m.cells.size()));
  for (std::size_t i = 0; i < cells.size() && i < m.cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      c.expect(m.cells[i][j] == cells[i][j],
               "cell [" + std::to_string(i) + "][" + std::to_string(j) +
                   "]: got " + show(m.cells[i][j]) + ", want " +
                   show(cells[i][j]));
    }
    c.expect(m.row_sums[i] == row_sums[i],
             "row sum " + std::to_string(i) + ": got " + show(m.row_sums[i]) +
                 ", want " + show(row_sums[i]));
  }
}

std::set<std::vector<std::string>> member_ids(const MLanguage& g) {
  std::set<std::vector<std::string>> out;
  for (const MLanguage::Member& m : g.members) out.insert(m.seq.ids);
  return out;
}

std::size_t longest_member(const MLanguage& g) {
  std::size_t n = 0;
  for (const MLanguage::Member& m : g.members) {
    n = std::max(n, m.seq.ids.size());
  }
  return n;
}

int lev_rec(const std::string& a, const std::string& b, std::size_t i,
            std::size_t j, int memo[8][8]) {
  int& m = memo[i][j];
  if (m >= 0) return m;
  if (i == 0) return m = static_cast<int>(j);
  if (j == 0) return m = static_cast<int>(i);
  int best = lev_rec(a, b, i - 1, j - 1, memo) + (a[i - 1] == b[j - 1] ? 0 : 1);
  best = std::min(best, lev_rec(a, b, i - 1, j, memo) + 1);
  best = std::min(best, lev_rec(a, b, i, j - 1, memo) + 1);
  return m = best;
}

int lev_oracle(const std::string& a, const std::string& b) {
  int memo[8][8];
  for (auto& row : memo) std::fill(std::begin(row), std::end(row), -1);
  return lev_rec(a, b, a.size(), b.size(), memo);
}

void criterion_1() {
  Checker c;
  const PhoneticMap& map = the_map();
  c.expect(map.coordinate_of("k") == Coordinate::of(13, 1), "k coordinate");
  c.expect(map.coordinate_of("t") == Coordinate::of(13, 7), "t coordinate");
  expect_path(c, map, "kavi",
              {dp(13, 1), dp(19, 1), dp(23, 5.5), dp(27, 8)});
  expect_path(c, map, "kavitā",
              {dp(13, 1), dp(19, 1), dp(23, 5.5), dp(27, 8), dp(33, 12),
               dp(39, 17)});
  expect_path(c, map, "kāvya",
              {dp(13, 1), dp(19, 2), dp(23, 5.5), dp(26, 8.5), dp(27, 10)});
  expect_path(c, map, "kavana",
              {dp(13, 1), dp(19, 1), dp(23, 5.5), dp(27, 10), dp(37, 16.5),
               dp(47, 23)});
  report(1, "per-prefix cumulative distances for the poetry words", c);
  note("source rows misprint k as (13, 2) and t as (13, 6); the canonical "
       "(13, 1) and (13, 7) reproduce every cumulative value above");
}

void criterion_2() {
  Checker c;
  const MLanguage& poetry = find_theme(groups(), "poetry");
  DistanceMatrix m = matrix_of(poetry);
  c.expect(m.words == std::vector<std::string>{"kavi", "kavitā", "kāvya",
                                               "kavana"},
           "poetry member order");
  expect_cells(c, m,
               {{dp(0, 0), dp(12, 9), dp(0, 2), dp(20, 15)},
                {dp(12, 9), dp(0, 0), dp(12, 7), dp(8, 6)},
                {dp(0, 2), dp(12, 7), dp(0, 0), dp(20, 13)},
                {dp(20, 15), dp(8, 6), dp(20, 13), dp(0, 0)}},
               {dp(32, 26), dp(32, 22), dp(32, 22), dp(48, 34)});

  DistanceMatrix trimmed = matrix_of(exclude_words(poetry, {"kavana"}));
  expect_cells(c, trimmed,
               {{dp(0, 0), dp(12, 9), dp(0, 2)},
                {dp(12, 9), dp(0, 0), dp(12, 7)},
                {dp(0, 2), dp(12, 7), dp(0, 0)}},
               {dp(12, 11), dp(24, 16), dp(12, 9)});
  report(2, "poetry inter-word matrices, full and with kavana excluded", c);
  note("the published kavitā row sum (32, 15) does not equal the sum of its "
       "published cells; the cell-consistent (32, 22) is asserted");
}

void criterion_3() {
  Checker c;
  const PhoneticMap& map = the_map();
  c.expect(total_of(map, "pitā") == dp(31, 24), "pitā");
  c.expect(total_of(map, "mātā") == dp(39, 27), "mātā");
  expect_path(c, map, "duhi", {dp(15, 7), dp(23, 9), dp(28, 16.5), dp(33, 18)});

  // Authoritative totals under canonical coordinates.
  c.expect(total_of(map, "duhitā") == dp(45, 27), "duhitā canonical");
  c.expect(total_of(map, "tātā") == dp(31, 22), "tātā canonical");
  c.expect(total_of(map, "bhrātā") == dp(37, 28), "bhrātā canonical");

  // Compatibility map reproducing the published totals: t displaced to
  // (17, 9.5), which collides with m and is why it is not canonical.
  std::vector<Phoneme> rows = map.phonemes();
  for (Phoneme& p : rows) {
    if (p.id == "t") p.coord = Coordinate::of(17, 9.5);
  }
  PhoneticMap compat = PhoneticMap::from_phonemes(std::move(rows));
  c.expect(total_of(compat, "duhitā") == dp(53, 32), "duhitā compat");
  c.expect(total_of(compat, "tātā") == dp(47, 32), "tātā compat");
  c.expect(total_of(compat, "bhrātā") == dp(45, 33), "bhrātā compat");
  report(3, "kinship distances, canonical and compatibility variants", c);
  note("published kinship totals place t at (17, 9.5), on top of m; the "
       "canonical t (13, 7) yields duhitā (45, 27), tātā (31, 22), "
       "bhrātā (37, 28)");
}

void criterion_4() {
  Checker c;
  const PhoneticMap& map = the_map();
  c.expect(total_of(map, "dīrgha") == dp(41, 13), "dīrgha");
  c.expect(total_of(map, "dīg") == dp(31, 13), "dīg");
  c.expect(total_of(map, "dugo") == dp(43, 21), "dugo");
  c.expect(total_of(map, "dulgi") == dp(39, 19), "dulgi");
  c.expect(total_of(map, "dlugi") == dp(39, 24), "dlugi");
  c.expect(total_of(map, "digu") == dp(39, 21), "digu");
  report(4, "distances for the 'long' cognate set", c);
}

void criterion_5() {
  Checker c;
  const MLanguage& poetry = find_theme(groups(), "poetry");
  c.expect(extended_alphabet(poetry) ==
               std::set<std::string>{"a", "i", "k", "n", "t", "v", "y", "ā"},
           "poetry extended alphabet");

  MLanguage indic = filter_by_region(find_theme(groups(), "high"),
                                     Region::Indian);
  std::set<std::string> want{"c", "u"};
  std::set<std::string> half = core_alphabet_heuristic(indic, 0.5);
  c.expect(std::includes(half.begin(), half.end(), want.begin(), want.end()),
           "threshold 0.5 misses {c, u}");
  c.expect(core_alphabet_heuristic(indic, 1.0) == want,
           "threshold 1.0 on the Indic subset");
  report(5, "extended and core alphabet recovery", c);
}

void criterion_6() {
  Checker c;
  c.expect(groups().size() >= 12,
           "bundled themes: " + std::to_string(groups().size()));
  for (const MLanguage& g : groups()) {
    Mfa mfa = build_group_mfa(g);
    c.expect(enumerate_language(mfa, longest_member(g) + 2) == member_ids(g),
             "theme " + g.theme_id + ": language differs from member set");
  }
  report(6, "each group automaton accepts exactly its members", c);
}

void criterion_7() {
  Checker c;
  auto chain_equal = [&c](const std::string& name,
                          const std::vector<PhonemeSequence>& words,
                          std::size_t bound) {
    Mfa trie = build_trie(words);
    Mfa merged = merge_suffixes(trie);
    Mfa det = determinize(merged);
    Mfa min = minimize(det);
    std::set<std::vector<std::string>> lang = enumerate_language(trie, bound);
    c.expect(enumerate_language(merged, bound) == lang, name + ": merge stage");
    c.expect(enumerate_language(det, bound) == lang, name + ": determinize stage");
    c.expect(enumerate_language(min, bound) == lang, name + ": minimize stage");
  };

  for (const MLanguage& g : groups()) {
    std::vector<PhonemeSequence> words;
    for (const MLanguage::Member& m : g.members) words.push_back(m.seq);
    if (words.empty()) continue;
    chain_equal("theme " + g.theme_id, words, longest_member(g) + 2);
  }

  const std::vector<std::string> pool{"a", "i", "u", "e", "o",  "k", "g",
                                      "c", "t", "d", "p", "b",  "m", "n",
                                      "r", "l", "v", "s", "ā",  "h"};
  std::mt19937 rng(424242);
  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<std::size_t> alpha_size(2, 8);
    std::vector<std::string> alphabet = pool;
    std::shuffle(alphabet.begin(), alphabet.end(), rng);
    alphabet.resize(alpha_size(rng));

    std::uniform_int_distribution<std::size_t> word_count(3, 8);
    std::uniform_int_distribution<std::size_t> word_len(1, 6);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::vector<PhonemeSequence> words;
    std::size_t n = word_count(rng);
    std::size_t longest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      PhonemeSequence seq;
      std::size_t len = word_len(rng);
      longest = std::max(longest, len);
      for (std::size_t j = 0; j < len; ++j) seq.ids.push_back(alphabet[pick(rng)]);
      words.push_back(std::move(seq));
    }
    chain_equal("random group " + std::to_string(round), words, longest + 2);
  }
  report(7, "trie, merged, determinized and minimized stages agree", c);
}

void criterion_8() {
  Checker c;
  const MLanguage& poetry = find_theme(groups(), "poetry");
  Grammar g = export_grammar(build_group_mfa(poetry));
  auto has_rule = [&g](int lhs, const char* sym, int next) {
    GrammarRule want{lhs, {sym}, next};
    return std::find(g.rules.begin(), g.rules.end(), want) != g.rules.end();
  };
  c.expect(has_rule(0, "k", 1), "missing Q0 -> k Q1");
  c.expect(has_rule(1, "a", 2), "missing Q1 -> a Q2");
  c.expect(has_rule(2, "v", 3), "missing Q2 -> v Q3");
  for (const MLanguage::Member& m : poetry.members) {
    c.expect(derives(g, m.seq.ids), m.word + " does not derive from Q0");
  }
  c.expect(!derives(g, tok("kav").ids), "kav must not derive");
  report(8, "poetry grammar rules and member derivability", c);
}

void criterion_9() {
  Checker c;
  const PhoneticMap& map = the_map();
  const std::vector<std::string> pool{"a", "i", "u", "k", "g", "c",  "t",
                                      "d", "p", "b", "m", "n", "r",  "l",
                                      "v", "s", "y", "ā", "ṭ", "h"};
  std::mt19937 rng(20240902);
  std::uniform_int_distribution<std::size_t> word_len(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto random_total = [&] {
    PhonemeSequence seq;
    std::size_t len = word_len(rng);
    for (std::size_t j = 0; j < len; ++j) seq.ids.push_back(pool[pick(rng)]);
    return word_distance(map, seq);
  };
  for (int round = 0; round < 1000 && c.ok; ++round) {
    DistancePair a = random_total(), b = random_total(), x = random_total();
    DistancePair ab = inter_word_distance(a, b);
    DistancePair ba = inter_word_distance(b, a);
    DistancePair ax = inter_word_distance(a, x);
    DistancePair xb = inter_word_distance(x, b);
    c.expect(ab == ba, "symmetry violated");
    c.expect(inter_word_distance(a, a) == DistancePair{0, 0},
             "self distance nonzero");
    c.expect(ab.dx2 <= ax.dx2 + xb.dx2 && ab.dy2 <= ax.dy2 + xb.dy2,
             "triangle inequality violated");
  }

  for (const MLanguage& g : groups()) {
    for (const MLanguage::Member& m : g.members) {
      WordPath path = word_path(map, m.seq);
      DistancePair prev{0, 0};
      for (const WordPath::Step& step : path.steps) {
        c.expect(step.cumulative.dx2 >= prev.dx2 &&
                     step.cumulative.dy2 >= prev.dy2,
                 m.word + ": cumulative distance decreased");
        prev = step.cumulative;
      }
      c.expect(word_distance(map, m.seq) == fold_distance(map, m.seq),
               m.word + ": fold oracle disagrees");
    }
  }
  report(9, "pseudometric axioms, prefix monotonicity and fold oracle", c);
}

void criterion_10() {
  Checker c;
  std::vector<std::string> all;
  all.emplace_back();
  std::size_t start = 0;
  for (int len = 1; len <= 6; ++len) {
    std::size_t end = all.size();
    for (std::size_t i = start; i < end; ++i) {
      for (char ch : {'a', 'b', 'c'}) all.push_back(all[i] + ch);
    }
    start = end;
  }
  c.expect(all.size() == 1093, "string universe size");
  bool lev_ok = true;
  for (const std::string& a : all) {
    for (const std::string& b : all) {
      if (levenshtein(a, b) != lev_oracle(a, b)) {
        lev_ok = false;
        c.expect(false, "levenshtein('" + a + "', '" + b + "')");
        break;
      }
    }
    if (!lev_ok) break;
  }

  const std::string coded[7] = {"", "BFPV", "CGJKQSXZ", "DT", "L", "MN", "R"};
  for (int cls = 1; cls <= 6; ++cls) {
    for (char letter : coded[cls]) {
      std::string code = soundex(std::string("A") + letter);
      c.expect(code == std::string("A") + static_cast<char>('0' + cls) + "00",
               std::string("class of ") + letter + ": " + code);
    }
  }
  for (char letter : std::string("AEIOUYHW")) {
    c.expect(soundex(std::string("B") + letter) == "B000",
             std::string("uncoded letter ") + letter);
  }
  for (const char* name : {"Robert", "Rupert", "Ashcraft", "Tymczak",
                           "Pfister", "Honeyman", "Jackson", "M"}) {
    std::string code = soundex(name);
    bool shaped = code.size() == 4 && code[0] >= 'A' && code[0] <= 'Z' &&
                  std::isdigit(static_cast<unsigned char>(code[1])) &&
                  std::isdigit(static_cast<unsigned char>(code[2])) &&
                  std::isdigit(static_cast<unsigned char>(code[3]));
    c.expect(shaped, std::string(name) + " -> " + code);
  }
  c.expect(soundex("Robert") == "R163", "Robert");
  c.expect(soundex("Rupert") == "R163", "Rupert");
  c.expect(soundex("M") == "M000", "M");
  report(10, "edit-distance oracle and Soundex class table", c);
}

void criterion_11() {
  Checker c;
  const PhoneticMap& map = the_map();
  std::set<std::string> skipped;
  std::size_t round_tripped = 0;
  for (const MLanguage& g : groups()) {
    std::vector<LexiconEntry> rows = g.non_members;
    for (const LexiconEntry& e : g.untokenizable) rows.push_back(e);
    for (const LexiconEntry& e : rows) {
      try {
        PhonemeSequence seq = tokenize(map, e.word);
        c.expect(render(seq) == normalize(e.word), e.word + ": render mismatch");
        ++round_tripped;
      } catch (const TokenizeError&) {
        skipped.insert(e.word);
      }
    }
    for (const MLanguage::Member& m : g.members) {
      c.expect(render(m.seq) == normalize(m.seq.source_text),
               m.word + ": render mismatch");
      c.expect(tokenize(map, m.word) == m.seq, m.word + ": reparse mismatch");
      ++round_tripped;
    }
  }
  c.expect(round_tripped > 140, "word sample too small");
  c.expect(skipped ==
               std::set<std::string>{"face", "fada", "mezzo", "nizhe", "nizsie"},
           "unexpected untokenizable words");

  for (const char* theme : {"poetry", "kinship", "dirgha"}) {
    const MLanguage& g = find_theme(groups(), theme);
    Mfa mfa = build_group_mfa(g);
    std::string path = std::string("acceptance_") + theme + ".json";
    save(mfa, path);
    Mfa back = load(path);
    std::remove(path.c_str());
    c.expect(back == mfa, std::string(theme) + ": reloaded automaton differs");
    c.expect(enumerate_language(back, longest_member(g) + 2) == member_ids(g),
             std::string(theme) + ": reloaded language differs");

    DistanceMatrix m = matrix_of(g);
    c.expect(matrix_from_csv(matrix_to_csv(m)) == m,
             std::string(theme) + ": CSV round trip differs");
  }
  report(11, "transliteration, automaton-file and CSV round trips", c);
  if (!skipped.empty()) {
    std::string list;
    for (const std::string& w : skipped) {
      if (!list.empty()) list += ", ";
      list += w;
    }
    note("words outside the sound inventory (f, z) and documented as such: " +
         list);
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d of 11 criteria failed\n", g_failures);
  return 1;
}
