// automata_test.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/automata.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "panini/error.hpp"

using namespace panini;

namespace {

PhonemeSequence seq(const std::string& word) {
  return tokenize(PhoneticMap::canonical(), word);
}

std::vector<PhonemeSequence> seqs(const std::vector<std::string>& words) {
  std::vector<PhonemeSequence> out;
  for (const std::string& w : words) out.push_back(seq(w));
  return out;
}

std::set<std::vector<std::string>> id_set(const std::vector<std::string>& words) {
  std::set<std::vector<std::string>> out;
  for (const std::string& w : words) out.insert(seq(w).ids);
  return out;
}

const std::vector<std::string> kPoetry{"kavi", "kavitā", "kāvya", "kavana"};
const std::vector<std::string> kKinship{"pitā", "mātā", "bhrātā", "duhitā"};

}  // namespace

TEST_CASE("trie construction") {
  Mfa trie = build_trie(seqs(kPoetry));
  CHECK(trie.num_states == 14);
  CHECK(trie.accepting.size() == 4);
  CHECK(trie.deterministic());
  CHECK(trie.alphabet ==
        std::set<std::string>{"a", "i", "k", "n", "t", "v", "y", "ā"});
  CHECK(accepts(trie, seq("kavi")));
  CHECK(accepts(trie, seq("kavitā")));
  CHECK(!accepts(trie, seq("kav")));
  CHECK(!accepts(trie, seq("mātā")));
  CHECK(!accepts(trie, seq("kavitāā")));

  SUBCASE("single word") {
    Mfa one = build_trie(seqs({"a"}));
    CHECK(one.num_states == 2);
    CHECK(one.accepting == std::set<int>{1});
  }

  SUBCASE("no words accepts nothing") {
    Mfa none = build_trie({});
    CHECK(none.num_states == 1);
    CHECK(none.accepting.empty());
    CHECK(enumerate_language(none, 5).empty());
  }

  SUBCASE("empty word accepts the empty sequence") {
    Mfa eps = build_trie({PhonemeSequence{}});
    CHECK(eps.accepting == std::set<int>{0});
    CHECK(enumerate_language(eps, 0) ==
          std::set<std::vector<std::string>>{{}});
  }

  SUBCASE("labels land on the word's accepting state") {
    Mfa labeled = build_trie(seqs({"kavi", "kavi"}),
                             {MfaLabel{"kavi", {"Sa"}}, MfaLabel{"kavi", {"Ka"}}});
    REQUIRE(labeled.accepting.size() == 1);
    int acc = *labeled.accepting.begin();
    REQUIRE(labeled.labels.count(acc));
    REQUIRE(labeled.labels.at(acc).size() == 1);
    CHECK(labeled.labels.at(acc)[0].word == "kavi");
    CHECK(labeled.labels.at(acc)[0].languages ==
          std::vector<std::string>{"Ka", "Sa"});
  }
}

TEST_CASE("suffix merging shares right languages") {
  Mfa trie = build_trie(seqs(kKinship));
  CHECK(trie.num_states == 20);
  Mfa merged = merge_suffixes(trie);
  CHECK(merged.num_states == 12);

  std::size_t epsilon_edges = 0;
  for (const std::set<int>& eps : merged.epsilon) epsilon_edges += eps.size();
  CHECK(epsilon_edges > 0);
  CHECK(!merged.deterministic());

  CHECK(enumerate_language(merged, 8) == enumerate_language(trie, 8));
  for (const std::string& w : kKinship) CHECK(accepts(merged, seq(w)));
  CHECK(!accepts(merged, seq("pit")));
  CHECK(!accepts(merged, seq("tā")));

  SUBCASE("poetry keeps its shared prefix and merges tails") {
    Mfa poetry = merge_suffixes(build_trie(seqs(kPoetry)));
    CHECK(poetry.num_states == 13);
    CHECK(enumerate_language(poetry, 8) == id_set(kPoetry));
  }

  SUBCASE("labels move to the class representative") {
    Mfa labeled = merge_suffixes(build_trie(
        seqs({"pitā", "mātā"}),
        {MfaLabel{"pitā", {"Sa"}}, MfaLabel{"mātā", {"Sa"}}}));
    std::size_t label_words = 0;
    for (const auto& [state, list] : labeled.labels) {
      CHECK(labeled.accepting.count(state));
      label_words += list.size();
    }
    CHECK(label_words == 2);
  }

  SUBCASE("epsilon input is rejected") {
    Mfa merged_once = merge_suffixes(trie);
    CHECK_THROWS_AS(merge_suffixes(merged_once), std::invalid_argument);
  }
}

TEST_CASE("determinize") {
  Mfa trie = build_trie(seqs(kKinship));
  Mfa merged = merge_suffixes(trie);
  Mfa det = determinize(merged);
  CHECK(det.deterministic());
  for (const std::set<int>& eps : det.epsilon) CHECK(eps.empty());
  CHECK(enumerate_language(det, 8) == id_set(kKinship));

  SUBCASE("a trie is already deterministic") {
    Mfa det_trie = determinize(trie);
    CHECK(det_trie.num_states == trie.num_states);
    CHECK(enumerate_language(det_trie, 8) == id_set(kKinship));
  }

  SUBCASE("same input gives identical output") {
    CHECK(determinize(merged) == det);
  }
}

TEST_CASE("minimize") {
  Mfa det = determinize(merge_suffixes(build_trie(seqs(kPoetry))));
  Mfa min = minimize(det);
  CHECK(min.deterministic());
  CHECK(min.num_states == 11);
  CHECK(min.num_states <= det.num_states);
  CHECK(enumerate_language(min, 8) == id_set(kPoetry));

  SUBCASE("idempotent") {
    CHECK(minimize(min) == min);
  }

  SUBCASE("kinship collapses to nine states") {
    Mfa m = minimize(determinize(merge_suffixes(build_trie(seqs(kKinship)))));
    CHECK(m.num_states == 9);
    CHECK(enumerate_language(m, 8) == id_set(kKinship));
  }

  SUBCASE("requires a deterministic machine") {
    CHECK_THROWS_AS(minimize(merge_suffixes(build_trie(seqs(kKinship)))),
                    NotDeterministicError);
  }

  SUBCASE("empty language minimizes to a single state") {
    Mfa none = minimize(build_trie({}));
    CHECK(none.num_states == 1);
    CHECK(none.accepting.empty());
  }

  SUBCASE("labels survive to the merged accepting states") {
    Mfa min_labeled = minimize(determinize(merge_suffixes(build_trie(
        seqs(kPoetry),
        {MfaLabel{"kavi", {"Sa"}}, MfaLabel{"kavitā", {"Sa"}},
         MfaLabel{"kāvya", {"Sa"}}, MfaLabel{"kavana", {"Ka"}}}))));
    std::set<std::string> words;
    for (const auto& [state, list] : min_labeled.labels) {
      for (const MfaLabel& l : list) words.insert(l.word);
    }
    CHECK(words == std::set<std::string>{"kavi", "kavitā", "kāvya", "kavana"});
  }
}

TEST_CASE("enumerate respects the length bound") {
  Mfa trie = build_trie(seqs(kPoetry));
  CHECK(enumerate_language(trie, 3).empty());
  CHECK(enumerate_language(trie, 4) ==
        std::set<std::vector<std::string>>{seq("kavi").ids});
  CHECK(enumerate_language(trie, 6) == id_set(kPoetry));
  CHECK(enumerate_language(trie, 50) == id_set(kPoetry));
}

TEST_CASE("grammar export") {
  SUBCASE("single letter word") {
    Grammar g = export_grammar(build_trie(seqs({"a"})));
    CHECK(g.to_text() == "Q0 -> a Q1; Q1 -> ε");
    CHECK(derives(g, {"a"}));
    CHECK(!derives(g, {}));
    CHECK(!derives(g, {"a", "a"}));
  }

  SUBCASE("poetry grammar names states depth-first") {
    Mfa min = minimize(determinize(merge_suffixes(build_trie(seqs(kPoetry)))));
    Grammar g = export_grammar(min);
    auto has_rule = [&](int lhs, const char* sym, int next) {
      GrammarRule want{lhs, {sym}, next};
      for (const GrammarRule& r : g.rules) {
        if (r == want) return true;
      }
      return false;
    };
    CHECK(has_rule(0, "k", 1));
    CHECK(has_rule(1, "a", 2));
    CHECK(has_rule(2, "v", 3));
    for (const std::string& w : kPoetry) CHECK(derives(g, seq(w).ids));
    CHECK(!derives(g, seq("kav").ids));
    CHECK(grammar_language(g, 8) == id_set(kPoetry));
  }

  SUBCASE("compression folds chains into multi-phoneme terminals") {
    Mfa min = minimize(determinize(merge_suffixes(build_trie(seqs(kKinship)))));
    Grammar plain = export_grammar(min, false);
    Grammar packed = export_grammar(min, true);
    CHECK(packed.rules.size() < plain.rules.size());
    bool has_ta_terminal = false;
    for (const GrammarRule& r : packed.rules) {
      if (r.terminal == std::vector<std::string>{"t", "ā"} && !r.next) {
        has_ta_terminal = true;
      }
    }
    CHECK(has_ta_terminal);
    CHECK(packed.to_text().find("tā") != std::string::npos);
    CHECK(grammar_language(packed, 8) == grammar_language(plain, 8));
    for (const std::string& w : kKinship) CHECK(derives(packed, seq(w).ids));
  }

  SUBCASE("rejects nondeterministic input") {
    CHECK_THROWS_AS(export_grammar(merge_suffixes(build_trie(seqs(kKinship)))),
                    NotDeterministicError);
  }
}

TEST_CASE("dot export") {
  Mfa min = minimize(determinize(merge_suffixes(build_trie(
      seqs(kPoetry),
      {MfaLabel{"kavi", {"Sa"}}, MfaLabel{"kavitā", {"Sa"}},
       MfaLabel{"kāvya", {"Sa"}}, MfaLabel{"kavana", {"Ka"}}}))));
  std::string dot = export_dot(min);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("__start -> q0;") != std::string::npos);
  std::size_t doubled = 0;
  for (std::size_t pos = dot.find("doublecircle"); pos != std::string::npos;
       pos = dot.find("doublecircle", pos + 1)) {
    ++doubled;
  }
  CHECK(doubled == min.accepting.size());
  CHECK(dot.find("kavana (Ka)") != std::string::npos);

  SUBCASE("epsilon edges are dashed") {
    std::string merged_dot = export_dot(merge_suffixes(build_trie(seqs(kKinship))));
    CHECK(merged_dot.find("style=dashed") != std::string::npos);
  }

  SUBCASE("no accepting states, no double circles") {
    CHECK(export_dot(build_trie({})).find("doublecircle") == std::string::npos);
  }
}

TEST_CASE("json round trip") {
  Mfa merged = merge_suffixes(build_trie(
      seqs(kKinship),
      {MfaLabel{"pitā", {"Sa"}}, MfaLabel{"mātā", {"Sa"}},
       MfaLabel{"bhrātā", {"Sa"}}, MfaLabel{"duhitā", {"Sa"}}}));
  std::string text = to_json(merged);
  CHECK(from_json(text) == merged);
  CHECK(to_json(from_json(text)) == text);

  // Stable field order.
  CHECK(text.find("\"alphabet\"") < text.find("\"states\""));
  CHECK(text.find("\"states\"") < text.find("\"start\""));
  CHECK(text.find("\"start\"") < text.find("\"accepting\""));
  CHECK(text.find("\"accepting\"") < text.find("\"transitions\""));
  CHECK(text.find("\"transitions\"") < text.find("\"epsilon\""));
  CHECK(text.find("\"epsilon\"") < text.find("\"labels\""));

  SUBCASE("file save and load") {
    std::string path = "automata_roundtrip_test.json";
    save(merged, path);
    Mfa back = load(path);
    CHECK(back == merged);
    CHECK(enumerate_language(back, 8) == enumerate_language(merged, 8));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load(path), IoError);
  }
}

TEST_CASE("json rejects malformed machines") {
  Mfa trie = build_trie(seqs({"kavi"}));
  std::string good = to_json(trie);

  CHECK_THROWS_AS(from_json(good.substr(0, good.size() / 2)),
                  AutomatonFormatError);
  CHECK_THROWS_AS(from_json("[]"), AutomatonFormatError);
  CHECK_THROWS_AS(from_json("{}"), AutomatonFormatError);
  CHECK_THROWS_AS(
      from_json(R"({"alphabet":["a"],"states":0,"start":0,"accepting":[],"transitions":[]})"),
      AutomatonFormatError);
  CHECK_THROWS_AS(
      from_json(R"({"alphabet":["a"],"states":2,"start":5,"accepting":[],"transitions":[]})"),
      AutomatonFormatError);
  CHECK_THROWS_AS(
      from_json(R"({"alphabet":["a"],"states":2,"start":0,"accepting":[7],"transitions":[]})"),
      AutomatonFormatError);
  CHECK_THROWS_AS(
      from_json(R"({"alphabet":["a"],"states":2,"start":0,"accepting":[1],"transitions":[[0,"a",9]]})"),
      AutomatonFormatError);
  // Transition symbol missing from the alphabet.
  CHECK_THROWS_AS(
      from_json(R"({"alphabet":["a"],"states":2,"start":0,"accepting":[1],"transitions":[[0,"b",1]]})"),
      AutomatonFormatError);
  CHECK_THROWS_AS(
      from_json(R"({"alphabet":["a"],"states":2,"start":0,"accepting":[1],"transitions":[[0,"a",1]],"epsilon":[[0,9]]})"),
      AutomatonFormatError);
  CHECK_THROWS_AS(
      from_json(R"({"alphabet":["a"],"states":2,"start":0,"accepting":[1],"transitions":[[0,"a",1]],"labels":{"x":[]}})"),
      AutomatonFormatError);
}
