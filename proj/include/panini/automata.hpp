// automata.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Word-group automata over phoneme alphabets.  The usual pipeline is
//   build_trie -> merge_suffixes -> determinize -> minimize
// where every stage accepts exactly the same words.  States are dense
// ints from 0; symbols are phoneme ids.  All functions take their
// input by const reference and return a fresh machine.

#ifndef PANINI_AUTOMATA_HPP_
#define PANINI_AUTOMATA_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "panini/translit.hpp"

namespace panini {

// Provenance of an accepting state: the word it accepts and the
// languages attested for it.
struct MfaLabel {
  std::string word;
  std::vector<std::string> languages;  // sorted, unique

  friend bool operator==(const MfaLabel&, const MfaLabel&) = default;
};

struct Mfa {
  using State = int;

  std::set<std::string> alphabet;
  int num_states = 0;
  State start = 0;
  std::set<State> accepting;
  // transitions[s][symbol] -> successor set; deterministic machines
  // keep each set at size 1 and epsilon empty.
  std::vector<std::map<std::string, std::set<State>>> transitions;
  std::vector<std::set<State>> epsilon;
  std::map<State, std::vector<MfaLabel>> labels;  // per accepting state

  bool deterministic() const;

  friend bool operator==(const Mfa&, const Mfa&) = default;
};

// Prefix-tree acceptor for a word group.  labels must be empty or
// parallel to words; duplicate words merge their language lists.
Mfa build_trie(const std::vector<PhonemeSequence>& words,
               const std::vector<MfaLabel>& labels = {});

// Shares equal right languages: within each class of states that
// accept the same suffix set, one representative keeps its subtree
// and the others are reduced to an epsilon edge into it.  Unreachable
// leftovers are pruned.  Intended for tries; preserves the language.
Mfa merge_suffixes(const Mfa& m);

// Epsilon-closure subset construction.  States are numbered
// breadth-first from the start closure, following symbols in byte
// order, so the result is canonical for a given input.
Mfa determinize(const Mfa& m);

// Hopcroft-style partition refinement on a completed machine (an
// implicit dead state absorbs missing edges and is dropped again).
// Requires a deterministic input; throws NotDeterministicError.
Mfa minimize(const Mfa& m);

bool accepts(const Mfa& m, const PhonemeSequence& w);

// Every accepted id sequence of at most max_len phonemes, in
// lexicographic order.  Meant for the finite languages of word-group
// automata; the walk is depth-limited so it terminates on any input.
std::set<std::vector<std::string>> enumerate_language(const Mfa& m,
                                                      std::size_t max_len);

// Right-linear grammar, one nonterminal per reachable state that
// carries outgoing edges.  terminal holds a phoneme id sequence
// (longer than 1 only after chain compression); empty terminal with
// no successor is an epsilon production.
struct GrammarRule {
  int lhs = 0;
  std::vector<std::string> terminal;
  std::optional<int> next;

  friend bool operator==(const GrammarRule&, const GrammarRule&) = default;
};

struct Grammar {
  int num_nonterminals = 0;
  std::vector<GrammarRule> rules;  // grouped by lhs, in naming order

  // "Q0 -> k Q1; Q1 -> a Q2 | ā Q3; Q3 -> ε" style rendering.
  std::string to_text() const;
};

// Names states Q0, Q1, ... in depth-first preorder following symbols
// in byte order.  With compress true, runs of non-accepting,
// single-edge states collapse into multi-phoneme terminals.  Requires
// a deterministic machine.
Grammar export_grammar(const Mfa& m, bool compress = false);

// Derivability by rule simulation; the grammar side of accepts().
bool derives(const Grammar& g, const std::vector<std::string>& word);

// All words of at most max_len phonemes the grammar derives.
std::set<std::vector<std::string>> grammar_language(const Grammar& g,
                                                    std::size_t max_len);

// Graphviz rendering: accepting states doubled, epsilon edges dashed,
// labels listed inside accepting nodes.
std::string export_dot(const Mfa& m);

// JSON serialization.  The layout is stable field order, sorted
// transition lists and two-space indentation, so equal machines
// always serialize to identical bytes.
std::string to_json(const Mfa& m);
Mfa from_json(const std::string& text);  // throws AutomatonFormatError

void save(const Mfa& m, const std::string& path);  // throws IoError
Mfa load(const std::string& path);

}  // namespace panini

#endif  // PANINI_AUTOMATA_HPP_
