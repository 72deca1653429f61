// automata.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/automata.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "panini/error.hpp"

namespace panini {

namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Merges a label into the state's list, by word.
void add_label(Mfa& m, Mfa::State s, MfaLabel label) {
  sort_unique(label.languages);
  std::vector<MfaLabel>& list = m.labels[s];
  for (MfaLabel& existing : list) {
    if (existing.word == label.word) {
      existing.languages.insert(existing.languages.end(),
                                label.languages.begin(),
                                label.languages.end());
      sort_unique(existing.languages);
      return;
    }
  }
  list.push_back(std::move(label));
  std::sort(list.begin(), list.end(),
            [](const MfaLabel& a, const MfaLabel& b) { return a.word < b.word; });
}

std::set<Mfa::State> closure(const Mfa& m, std::set<Mfa::State> states) {
  std::vector<Mfa::State> pending(states.begin(), states.end());
  while (!pending.empty()) {
    Mfa::State s = pending.back();
    pending.pop_back();
    for (Mfa::State t : m.epsilon[s]) {
      if (states.insert(t).second) pending.push_back(t);
    }
  }
  return states;
}

}  // namespace

bool Mfa::deterministic() const {
  for (const std::set<State>& eps : epsilon) {
    if (!eps.empty()) return false;
  }
  for (const auto& edges : transitions) {
    for (const auto& [symbol, targets] : edges) {
      if (targets.size() > 1) return false;
    }
  }
  return true;
}

Mfa build_trie(const std::vector<PhonemeSequence>& words,
               const std::vector<MfaLabel>& labels) {
  if (!labels.empty() && labels.size() != words.size()) {
    throw std::invalid_argument("build_trie: labels must parallel words");
  }
  Mfa m;
  m.num_states = 1;
  m.transitions.emplace_back();
  m.epsilon.emplace_back();
  for (std::size_t i = 0; i < words.size(); ++i) {
    Mfa::State s = 0;
    for (const std::string& id : words[i].ids) {
      m.alphabet.insert(id);
      auto it = m.transitions[s].find(id);
      if (it != m.transitions[s].end()) {
        s = *it->second.begin();
      } else {
        Mfa::State t = m.num_states++;
        m.transitions.emplace_back();
        m.epsilon.emplace_back();
        m.transitions[s][id].insert(t);
        s = t;
      }
    }
    m.accepting.insert(s);
    if (!labels.empty()) add_label(m, s, labels[i]);
  }
  return m;
}

Mfa merge_suffixes(const Mfa& m) {
  for (const std::set<Mfa::State>& eps : m.epsilon) {
    if (!eps.empty()) {
      throw std::invalid_argument("merge_suffixes expects a trie");
    }
  }

  // Right-language class per state, interned bottom-up.  Two states
  // land in the same class iff they accept the same suffix set.
  std::map<std::string, int> intern;
  std::vector<int> cls(m.num_states, -1);
  std::function<int(Mfa::State)> classify = [&](Mfa::State s) {
    if (cls[s] >= 0) return cls[s];
    std::string key = m.accepting.count(s) ? "A" : "N";
    for (const auto& [symbol, targets] : m.transitions[s]) {
      for (Mfa::State t : targets) {
        key += '|';
        key += symbol;
        key += ':';
        key += std::to_string(classify(t));
      }
    }
    auto [it, inserted] = intern.emplace(key, static_cast<int>(intern.size()));
    (void)inserted;
    return cls[s] = it->second;
  };
  for (Mfa::State s = 0; s < m.num_states; ++s) classify(s);

  // Lowest state id represents its class; the rest become epsilon
  // stubs into it.
  std::vector<Mfa::State> representative(intern.size(), -1);
  for (Mfa::State s = 0; s < m.num_states; ++s) {
    if (representative[cls[s]] < 0) representative[cls[s]] = s;
  }

  Mfa merged = m;
  for (Mfa::State s = 0; s < merged.num_states; ++s) {
    Mfa::State rep = representative[cls[s]];
    if (rep == s) continue;
    merged.transitions[s].clear();
    merged.epsilon[s] = {rep};
    if (merged.accepting.erase(s)) {
      auto it = merged.labels.find(s);
      if (it != merged.labels.end()) {
        for (MfaLabel& label : it->second) add_label(merged, rep, label);
        merged.labels.erase(it);
      }
    }
  }

  // Prune states no longer reachable (through symbols or epsilon).
  std::vector<char> reachable(merged.num_states, 0);
  std::vector<Mfa::State> pending{merged.start};
  reachable[merged.start] = 1;
  while (!pending.empty()) {
    Mfa::State s = pending.back();
    pending.pop_back();
    for (const auto& [symbol, targets] : merged.transitions[s]) {
      for (Mfa::State t : targets) {
        if (!reachable[t]) {
          reachable[t] = 1;
          pending.push_back(t);
        }
      }
    }
    for (Mfa::State t : merged.epsilon[s]) {
      if (!reachable[t]) {
        reachable[t] = 1;
        pending.push_back(t);
      }
    }
  }

  std::vector<Mfa::State> renumber(merged.num_states, -1);
  Mfa out;
  for (Mfa::State s = 0; s < merged.num_states; ++s) {
    if (reachable[s]) renumber[s] = out.num_states++;
  }
  out.alphabet = m.alphabet;
  out.start = renumber[merged.start];
  out.transitions.resize(out.num_states);
  out.epsilon.resize(out.num_states);
  for (Mfa::State s = 0; s < merged.num_states; ++s) {
    if (!reachable[s]) continue;
    for (const auto& [symbol, targets] : merged.transitions[s]) {
      for (Mfa::State t : targets) {
        out.transitions[renumber[s]][symbol].insert(renumber[t]);
      }
    }
    for (Mfa::State t : merged.epsilon[s]) {
      out.epsilon[renumber[s]].insert(renumber[t]);
    }
    if (merged.accepting.count(s)) out.accepting.insert(renumber[s]);
    auto it = merged.labels.find(s);
    if (it != merged.labels.end()) out.labels[renumber[s]] = it->second;
  }
  return out;
}

Mfa determinize(const Mfa& m) {
  Mfa out;
  out.alphabet = m.alphabet;

  std::map<std::set<Mfa::State>, Mfa::State> subset_ids;
  std::vector<std::set<Mfa::State>> subsets;
  auto intern_subset = [&](std::set<Mfa::State> subset) {
    auto it = subset_ids.find(subset);
    if (it != subset_ids.end()) return it->second;
    Mfa::State id = static_cast<Mfa::State>(subsets.size());
    subset_ids.emplace(subset, id);
    subsets.push_back(std::move(subset));
    return id;
  };

  intern_subset(closure(m, {m.start}));
  out.start = 0;
  // Breadth-first over discovered subsets; symbol order inside each
  // subset is byte order, so numbering is canonical.
  for (Mfa::State id = 0; id < static_cast<Mfa::State>(subsets.size()); ++id) {
    std::map<std::string, std::set<Mfa::State>> moves;
    for (Mfa::State s : subsets[id]) {
      for (const auto& [symbol, targets] : m.transitions[s]) {
        moves[symbol].insert(targets.begin(), targets.end());
      }
    }
    out.transitions.emplace_back();
    out.epsilon.emplace_back();
    for (auto& [symbol, targets] : moves) {
      Mfa::State t = intern_subset(closure(m, std::move(targets)));
      out.transitions[id][symbol].insert(t);
    }
  }
  out.num_states = static_cast<Mfa::State>(subsets.size());
  // transitions/epsilon may be shorter than num_states when the last
  // subsets were discovered in the final iteration.
  out.transitions.resize(out.num_states);
  out.epsilon.resize(out.num_states);

  for (Mfa::State id = 0; id < out.num_states; ++id) {
    bool acc = false;
    for (Mfa::State s : subsets[id]) {
      if (m.accepting.count(s)) {
        acc = true;
        auto it = m.labels.find(s);
        if (it != m.labels.end()) {
          for (const MfaLabel& label : it->second) add_label(out, id, label);
        }
      }
    }
    if (acc) out.accepting.insert(id);
  }
  return out;
}

namespace {

Mfa empty_language_like(const Mfa& m) {
  Mfa out;
  out.alphabet = m.alphabet;
  out.num_states = 1;
  out.start = 0;
  out.transitions.emplace_back();
  out.epsilon.emplace_back();
  return out;
}

}  // namespace

Mfa minimize(const Mfa& m) {
  if (!m.deterministic()) {
    throw NotDeterministicError("minimize requires a deterministic machine");
  }

  // Work on the reachable part only.
  std::vector<Mfa::State> order;
  std::vector<int> seen(m.num_states, 0);
  order.push_back(m.start);
  seen[m.start] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [symbol, targets] : m.transitions[order[i]]) {
      for (Mfa::State t : targets) {
        if (!seen[t]) {
          seen[t] = 1;
          order.push_back(t);
        }
      }
    }
  }

  bool any_accepting = false;
  for (Mfa::State s : order) {
    if (m.accepting.count(s)) any_accepting = true;
  }
  if (!any_accepting) return empty_language_like(m);

  // Moore refinement over the completed machine: state n is the
  // implicit dead state every missing edge leads to.
  std::vector<std::string> symbols(m.alphabet.begin(), m.alphabet.end());
  int n = static_cast<int>(order.size());
  std::vector<Mfa::State> compact(m.num_states, -1);
  for (int i = 0; i < n; ++i) compact[order[i]] = i;

  // delta[i][k] over compact ids; n acts as the dead state.
  std::vector<std::vector<int>> delta(n + 1, std::vector<int>(symbols.size(), n));
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      auto it = m.transitions[order[i]].find(symbols[k]);
      if (it != m.transitions[order[i]].end()) {
        delta[i][k] = compact[*it->second.begin()];
      }
    }
  }

  std::vector<int> cls(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (m.accepting.count(order[i])) cls[i] = 1;
  }
  while (true) {
    std::map<std::vector<int>, int> signature_ids;
    std::vector<int> next(n + 1);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> sig;
      sig.reserve(symbols.size() + 1);
      sig.push_back(cls[i]);
      for (std::size_t k = 0; k < symbols.size(); ++k) {
        sig.push_back(cls[delta[i][k]]);
      }
      auto [it, inserted] =
          signature_ids.emplace(std::move(sig), static_cast<int>(signature_ids.size()));
      (void)inserted;
      next[i] = it->second;
    }
    bool changed = false;
    for (int i = 0; i <= n; ++i) {
      if (next[i] != cls[i]) changed = true;
    }
    cls = std::move(next);
    if (!changed) break;
  }

  int dead_cls = cls[n];
  if (cls[compact[m.start]] == dead_cls) return empty_language_like(m);

  // Renumber live classes breadth-first from the start class.
  std::map<int, Mfa::State> cls_id;
  std::vector<int> cls_rep;  // compact id of some member
  std::vector<int> rep_of_cls(n + 2, -1);
  for (int i = 0; i < n; ++i) {
    if (rep_of_cls[cls[i]] < 0) rep_of_cls[cls[i]] = i;
  }
  std::vector<int> bfs{cls[compact[m.start]]};
  cls_id[bfs[0]] = 0;
  cls_rep.push_back(rep_of_cls[bfs[0]]);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int rep = rep_of_cls[bfs[i]];
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      int target_cls = cls[delta[rep][k]];
      if (target_cls == dead_cls || cls_id.count(target_cls)) continue;
      cls_id[target_cls] = static_cast<Mfa::State>(bfs.size());
      bfs.push_back(target_cls);
      cls_rep.push_back(rep_of_cls[target_cls]);
    }
  }

  Mfa out;
  out.alphabet = m.alphabet;
  out.num_states = static_cast<int>(bfs.size());
  out.start = 0;
  out.transitions.resize(out.num_states);
  out.epsilon.resize(out.num_states);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int rep = cls_rep[i];
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      int target_cls = cls[delta[rep][k]];
      if (target_cls == dead_cls) continue;
      out.transitions[i][symbols[k]].insert(cls_id[target_cls]);
    }
  }
  for (int i = 0; i < n; ++i) {
    auto it = cls_id.find(cls[i]);
    if (it == cls_id.end()) continue;  // unreachable class
    if (m.accepting.count(order[i])) {
      out.accepting.insert(it->second);
      auto lit = m.labels.find(order[i]);
      if (lit != m.labels.end()) {
        for (const MfaLabel& label : lit->second) add_label(out, it->second, label);
      }
    }
  }
  return out;
}

bool accepts(const Mfa& m, const PhonemeSequence& w) {
  std::set<Mfa::State> current = closure(m, {m.start});
  for (const std::string& id : w.ids) {
    std::set<Mfa::State> next;
    for (Mfa::State s : current) {
      auto it = m.transitions[s].find(id);
      if (it != m.transitions[s].end()) {
        next.insert(it->second.begin(), it->second.end());
      }
    }
    if (next.empty()) return false;
    current = closure(m, std::move(next));
  }
  for (Mfa::State s : current) {
    if (m.accepting.count(s)) return true;
  }
  return false;
}

namespace {

void enumerate_from(const Mfa& m, const std::set<Mfa::State>& current,
                    std::vector<std::string>& prefix, std::size_t max_len,
                    std::set<std::vector<std::string>>& out) {
  for (Mfa::State s : current) {
    if (m.accepting.count(s)) {
      out.insert(prefix);
      break;
    }
  }
  if (prefix.size() >= max_len) return;
  std::map<std::string, std::set<Mfa::State>> moves;
  for (Mfa::State s : current) {
    for (const auto& [symbol, targets] : m.transitions[s]) {
      moves[symbol].insert(targets.begin(), targets.end());
    }
  }
  for (auto& [symbol, targets] : moves) {
    prefix.push_back(symbol);
    enumerate_from(m, closure(m, std::move(targets)), prefix, max_len, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<std::vector<std::string>> enumerate_language(const Mfa& m,
                                                      std::size_t max_len) {
  std::set<std::vector<std::string>> out;
  std::vector<std::string> prefix;
  enumerate_from(m, closure(m, {m.start}), prefix, max_len, out);
  return out;
}

std::string Grammar::to_text() const {
  std::string out;
  std::optional<int> current_lhs;
  for (const GrammarRule& rule : rules) {
    if (current_lhs && *current_lhs == rule.lhs) {
      out += " | ";
    } else {
      if (current_lhs) out += "; ";
      out += "Q" + std::to_string(rule.lhs) + " -> ";
      current_lhs = rule.lhs;
    }
    if (rule.terminal.empty() && !rule.next) {
      out += "ε";
      continue;
    }
    std::string term;
    for (const std::string& id : rule.terminal) term += id;
    out += term;
    if (rule.next) out += " Q" + std::to_string(*rule.next);
  }
  return out;
}

namespace {

// Spliced edge graph used for grammar export: each edge carries a
// phoneme id sequence.
struct EdgeGraph {
  struct Edge {
    std::vector<std::string> terminal;
    int to;
  };
  int start = 0;
  int num_states = 0;
  std::set<int> accepting;
  std::vector<std::vector<Edge>> edges;  // kept sorted by terminal
};

EdgeGraph to_edge_graph(const Mfa& m) {
  EdgeGraph g;
  g.start = m.start;
  g.num_states = m.num_states;
  g.accepting = m.accepting;
  g.edges.resize(m.num_states);
  for (Mfa::State s = 0; s < m.num_states; ++s) {
    for (const auto& [symbol, targets] : m.transitions[s]) {
      g.edges[s].push_back(EdgeGraph::Edge{{symbol}, *targets.begin()});
    }
  }
  return g;
}

// Collapses runs through non-accepting states that have exactly one
// incoming and one outgoing edge.
void compress_chains(EdgeGraph& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> in_degree(g.num_states, 0);
    for (int s = 0; s < g.num_states; ++s) {
      for (const EdgeGraph::Edge& e : g.edges[s]) ++in_degree[e.to];
    }
    for (int s = 0; s < g.num_states; ++s) {
      for (EdgeGraph::Edge& e : g.edges[s]) {
        int t = e.to;
        while (t != g.start && !g.accepting.count(t) && in_degree[t] == 1 &&
               g.edges[t].size() == 1) {
          const EdgeGraph::Edge& tail = g.edges[t][0];
          e.terminal.insert(e.terminal.end(), tail.terminal.begin(),
                            tail.terminal.end());
          e.to = tail.to;
          g.edges[t].clear();
          t = e.to;
          changed = true;
        }
      }
    }
  }
  for (auto& edges : g.edges) {
    std::sort(edges.begin(), edges.end(),
              [](const EdgeGraph::Edge& a, const EdgeGraph::Edge& b) {
                return a.terminal < b.terminal;
              });
  }
}

}  // namespace

Grammar export_grammar(const Mfa& m, bool compress) {
  if (!m.deterministic()) {
    throw NotDeterministicError("export_grammar requires a deterministic machine");
  }
  EdgeGraph g = to_edge_graph(m);
  if (compress) compress_chains(g);

  // With compression, accepting states without outgoing edges are
  // inlined as terminal-only productions and never named.
  auto is_inlined_leaf = [&](int s) {
    return compress && g.edges[s].empty() && s != g.start;
  };

  // Depth-first preorder naming, edges in terminal order.
  std::vector<int> name(g.num_states, -1);
  int next_name = 0;
  std::function<void(int)> visit = [&](int s) {
    if (name[s] >= 0 || is_inlined_leaf(s)) return;
    name[s] = next_name++;
    for (const EdgeGraph::Edge& e : g.edges[s]) visit(e.to);
  };
  visit(g.start);

  Grammar out;
  out.num_nonterminals = next_name;
  std::vector<int> by_name(next_name, -1);
  for (int s = 0; s < g.num_states; ++s) {
    if (name[s] >= 0) by_name[name[s]] = s;
  }
  for (int q = 0; q < next_name; ++q) {
    int s = by_name[q];
    for (const EdgeGraph::Edge& e : g.edges[s]) {
      if (is_inlined_leaf(e.to)) {
        out.rules.push_back(GrammarRule{q, e.terminal, std::nullopt});
      } else {
        out.rules.push_back(GrammarRule{q, e.terminal, name[e.to]});
      }
    }
    if (g.accepting.count(s)) {
      out.rules.push_back(GrammarRule{q, {}, std::nullopt});
    }
  }
  return out;
}

namespace {

bool matches_at(const std::vector<std::string>& word, std::size_t pos,
                const std::vector<std::string>& terminal) {
  if (pos + terminal.size() > word.size()) return false;
  for (std::size_t i = 0; i < terminal.size(); ++i) {
    if (word[pos + i] != terminal[i]) return false;
  }
  return true;
}

}  // namespace

bool derives(const Grammar& g, const std::vector<std::string>& word) {
  std::vector<std::set<int>> active(word.size() + 1);
  if (g.num_nonterminals == 0) return false;
  active[0].insert(0);
  for (std::size_t pos = 0; pos <= word.size(); ++pos) {
    for (int nt : active[pos]) {
      for (const GrammarRule& rule : g.rules) {
        if (rule.lhs != nt) continue;
        if (!matches_at(word, pos, rule.terminal)) continue;
        std::size_t end = pos + rule.terminal.size();
        if (rule.next) {
          active[end].insert(*rule.next);
        } else if (end == word.size()) {
          return true;
        }
      }
    }
  }
  return false;
}

namespace {

void grammar_walk(const Grammar& g, int nt, std::vector<std::string>& prefix,
                  std::size_t max_len, std::set<std::vector<std::string>>& out) {
  for (const GrammarRule& rule : g.rules) {
    if (rule.lhs != nt) continue;
    if (prefix.size() + rule.terminal.size() > max_len) continue;
    std::size_t added = rule.terminal.size();
    prefix.insert(prefix.end(), rule.terminal.begin(), rule.terminal.end());
    if (rule.next) {
      grammar_walk(g, *rule.next, prefix, max_len, out);
    } else {
      out.insert(prefix);
    }
    prefix.resize(prefix.size() - added);
  }
}

}  // namespace

std::set<std::vector<std::string>> grammar_language(const Grammar& g,
                                                    std::size_t max_len) {
  std::set<std::vector<std::string>> out;
  if (g.num_nonterminals == 0) return out;
  std::vector<std::string> prefix;
  grammar_walk(g, 0, prefix, max_len, out);
  return out;
}

namespace {

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const Mfa& m) {
  std::string out = "digraph mfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  __start [shape=none, label=\"\"];\n";
  for (Mfa::State s : m.accepting) {
    std::string label = "q" + std::to_string(s);
    auto it = m.labels.find(s);
    if (it != m.labels.end()) {
      for (const MfaLabel& l : it->second) {
        label += "\\n" + dot_escape(l.word);
        if (!l.languages.empty()) {
          label += " (";
          for (std::size_t i = 0; i < l.languages.size(); ++i) {
            if (i) label += ", ";
            label += dot_escape(l.languages[i]);
          }
          label += ")";
        }
      }
    }
    out += "  q" + std::to_string(s) + " [shape=doublecircle, label=\"" + label +
           "\"];\n";
  }
  out += "  __start -> q" + std::to_string(m.start) + ";\n";
  for (Mfa::State s = 0; s < m.num_states; ++s) {
    for (const auto& [symbol, targets] : m.transitions[s]) {
      for (Mfa::State t : targets) {
        out += "  q" + std::to_string(s) + " -> q" + std::to_string(t) +
               " [label=\"" + dot_escape(symbol) + "\"];\n";
      }
    }
  }
  for (Mfa::State s = 0; s < m.num_states; ++s) {
    for (Mfa::State t : m.epsilon[s]) {
      out += "  q" + std::to_string(s) + " -> q" + std::to_string(t) +
             " [label=\"ε\", style=dashed];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_json(const Mfa& m) {
  nlohmann::ordered_json j;
  j["alphabet"] = m.alphabet;
  j["states"] = m.num_states;
  j["start"] = m.start;
  j["accepting"] = m.accepting;
  nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
  for (Mfa::State s = 0; s < m.num_states; ++s) {
    for (const auto& [symbol, targets] : m.transitions[s]) {
      for (Mfa::State t : targets) {
        transitions.push_back(nlohmann::ordered_json::array({s, symbol, t}));
      }
    }
  }
  j["transitions"] = std::move(transitions);
  nlohmann::ordered_json epsilon = nlohmann::ordered_json::array();
  for (Mfa::State s = 0; s < m.num_states; ++s) {
    for (Mfa::State t : m.epsilon[s]) {
      epsilon.push_back(nlohmann::ordered_json::array({s, t}));
    }
  }
  j["epsilon"] = std::move(epsilon);
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (const auto& [state, list] : m.labels) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const MfaLabel& l : list) {
      nlohmann::ordered_json entry;
      entry["word"] = l.word;
      entry["languages"] = l.languages;
      entries.push_back(std::move(entry));
    }
    labels[std::to_string(state)] = std::move(entries);
  }
  j["labels"] = std::move(labels);
  return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void bad_format(const std::string& what) {
  throw AutomatonFormatError("bad automaton file: " + what);
}

int state_in_range(const nlohmann::json& j, int num_states, const char* where) {
  if (!j.is_number_integer()) bad_format(std::string(where) + " must be an integer");
  long long v = j.get<long long>();
  if (v < 0 || v >= num_states) {
    bad_format(std::string(where) + " " + std::to_string(v) + " out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

Mfa from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad_format(e.what());
  }
  if (!j.is_object()) bad_format("top level must be an object");
  for (const char* key : {"alphabet", "states", "start", "accepting", "transitions"}) {
    if (!j.contains(key)) bad_format(std::string("missing field '") + key + "'");
  }

  Mfa m;
  if (!j["states"].is_number_integer() || j["states"].get<long long>() < 1) {
    bad_format("'states' must be a positive integer");
  }
  m.num_states = j["states"].get<int>();
  m.transitions.resize(m.num_states);
  m.epsilon.resize(m.num_states);
  m.start = state_in_range(j["start"], m.num_states, "start state");

  if (!j["alphabet"].is_array()) bad_format("'alphabet' must be an array");
  for (const auto& sym : j["alphabet"]) {
    if (!sym.is_string() || sym.get<std::string>().empty()) {
      bad_format("alphabet symbols must be non-empty strings");
    }
    m.alphabet.insert(sym.get<std::string>());
  }

  if (!j["accepting"].is_array()) bad_format("'accepting' must be an array");
  for (const auto& s : j["accepting"]) {
    m.accepting.insert(state_in_range(s, m.num_states, "accepting state"));
  }

  if (!j["transitions"].is_array()) bad_format("'transitions' must be an array");
  for (const auto& t : j["transitions"]) {
    if (!t.is_array() || t.size() != 3) {
      bad_format("transitions must be [from, symbol, to] triples");
    }
    int from = state_in_range(t[0], m.num_states, "transition source");
    if (!t[1].is_string()) bad_format("transition symbols must be strings");
    std::string symbol = t[1].get<std::string>();
    if (!m.alphabet.count(symbol)) {
      bad_format("transition symbol '" + symbol + "' is not in the alphabet");
    }
    int to = state_in_range(t[2], m.num_states, "transition target");
    m.transitions[from][symbol].insert(to);
  }

  if (j.contains("epsilon")) {
    if (!j["epsilon"].is_array()) bad_format("'epsilon' must be an array");
    for (const auto& e : j["epsilon"]) {
      if (!e.is_array() || e.size() != 2) {
        bad_format("epsilon entries must be [from, to] pairs");
      }
      int from = state_in_range(e[0], m.num_states, "epsilon source");
      int to = state_in_range(e[1], m.num_states, "epsilon target");
      m.epsilon[from].insert(to);
    }
  }

  if (j.contains("labels")) {
    if (!j["labels"].is_object()) bad_format("'labels' must be an object");
    for (const auto& [key, value] : j["labels"].items()) {
      int state = 0;
      try {
        std::size_t used = 0;
        state = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad_format("label keys must be state numbers, got '" + key + "'");
      }
      if (state < 0 || state >= m.num_states) {
        bad_format("label state " + key + " out of range");
      }
      if (!value.is_array()) bad_format("label entries must be arrays");
      for (const auto& entry : value) {
        if (!entry.is_object() || !entry.contains("word") ||
            !entry["word"].is_string()) {
          bad_format("label entries need a 'word' string");
        }
        MfaLabel label;
        label.word = entry["word"].get<std::string>();
        if (entry.contains("languages")) {
          if (!entry["languages"].is_array()) {
            bad_format("label 'languages' must be an array");
          }
          for (const auto& lang : entry["languages"]) {
            if (!lang.is_string()) bad_format("language codes must be strings");
            label.languages.push_back(lang.get<std::string>());
          }
        }
        add_label(m, state, std::move(label));
      }
    }
  }
  return m;
}

void save(const Mfa& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << to_json(m);
  if (!out) throw IoError("write failed: " + path);
}

Mfa load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

}  // namespace panini
