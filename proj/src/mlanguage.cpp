// mlanguage.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "panini/mlanguage.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "panini/baselines.hpp"
#include "panini/error.hpp"

namespace panini {

namespace {

std::vector<Language> builtin_languages() {
  return {
      {"Sa", "Sanskrit", Region::Indian},
      {"Pr", "Prakrit", Region::Indian},
      {"Hi", "Hindi", Region::Indian},
      {"Ma", "Marathi", Region::Indian},
      {"Pu", "Punjabi", Region::Indian},
      {"Gu", "Gujarati", Region::Indian},
      {"Be", "Bengali", Region::Indian},
      {"Or", "Oriya", Region::Indian},
      {"Ko", "Konkani", Region::Indian},
      {"Si", "Sinhala", Region::Indian},
      {"Ka", "Kannada", Region::Indian},
      {"Ta", "Tamil", Region::Indian},
      {"Te", "Telugu", Region::Indian},
      {"Mal", "Malayalam", Region::Indian},
      {"Tu", "Tulu", Region::Indian},
      {"En", "English", Region::European},
      {"Ge", "German", Region::European},
      {"Du", "Dutch", Region::European},
      {"Da", "Danish", Region::European},
      {"Sw", "Swedish", Region::European},
      {"Fr", "French", Region::European},
      {"It", "Italian", Region::European},
      {"Sp", "Spanish", Region::European},
      {"Por", "Portuguese", Region::European},
      {"Ro", "Romanian", Region::European},
      {"La", "Latin", Region::European},
      {"Gr", "Greek", Region::European},
      {"Ru", "Russian", Region::European},
      {"Uk", "Ukrainian", Region::European},
      {"Bu", "Bulgarian", Region::European},
      {"Cr", "Croatian", Region::European},
      {"Sl", "Slovak", Region::European},
      {"Slo", "Slovenian", Region::European},
      {"Cz", "Czech", Region::European},
      {"Po", "Polish", Region::European},
      {"Li", "Lithuanian", Region::European},
      {"Latv", "Latvian", Region::European},
      {"Ir", "Irish", Region::European},
      {"We", "Welsh", Region::European},
      {"SG", "Scottish Gaelic", Region::European},
      {"Co", "Corsican", Region::European},
  };
}

std::string trim_copy(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// First "key=value" note atom for the key, if any.
std::string note_value(const std::string& notes, std::string_view key) {
  for (const std::string& atom : split(notes, ';')) {
    std::string t = trim_copy(atom);
    if (t.size() > key.size() + 1 && t.compare(0, key.size(), key) == 0 &&
        t[key.size()] == '=') {
      return t.substr(key.size() + 1);
    }
  }
  return "";
}

}  // namespace

LanguageRegistry::LanguageRegistry(std::vector<Language> languages)
    : languages_(std::move(languages)) {}

const LanguageRegistry& LanguageRegistry::builtin() {
  static const LanguageRegistry registry(builtin_languages());
  return registry;
}

const Language* LanguageRegistry::find(std::string_view code) const {
  for (const Language& l : languages_) {
    if (l.code == code) return &l;
  }
  return nullptr;
}

std::vector<LexiconEntry> load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon: " + path);
  return load_lexicon(in);
}

std::vector<LexiconEntry> load_lexicon(std::istream& in) {
  const LanguageRegistry& registry = LanguageRegistry::builtin();
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string lead = trim_copy(line);
    if (lead.empty() || lead[0] == '#') continue;

    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 4 && fields.size() != 5) {
      throw ParseError("lexicon rows need theme, word, language and "
                       "membership fields (tab separated)",
                       line_no);
    }
    LexiconEntry e;
    e.theme_id = trim_copy(fields[0]);
    e.word = trim_copy(fields[1]);
    e.language = trim_copy(fields[2]);
    std::string membership = trim_copy(fields[3]);
    e.notes = fields.size() == 5 ? trim_copy(fields[4]) : "";
    e.line = line_no;
    if (e.theme_id.empty()) throw ParseError("empty theme id", line_no);
    if (e.word.empty()) throw ParseError("empty word", line_no);
    if (membership == "member") {
      e.membership = Membership::Member;
    } else if (membership == "non_member") {
      e.membership = Membership::NonMember;
    } else {
      throw ParseError("membership must be 'member' or 'non_member', got '" +
                           membership + "'",
                       line_no);
    }
    if (!registry.find(e.language)) {
      throw UnknownLanguageError(e.language, line_no);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<MLanguage> group_by_theme(const PhoneticMap& map,
                                      const std::vector<LexiconEntry>& entries) {
  std::vector<MLanguage> groups;
  auto group_for = [&](const std::string& theme_id) -> MLanguage& {
    for (MLanguage& g : groups) {
      if (g.theme_id == theme_id) return g;
    }
    groups.push_back(MLanguage{});
    groups.back().theme_id = theme_id;
    groups.back().theme = theme_id;
    return groups.back();
  };

  for (const LexiconEntry& e : entries) {
    MLanguage& g = group_for(e.theme_id);
    if (e.membership == Membership::NonMember) {
      g.non_members.push_back(e);
      continue;
    }
    std::string theme_note = note_value(e.notes, "theme");
    if (!theme_note.empty() && g.theme == g.theme_id) g.theme = theme_note;
    std::string core_note = note_value(e.notes, "core");
    if (!core_note.empty() && g.curated_core.empty()) {
      for (const std::string& id : split(core_note, ',')) {
        std::string t = trim_copy(id);
        if (t.empty()) {
          throw ParseError("empty id in curated core", e.line);
        }
        g.curated_core.insert(t);
      }
    }

    PhonemeSequence seq;
    try {
      seq = tokenize(map, e.word);
    } catch (const TokenizeError& err) {
      g.untokenizable.push_back(e);
      g.warnings.push_back("theme " + g.theme_id + ": member '" + e.word +
                           "' (" + e.language + ") does not tokenize: " +
                           err.what());
      continue;
    }
    std::string rendered = render(seq);
    bool merged = false;
    for (MLanguage::Member& member : g.members) {
      if (member.word == rendered) {
        if (std::find(member.languages.begin(), member.languages.end(),
                      e.language) == member.languages.end()) {
          member.languages.push_back(e.language);
          std::sort(member.languages.begin(), member.languages.end());
        }
        merged = true;
        break;
      }
    }
    if (!merged) {
      g.members.push_back(MLanguage::Member{std::move(seq), rendered,
                                            {e.language}});
    }
  }

  // Curated cores are advisory; ids outside the extended alphabet are
  // reported, not rejected.
  for (MLanguage& g : groups) {
    if (g.curated_core.empty()) continue;
    std::set<std::string> extended = extended_alphabet(g);
    for (const std::string& id : g.curated_core) {
      if (!extended.count(id)) {
        g.warnings.push_back("theme " + g.theme_id + ": curated core id '" +
                             id + "' is not in the extended alphabet");
      }
    }
  }
  return groups;
}

const MLanguage& find_theme(const std::vector<MLanguage>& groups,
                            std::string_view theme_id) {
  for (const MLanguage& g : groups) {
    if (g.theme_id == theme_id) return g;
  }
  throw UnknownThemeError(std::string(theme_id));
}

std::set<std::string> extended_alphabet(const MLanguage& g) {
  std::set<std::string> out;
  for (const MLanguage::Member& m : g.members) {
    for (const std::string& id : m.seq.ids) out.insert(id);
  }
  return out;
}

std::set<std::string> core_alphabet_heuristic(const MLanguage& g,
                                              double threshold) {
  if (threshold <= 0.0 || threshold > 1.0) {
    throw std::invalid_argument("threshold must be in (0, 1]");
  }
  std::map<std::string, std::size_t> counts;
  for (const MLanguage::Member& m : g.members) {
    for (const std::string& id : unique_ids(m.seq)) ++counts[id];
  }
  std::set<std::string> out;
  double needed = threshold * static_cast<double>(g.members.size());
  for (const auto& [id, count] : counts) {
    if (static_cast<double>(count) + 1e-9 >= needed) out.insert(id);
  }
  return out;
}

std::set<std::string> effective_core(const MLanguage& g) {
  if (!g.curated_core.empty()) return g.curated_core;
  return core_alphabet_heuristic(g, 1.0);
}

MLanguage exclude_words(const MLanguage& g, const std::vector<std::string>& words) {
  std::set<std::string> drop;
  for (const std::string& w : words) drop.insert(normalize(w));
  MLanguage out = g;
  out.members.clear();
  for (const MLanguage::Member& m : g.members) {
    if (!drop.count(m.word)) out.members.push_back(m);
  }
  return out;
}

MLanguage filter_by_region(const MLanguage& g, Region region) {
  const LanguageRegistry& registry = LanguageRegistry::builtin();
  MLanguage out = g;
  out.members.clear();
  for (const MLanguage::Member& m : g.members) {
    for (const std::string& code : m.languages) {
      const Language* lang = registry.find(code);
      if (lang && lang->region == region) {
        out.members.push_back(m);
        break;
      }
    }
  }
  return out;
}

Mfa build_group_mfa(const MLanguage& g, MfaBuildOptions options) {
  std::vector<PhonemeSequence> words;
  std::vector<MfaLabel> labels;
  words.reserve(g.members.size());
  labels.reserve(g.members.size());
  for (const MLanguage::Member& m : g.members) {
    words.push_back(m.seq);
    labels.push_back(MfaLabel{m.word, m.languages});
  }
  Mfa mfa = build_trie(words, labels);
  if (options.merge_suffixes) mfa = merge_suffixes(mfa);
  if (options.determinize) mfa = determinize(mfa);
  if (options.minimize) mfa = minimize(mfa);
  return mfa;
}

MembershipReport membership_report(const PhoneticMap& map, const MLanguage& g,
                                   std::string_view candidate) {
  PhonemeSequence seq = tokenize(map, candidate);
  MembershipReport report;
  report.candidate = render(seq);

  Mfa mfa = build_group_mfa(g);
  report.accepted = accepts(mfa, seq);

  std::set<std::string> candidate_ids = unique_ids(seq);
  std::set<std::string> core = effective_core(g);
  report.core_compatible =
      std::includes(candidate_ids.begin(), candidate_ids.end(), core.begin(),
                    core.end());
  std::set<std::string> extended = extended_alphabet(g);
  report.extended_compatible =
      std::includes(extended.begin(), extended.end(), candidate_ids.begin(),
                    candidate_ids.end());

  DistancePair total = word_distance(map, seq);
  bool first = true;
  for (const MLanguage::Member& m : g.members) {
    DistancePair d = inter_word_distance(total, word_distance(map, m.seq));
    if (first || d.score2() < report.nearest_distance.score2()) {
      report.nearest_member = m.word;
      report.nearest_distance = d;
      first = false;
    }
  }
  if (!first) {
    report.nearest_levenshtein =
        levenshtein(report.candidate, report.nearest_member);
  }
  return report;
}

}  // namespace panini
