// mlanguage.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Cognate word groups ("m-languages").  A lexicon is a TSV file of
//   theme_id <TAB> word <TAB> language_code <TAB> member|non_member <TAB> notes
// rows; '#' starts a comment line.  Notes may carry 'theme=...' (a
// display name, first member row wins) and 'core=a,b,c' (a curated
// core alphabet).  Every member row of a theme belongs to exactly one
// group; the same surface word attested in several languages becomes
// one member with the language list merged.

#ifndef PANINI_MLANGUAGE_HPP_
#define PANINI_MLANGUAGE_HPP_

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "panini/automata.hpp"
#include "panini/metric.hpp"
#include "panini/phonology.hpp"
#include "panini/translit.hpp"

namespace panini {

enum class Region { Indian, European, Other };

struct Language {
  std::string code;
  std::string name;
  Region region = Region::Other;
};

// The built-in language code table.
class LanguageRegistry {
 public:
  static const LanguageRegistry& builtin();
  const Language* find(std::string_view code) const;
  const std::vector<Language>& languages() const { return languages_; }

 private:
  explicit LanguageRegistry(std::vector<Language> languages);
  std::vector<Language> languages_;
};

enum class Membership { Member, NonMember };

struct LexiconEntry {
  std::string theme_id;
  std::string word;      // as written in the file
  std::string language;  // registry code
  Membership membership = Membership::Member;
  std::string notes;
  std::size_t line = 0;
};

// Throws IoError when the file cannot be read and ParseError /
// UnknownLanguageError on bad rows.
std::vector<LexiconEntry> load_lexicon(const std::string& path);
std::vector<LexiconEntry> load_lexicon(std::istream& in);

struct MLanguage {
  struct Member {
    PhonemeSequence seq;
    std::string word;  // rendered (normalized) form
    std::vector<std::string> languages;  // sorted, unique
  };

  std::string theme_id;
  std::string theme;  // display name; theme_id unless a note names it
  std::vector<Member> members;  // tokenizable members, lexicon order
  std::vector<LexiconEntry> non_members;
  // Member rows whose word does not tokenize against the map.  They
  // stay out of alphabets, distances and automata but are kept for
  // reporting.
  std::vector<LexiconEntry> untokenizable;
  std::set<std::string> curated_core;  // empty unless the lexicon curates one
  std::vector<std::string> warnings;   // e.g. curated core ids missing
};

// Groups entries by theme, in first-appearance order, tokenizing
// member words against the map.
std::vector<MLanguage> group_by_theme(const PhoneticMap& map,
                                      const std::vector<LexiconEntry>& entries);

// Throws UnknownThemeError.
const MLanguage& find_theme(const std::vector<MLanguage>& groups,
                            std::string_view theme_id);

// Union of the members' phoneme ids.
std::set<std::string> extended_alphabet(const MLanguage& g);

// Ids used by at least the given fraction of members (0 < threshold
// <= 1; comparison is >=, so threshold 1.0 keeps the ids every member
// uses).
std::set<std::string> core_alphabet_heuristic(const MLanguage& g,
                                              double threshold);

// Curated core when present, else the threshold-1.0 heuristic.
std::set<std::string> effective_core(const MLanguage& g);

// Copy of g without the members whose rendered word is listed.
// Exclusions are normalized first.
MLanguage exclude_words(const MLanguage& g, const std::vector<std::string>& words);

// Copy of g keeping only members attested in at least one language of
// the region.
MLanguage filter_by_region(const MLanguage& g, Region region);

struct MfaBuildOptions {
  bool merge_suffixes = true;
  bool determinize = true;
  bool minimize = true;
};

// Trie over the members, then the selected pipeline stages.  Member
// words and language lists ride along as accepting-state labels.
Mfa build_group_mfa(const MLanguage& g, MfaBuildOptions options = {});

// Four membership signals for a candidate word: exact acceptance by
// the group MFA, alphabet compatibility (candidate covers the core;
// candidate stays inside the extended alphabet), and the nearest
// member by map distance together with the edit distance to it.
struct MembershipReport {
  std::string candidate;  // rendered form
  bool accepted = false;
  bool core_compatible = false;
  bool extended_compatible = false;
  std::string nearest_member;       // empty when the group has no members
  DistancePair nearest_distance;
  int nearest_levenshtein = 0;
};

MembershipReport membership_report(const PhoneticMap& map, const MLanguage& g,
                                   std::string_view candidate);

}  // namespace panini

#endif  // PANINI_MLANGUAGE_HPP_
