// panini_main.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Command-line front end.  Exit codes: 0 success, 1 usage error,
// 2 data error (tokenization, lexicon, automaton format), 3 I/O error.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "panini/automata.hpp"
#include "panini/baselines.hpp"
#include "panini/error.hpp"
#include "panini/metric.hpp"
#include "panini/mlanguage.hpp"
#include "panini/phonology.hpp"
#include "panini/translit.hpp"

namespace {

using namespace panini;

struct GlobalConfig {
  std::string lexicon = "./lexicon.tsv";
  std::string extensions;
};

PhoneticMap active_map(const GlobalConfig& cfg) {
  if (cfg.extensions.empty()) return PhoneticMap::canonical();
  PhoneticMap map = PhoneticMap::canonical().with_extensions_file(cfg.extensions);
  for (const std::string& w : map.warnings()) {
    std::cerr << "warning: " << w << "\n";
  }
  return map;
}

MLanguage theme_group(const PhoneticMap& map, const GlobalConfig& cfg,
                      const std::string& theme,
                      const std::vector<std::string>& excludes) {
  std::vector<MLanguage> groups = group_by_theme(map, load_lexicon(cfg.lexicon));
  MLanguage g = exclude_words(find_theme(groups, theme), excludes);
  for (const std::string& w : g.warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

std::string join(const std::set<std::string>& items, const char* sep) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

DistanceMatrix group_matrix(const PhoneticMap& map, const MLanguage& g) {
  std::vector<PhonemeSequence> seqs;
  seqs.reserve(g.members.size());
  for (const MLanguage::Member& m : g.members) seqs.push_back(m.seq);
  return distance_matrix(map, seqs);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << text;
  if (!out) throw IoError("cannot write output file: " + out_path);
}

void cmd_distance(const GlobalConfig& cfg, const std::string& word) {
  if (word.empty()) throw CLI::ValidationError("word must not be empty");
  PhoneticMap map = active_map(cfg);
  WordPath path = word_path(map, tokenize(map, word));
  std::ostringstream out;
  out << "Null 0 0 Null 0 0\n";
  std::string prefix;
  for (const WordPath::Step& step : path.steps) {
    prefix += step.id;
    out << step.id << ' ' << format_half_units(step.coord.row2) << ' '
        << format_half_units(step.coord.col2) << ' ' << prefix << ' '
        << format_half_units(step.cumulative.dx2) << ' '
        << format_half_units(step.cumulative.dy2) << "\n";
  }
  DistancePair total = path.total();
  out << render(path.seq) << ' ' << format_half_units(total.dx2) << ' '
      << format_half_units(total.dy2) << "\n";
  std::cout << out.str();
}

struct MfaSource {
  std::string theme;
  std::string automaton;
  std::vector<std::string> excludes;
  bool no_merge_suffixes = false;
  bool no_determinize = false;
  bool no_minimize = false;
};

void add_source_options(CLI::App* cmd, MfaSource& src, bool automaton_allowed) {
  cmd->add_option("--theme", src.theme, "Lexicon theme id");
  if (automaton_allowed) {
    cmd->add_option("--automaton", src.automaton, "Automaton JSON file");
  }
  cmd->add_option("--exclude", src.excludes, "Member word to leave out")
      ->take_all();
  cmd->add_flag("--no-merge-suffixes", src.no_merge_suffixes,
                "Skip the suffix-sharing stage");
  cmd->add_flag("--no-determinize", src.no_determinize,
                "Skip subset construction");
  cmd->add_flag("--no-minimize", src.no_minimize, "Skip DFA minimization");
}

Mfa resolve_mfa(const PhoneticMap& map, const GlobalConfig& cfg,
                const MfaSource& src) {
  if (!src.automaton.empty() && !src.theme.empty()) {
    throw CLI::ValidationError("pass either --theme or --automaton, not both");
  }
  if (!src.automaton.empty()) return load(src.automaton);
  if (src.theme.empty()) {
    throw CLI::ValidationError("pass --theme or --automaton");
  }
  MfaBuildOptions options;
  options.merge_suffixes = !src.no_merge_suffixes;
  options.determinize = !src.no_determinize;
  options.minimize = !src.no_minimize;
  return build_group_mfa(theme_group(map, cfg, src.theme, src.excludes), options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phonetic-map word distances and word-group automata"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--lexicon", cfg.lexicon, "Lexicon TSV file")
      ->envname("MFA_LEXICON")
      ->capture_default_str();
  app.add_option("--extensions", cfg.extensions,
                 "Extra phoneme rows (TSV: id row col category place manner)");

  // distance <word>
  std::string dist_word;
  CLI::App* dist = app.add_subcommand(
      "distance", "Cumulative path distance of a word, one row per phoneme");
  dist->add_option("word", dist_word, "Word in IAST or ASCII fallback")
      ->required();
  dist->callback([&] { cmd_distance(cfg, dist_word); });

  // matrix --theme X
  std::string matrix_theme, matrix_format = "table", matrix_out;
  std::vector<std::string> matrix_excludes;
  CLI::App* matrix = app.add_subcommand(
      "matrix", "Inter-word distance matrix for a theme");
  matrix->add_option("--theme", matrix_theme, "Lexicon theme id")->required();
  matrix->add_option("--exclude", matrix_excludes, "Member word to leave out")
      ->take_all();
  matrix->add_option("--format", matrix_format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();
  matrix->add_option("--out", matrix_out, "Write to a file instead of stdout");
  matrix->callback([&] {
    PhoneticMap map = active_map(cfg);
    DistanceMatrix m =
        group_matrix(map, theme_group(map, cfg, matrix_theme, matrix_excludes));
    write_output(matrix_format == "csv" ? matrix_to_csv(m) : matrix_to_table(m),
                 matrix_out);
  });

  // central --theme X
  std::string central_theme;
  std::vector<std::string> central_excludes;
  CLI::App* central = app.add_subcommand(
      "central", "Members ranked by row-sum magnitude, most central first");
  central->add_option("--theme", central_theme, "Lexicon theme id")->required();
  central->add_option("--exclude", central_excludes, "Member word to leave out")
      ->take_all();
  central->callback([&] {
    PhoneticMap map = active_map(cfg);
    DistanceMatrix m = group_matrix(
        map, theme_group(map, cfg, central_theme, central_excludes));
    std::ostringstream out;
    for (const CentralWord& cw : central_words(m)) {
      out << cw.rank << ' ' << cw.word << ' ' << to_string(cw.row_sum) << ' '
          << format_half_units(cw.score2) << "\n";
    }
    std::cout << out.str();
  });

  // alphabet --theme X (--core|--extended) [--threshold t]
  std::string alpha_theme;
  bool alpha_core = false, alpha_extended = false;
  double alpha_threshold = 1.0;
  CLI::App* alpha = app.add_subcommand(
      "alphabet", "Core or extended phoneme alphabet of a theme");
  alpha->add_option("--theme", alpha_theme, "Lexicon theme id")->required();
  CLI::Option* core_flag =
      alpha->add_flag("--core", alpha_core, "Shared core alphabet");
  CLI::Option* extended_flag = alpha->add_flag("--extended", alpha_extended,
                                               "Union of member alphabets");
  core_flag->excludes(extended_flag);
  CLI::Option* threshold_opt = alpha->add_option(
      "--threshold", alpha_threshold,
      "Member fraction for the core heuristic, overriding a curated core");
  alpha->callback([&] {
    if (!alpha_core && !alpha_extended) {
      throw CLI::ValidationError("pass --core or --extended");
    }
    PhoneticMap map = active_map(cfg);
    MLanguage g = theme_group(map, cfg, alpha_theme, {});
    std::set<std::string> ids;
    if (alpha_extended) {
      ids = extended_alphabet(g);
    } else if (threshold_opt->count() > 0) {
      ids = core_alphabet_heuristic(g, alpha_threshold);
    } else {
      ids = effective_core(g);
    }
    std::cout << join(ids, ", ") << "\n";
  });

  // baseline levenshtein|soundex
  CLI::App* baseline =
      app.add_subcommand("baseline", "Edit-distance and Soundex baselines");
  baseline->require_subcommand(1);
  std::string lev_a, lev_b;
  CLI::App* lev = baseline->add_subcommand(
      "levenshtein", "Codepoint edit distance between two words");
  lev->add_option("a", lev_a, "First word")->required();
  lev->add_option("b", lev_b, "Second word")->required();
  lev->callback([&] {
    std::cout << levenshtein(normalize(lev_a), normalize(lev_b)) << "\n";
  });
  std::string soundex_name;
  CLI::App* sdx =
      baseline->add_subcommand("soundex", "Classic Soundex code of a name");
  sdx->add_option("name", soundex_name, "ASCII name")->required();
  sdx->callback([&] { std::cout << soundex(soundex_name) << "\n"; });

  // mfa build|save|accept|enumerate|export-grammar|export-dot|load
  CLI::App* mfa =
      app.add_subcommand("mfa", "Build, query and export word-group automata");
  mfa->require_subcommand(1);

  MfaSource build_src;
  std::string build_out;
  CLI::App* build = mfa->add_subcommand(
      "build", "Build a theme's automaton and write it as JSON");
  add_source_options(build, build_src, false);
  build->add_option("--out", build_out, "Output JSON path")->required();
  auto run_build = [&] {
    PhoneticMap map = active_map(cfg);
    Mfa m = resolve_mfa(map, cfg, build_src);
    save(m, build_out);
    std::cout << "wrote " << build_out << ": " << m.num_states << " states, "
              << m.accepting.size() << " accepting\n";
  };
  build->callback(run_build);
  CLI::App* save_cmd = mfa->add_subcommand("save", "Alias of build");
  add_source_options(save_cmd, build_src, false);
  save_cmd->add_option("--out", build_out, "Output JSON path")->required();
  save_cmd->callback(run_build);

  MfaSource accept_src;
  std::string accept_word;
  CLI::App* accept_cmd = mfa->add_subcommand(
      "accept", "Print true/false for a candidate word");
  add_source_options(accept_cmd, accept_src, true);
  accept_cmd->add_option("word", accept_word, "Candidate word")->required();
  accept_cmd->callback([&] {
    if (accept_word.empty()) {
      throw CLI::ValidationError("word must not be empty");
    }
    PhoneticMap map = active_map(cfg);
    Mfa m = resolve_mfa(map, cfg, accept_src);
    std::cout << (accepts(m, tokenize(map, accept_word)) ? "true" : "false")
              << "\n";
  });

  MfaSource enum_src;
  int enum_max_len = 12;
  CLI::App* enum_cmd = mfa->add_subcommand(
      "enumerate", "List every accepted word up to a length bound");
  add_source_options(enum_cmd, enum_src, true);
  enum_cmd->add_option("--max-len", enum_max_len, "Phoneme-count bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  enum_cmd->callback([&] {
    PhoneticMap map = active_map(cfg);
    Mfa m = resolve_mfa(map, cfg, enum_src);
    std::ostringstream out;
    for (const std::vector<std::string>& word :
         enumerate_language(m, static_cast<std::size_t>(enum_max_len))) {
      std::string text;
      for (const std::string& id : word) text += id;
      out << text << "\n";
    }
    std::cout << out.str();
  });

  MfaSource grammar_src;
  bool grammar_compress = false;
  CLI::App* grammar_cmd = mfa->add_subcommand(
      "export-grammar", "Right-linear grammar of the automaton");
  add_source_options(grammar_cmd, grammar_src, true);
  grammar_cmd->add_flag("--compress", grammar_compress,
                        "Fold single chains into multi-phoneme terminals");
  grammar_cmd->callback([&] {
    PhoneticMap map = active_map(cfg);
    Mfa m = resolve_mfa(map, cfg, grammar_src);
    std::cout << export_grammar(m, grammar_compress).to_text() << "\n";
  });

  MfaSource dot_src;
  CLI::App* dot_cmd =
      mfa->add_subcommand("export-dot", "Graphviz DOT of the automaton");
  add_source_options(dot_cmd, dot_src, true);
  dot_cmd->callback([&] {
    PhoneticMap map = active_map(cfg);
    std::cout << export_dot(resolve_mfa(map, cfg, dot_src));
  });

  std::string load_path;
  CLI::App* load_cmd =
      mfa->add_subcommand("load", "Read an automaton file and summarize it");
  load_cmd->add_option("path", load_path, "Automaton JSON path")->required();
  load_cmd->callback([&] {
    Mfa m = load(load_path);
    std::ostringstream out;
    out << "states: " << m.num_states << "\n";
    out << "start: " << m.start << "\n";
    out << "accepting: " << m.accepting.size() << "\n";
    out << "deterministic: " << (m.deterministic() ? "yes" : "no") << "\n";
    out << "alphabet: " << join(m.alphabet, ", ") << "\n";
    std::set<std::string> words;
    for (const auto& [state, labels] : m.labels) {
      for (const MfaLabel& l : labels) words.insert(l.word);
    }
    if (!words.empty()) out << "words: " << join(words, ", ") << "\n";
    std::cout << out.str();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
