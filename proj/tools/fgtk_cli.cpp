// Command line front end: word fingerprints, tuple comparisons, the full
// measure-rigidity pipeline, and the word/inverse witness search.
//
// Exit codes: 0 success (and "equal"/"same" verdicts), 1 a genuine
// difference was found, 2 bad input or usage, 3 a resource cap was hit
// before the question could be settled.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgtk/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDifferent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapped = 3;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    std::size_t begin = item.find_first_not_of(" \t");
    if (begin != std::string::npos) {
      std::size_t end = item.find_last_not_of(" \t");
      items.push_back(item.substr(begin, end - begin + 1));
    }
    start = comma + 1;
  }
  return items;
}

void emit(const std::string& text, const std::string& out_path) {
  std::fputs(text.c_str(), stdout);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw fgtk::Error(fgtk::ErrorKind::Parse, "cannot open output file: " + out_path);
    out << text;
  }
}

const char* state_text(fgtk::ConditionRow::State state) {
  switch (state) {
    case fgtk::ConditionRow::State::Equal: return "equal";
    case fgtk::ConditionRow::State::Unequal: return "unequal";
    case fgtk::ConditionRow::State::Capped: return "capped";
  }
  return "equal";
}

const char* condition_text(fgtk::CompareCondition condition) {
  switch (condition) {
    case fgtk::CompareCondition::Hom: return "hom";
    case fgtk::CompareCondition::Epi: return "epi";
    case fgtk::CompareCondition::ImEpi: return "imepi";
    case fgtk::CompareCondition::Quotient: return "quotient";
  }
  return "hom";
}

std::string render_compare_table(const fgtk::CompareReport& report) {
  std::ostringstream out;
  out << "condition: " << condition_text(report.condition) << "\n";
  out << std::left << std::setw(8) << "group" << std::setw(10) << "state"
      << "detail\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(8) << row.group << std::setw(10) << state_text(row.state)
        << row.detail << "\n";
  }
  out << "all_equal: " << (report.all_equal ? "yes" : "no") << "  capped: " << report.capped
      << "\n";
  return out.str();
}

std::string render_fingerprint_table(const fgtk::Fingerprint& fp) {
  std::ostringstream out;
  out << "group: " << fp.group_name << "  order: " << fp.group_order << "  arity: " << fp.arity
      << "  total: " << fp.total << "\n";
  for (const auto& [image, count] : fp.counts) {
    out << "  ";
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (i > 0) out << " ";
      out << image[i];
    }
    out << " -> " << count << "\n";
  }
  return out.str();
}

std::string render_rigidity_table(const fgtk::RigidityReport& report) {
  std::ostringstream out;
  out << "outcome: " << fgtk::to_string(report.outcome) << "\n";
  if (!report.witness_group.empty()) out << "witness group: " << report.witness_group << "\n";
  for (const auto* part : {&report.hom, &report.epi, &report.imepi, &report.quotient})
    out << render_compare_table(*part);
  if (report.orbit) {
    const auto& orbit = *report.orbit;
    const char* status = orbit.status == fgtk::OrbitStatus::Same        ? "same"
                         : orbit.status == fgtk::OrbitStatus::Different ? "different"
                                                                        : "unknown";
    out << "orbit: " << status << "  nodes: " << orbit.nodes_explored << "\n";
    if (!orbit.certificate.empty()) out << "certificate: " << orbit.certificate << "\n";
    for (const auto& move : orbit.witness_moves) out << "  move: " << move.describe() << "\n";
  }
  return out.str();
}

std::string render_catalog_table() {
  std::ostringstream out;
  out << std::left << std::setw(8) << "id" << std::setw(7) << "order"
      << "abelian\n";
  for (const auto& row : fgtk::catalog_listing())
    out << std::left << std::setw(8) << row.id << std::setw(7) << row.order
        << (row.abelian ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_inverse_table(const fgtk::InverseSearchResult& result, std::int32_t rank,
                                 std::int32_t max_len) {
  std::ostringstream out;
  out << "rank: " << rank << "  max_len: " << max_len
      << "  words_scanned: " << result.words_scanned << "\n";
  if (result.witness) {
    const auto& w = *result.witness;
    out << "witness: word " << w.word.str() << " in " << w.group << " at element " << w.element
        << " with counts " << w.count_word << " vs " << w.count_inverse << " of " << w.total
        << "\n";
  } else {
    out << "witness: none\n";
  }
  return out.str();
}

int compare_exit_code(const fgtk::CompareReport& report) {
  if (!report.all_equal) return kExitDifferent;
  if (report.capped > 0) return kExitCapped;
  return kExitOk;
}

// Tuples entered without an explicit rank live in the smallest free group
// containing both of them.
std::pair<fgtk::WordTuple, fgtk::WordTuple> parse_pair(const std::string& left,
                                                       const std::string& right,
                                                       std::int32_t rank) {
  if (rank > 0)
    return {fgtk::parse_tuple(split_list(left), rank), fgtk::parse_tuple(split_list(right), rank)};
  fgtk::WordTuple l = fgtk::parse_tuple(split_list(left));
  fgtk::WordTuple r = fgtk::parse_tuple(split_list(right));
  std::int32_t joint = std::max(l.rank, r.rank);
  return {fgtk::parse_tuple(split_list(left), joint), fgtk::parse_tuple(split_list(right), joint)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word measures, subgroup measures, and orbit tests on finite groups"};
  app.require_subcommand(1);

  std::string output = "table";
  app.add_option("--output", output, "output format")->check(CLI::IsMember({"json", "table"}));
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file");
  std::string out_path;
  app.add_option("--out", out_path, "also write the report to this file");
  std::uint64_t budget = 0;
  auto* budget_opt = app.add_option("--budget", budget, "max homomorphisms per enumeration");
  std::uint64_t quotient_cap = 0;
  auto* quotient_opt =
      app.add_option("--quotient-cap", quotient_cap, "max characteristic quotient order");
  std::uint64_t orbit_cap = 0;
  auto* orbit_opt = app.add_option("--orbit-node-cap", orbit_cap, "max orbit search nodes");
  std::string catalog_arg;
  auto* catalog_opt =
      app.add_option("--catalog", catalog_arg, "comma separated group ids (default: all)");

  auto* cmd_fingerprint =
      app.add_subcommand("fingerprint", "joint value counts of a word tuple over a group");
  cmd_fingerprint->fallthrough();
  std::vector<std::string> fp_words;
  cmd_fingerprint->add_option("words", fp_words, "tuple of words")->required();
  std::string fp_group;
  cmd_fingerprint->add_option("--group", fp_group, "catalog group id")->required();
  std::int32_t fp_rank = 0;
  cmd_fingerprint->add_option("--rank", fp_rank, "ambient free rank (default: inferred)");

  std::string left_arg, right_arg;
  std::int32_t rank_arg = 0;
  std::string condition_arg = "hom";

  auto* cmd_compare = app.add_subcommand("compare", "compare two tuples groupwise");
  cmd_compare->fallthrough();
  cmd_compare->add_option("--left", left_arg, "comma separated words")->required();
  cmd_compare->add_option("--right", right_arg, "comma separated words")->required();
  cmd_compare->add_option("--rank", rank_arg, "ambient free rank (default: inferred)");
  cmd_compare->add_option("--condition", condition_arg, "hom | epi | imepi | quotient");

  auto* cmd_subgroup =
      app.add_subcommand("subgroup-compare", "compare the measures of two generated subgroups");
  cmd_subgroup->fallthrough();
  cmd_subgroup->add_option("--left", left_arg, "comma separated independent words")->required();
  cmd_subgroup->add_option("--right", right_arg, "comma separated independent words")->required();
  cmd_subgroup->add_option("--rank", rank_arg, "ambient free rank (default: inferred)");

  auto* cmd_rigidity = app.add_subcommand(
      "rigidity-experiment", "all measure conditions plus the automorphism orbit test");
  cmd_rigidity->fallthrough();
  cmd_rigidity->add_option("--left", left_arg, "comma separated words")->required();
  cmd_rigidity->add_option("--right", right_arg, "comma separated words")->required();
  cmd_rigidity->add_option("--rank", rank_arg, "ambient free rank (default: inferred)");

  auto* cmd_inverse = app.add_subcommand(
      "search-inverse-witness", "scan short words for one whose inverse induces a different measure");
  cmd_inverse->fallthrough();
  std::int32_t inv_rank = 2;
  cmd_inverse->add_option("--rank", inv_rank, "ambient free rank");
  std::int32_t inv_max_len = 3;
  cmd_inverse->add_option("--max-len", inv_max_len, "longest word length to scan");

  auto* cmd_catalog = app.add_subcommand("catalog", "list the built-in groups");
  cmd_catalog->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    fgtk::ExperimentConfig config =
        config_path.empty() ? fgtk::default_config() : fgtk::parse_config_file(config_path);
    fgtk::apply_env_overrides(config);
    if (budget_opt->count() > 0) config.budget = budget;
    if (quotient_opt->count() > 0) config.quotient_cap = quotient_cap;
    if (orbit_opt->count() > 0) config.orbit_node_cap = orbit_cap;
    if (catalog_opt->count() > 0) config.catalog = split_list(catalog_arg);
    const bool json = output == "json";

    if (cmd_fingerprint->parsed()) {
      fgtk::WordTuple tuple = fgtk::parse_tuple(fp_words, fp_rank);
      const fgtk::FiniteGroup& group = fgtk::catalog_group(fp_group);
      fgtk::EnumerationOptions options;
      options.budget = config.budget;
      fgtk::Fingerprint fp = fgtk::hom_fingerprint(tuple, group, options);
      emit(json ? fgtk::to_json(fp) + "\n" : render_fingerprint_table(fp), out_path);
      return kExitOk;
    }

    if (cmd_compare->parsed()) {
      auto [left, right] = parse_pair(left_arg, right_arg, rank_arg);
      fgtk::CompareReport report =
          fgtk::compare_tuples(left, right, fgtk::parse_condition(condition_arg), config);
      emit(json ? fgtk::to_json(report) + "\n" : render_compare_table(report), out_path);
      return compare_exit_code(report);
    }

    if (cmd_subgroup->parsed()) {
      auto [left, right] = parse_pair(left_arg, right_arg, rank_arg);
      fgtk::CompareReport report = fgtk::subgroup_compare(left, right, config);
      emit(json ? fgtk::to_json(report) + "\n" : render_compare_table(report), out_path);
      return compare_exit_code(report);
    }

    if (cmd_rigidity->parsed()) {
      auto [left, right] = parse_pair(left_arg, right_arg, rank_arg);
      fgtk::RigidityReport report = fgtk::rigidity_experiment(left, right, config);
      emit(json ? fgtk::to_json(report) + "\n" : render_rigidity_table(report), out_path);
      switch (report.outcome) {
        case fgtk::RigidityOutcome::MeasuresAgreeOrbitSame: return kExitOk;
        case fgtk::RigidityOutcome::MeasuresDiffer:
        case fgtk::RigidityOutcome::MeasuresAgreeOrbitDifferent: return kExitDifferent;
        case fgtk::RigidityOutcome::MeasuresAgreeOrbitUnknown: return kExitCapped;
      }
      return kExitOk;
    }

    if (cmd_inverse->parsed()) {
      fgtk::InverseSearchResult result =
          fgtk::search_inverse_witness(inv_rank, inv_max_len, config);
      emit(json ? fgtk::to_json(result, inv_rank, inv_max_len) + "\n"
                : render_inverse_table(result, inv_rank, inv_max_len),
           out_path);
      return result.witness ? kExitDifferent : kExitOk;
    }

    if (cmd_catalog->parsed()) {
      emit(json ? fgtk::catalog_json() + "\n" : render_catalog_table(), out_path);
      return kExitOk;
    }
  } catch (const fgtk::Error& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return error.is_resource_cap() ? kExitCapped : kExitUsage;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return kExitUsage;
  }
  return kExitUsage;
}
