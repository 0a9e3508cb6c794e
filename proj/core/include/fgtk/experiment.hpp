#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgtk/measures.hpp"
#include "fgtk/whitehead.hpp"
#include "fgtk/word.hpp"

namespace fgtk {

struct ExperimentConfig {
  std::vector<std::string> catalog;  // group ids, resolved against the built-in catalog
  std::int32_t rank = 2;
  std::uint64_t budget = 10'000'000;
  std::uint64_t quotient_cap = 100'000;
  std::uint64_t orbit_node_cap = 1'000'000;
  std::string output_path;  // empty: stdout only
};

/// Defaults with the full catalog.
ExperimentConfig default_config();

/// Key-value file, one "key = value" per line, '#' comments. Keys: catalog
/// (comma-separated ids), rank, budget, quotient_cap, orbit_node_cap,
/// output_path.
ExperimentConfig parse_config_file(const std::string& path);

/// FGTK_BUDGET, FGTK_QUOTIENT_CAP, FGTK_ORBIT_NODE_CAP.
void apply_env_overrides(ExperimentConfig& config);

std::vector<const FiniteGroup*> resolve_catalog(const std::vector<std::string>& ids);

enum class CompareCondition { Hom, Epi, ImEpi, Quotient };

CompareCondition parse_condition(const std::string& name);

struct ConditionRow {
  std::string group;
  enum class State { Equal, Unequal, Capped } state = State::Equal;
  std::string detail;
};

struct CompareReport {
  CompareCondition condition = CompareCondition::Hom;
  std::vector<ConditionRow> rows;
  bool all_equal = true;  // over computed rows
  int capped = 0;
};

/// Groupwise comparison of two tuples under one condition. Quotient rows
/// whose characteristic quotient exceeds the cap are reported as Capped.
CompareReport compare_tuples(const WordTuple& left, const WordTuple& right,
                             CompareCondition condition, const ExperimentConfig& config);

/// Positional comparison of the measures induced by two independent
/// generating tuples. Throws TupleNotBasis when a tuple is dependent.
CompareReport subgroup_compare(const WordTuple& left, const WordTuple& right,
                               const ExperimentConfig& config);

enum class RigidityOutcome {
  MeasuresDiffer,
  MeasuresAgreeOrbitSame,
  MeasuresAgreeOrbitDifferent,
  MeasuresAgreeOrbitUnknown,
};

const char* to_string(RigidityOutcome outcome);

/// Full pipeline report: measure conditions over the catalog, automorphism
/// condition on abelian characteristic quotients, and the orbit verdict.
/// The orbit search runs only when every computed measure condition holds,
/// so an orbit verdict of Same is never paired with a measure difference.
struct RigidityReport {
  RigidityOutcome outcome = RigidityOutcome::MeasuresDiffer;
  CompareReport hom, epi, imepi, quotient;
  std::optional<OrbitVerdict> orbit;
  std::string witness_group;  // first group separating the tuples
};

RigidityReport rigidity_experiment(const WordTuple& left, const WordTuple& right,
                                   const ExperimentConfig& config);

/// First word (length-then-lexicographic order), group, and element at which
/// a word and its inverse induce different measures, if any exist within the
/// bounds.
struct InverseWitness {
  Word word;
  std::string group;
  elem_t element = 0;
  std::uint64_t count_word = 0;
  std::uint64_t count_inverse = 0;
  std::uint64_t total = 0;
};

struct InverseSearchResult {
  std::optional<InverseWitness> witness;
  std::uint64_t words_scanned = 0;
};

InverseSearchResult search_inverse_witness(std::int32_t rank, std::int32_t max_len,
                                           const ExperimentConfig& config);

struct CatalogRow {
  std::string id;
  elem_t order;
  bool abelian;
};
std::vector<CatalogRow> catalog_listing();

// Stable JSON renderers for the CLI.
std::string to_json(const CompareReport& report);
std::string to_json(const RigidityReport& report);
std::string to_json(const InverseSearchResult& result, std::int32_t rank, std::int32_t max_len);
std::string catalog_json();
std::string witness_moves_json(const std::vector<WhiteheadMove>& moves);

}  // namespace fgtk
