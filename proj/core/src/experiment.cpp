#include "fgtk/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <string_view>
#include <utility>

#include "fgtk/stallings.hpp"
#include "json.hpp"

namespace fgtk {

namespace {

std::string trim(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  std::size_t end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw Error(ErrorKind::Parse, what + " is not a number: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string> split_ids(std::string_view text) {
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string id = trim(text.substr(start, comma - start));
    if (!id.empty()) ids.push_back(std::move(id));
    start = comma + 1;
  }
  return ids;
}

EnumerationOptions options_for(const ExperimentConfig& config) {
  EnumerationOptions options;
  options.budget = config.budget;
  return options;
}

const char* condition_name(CompareCondition condition) {
  switch (condition) {
    case CompareCondition::Hom: return "hom";
    case CompareCondition::Epi: return "epi";
    case CompareCondition::ImEpi: return "imepi";
    case CompareCondition::Quotient: return "quotient";
  }
  return "hom";
}

const char* state_name(ConditionRow::State state) {
  switch (state) {
    case ConditionRow::State::Equal: return "equal";
    case ConditionRow::State::Unequal: return "unequal";
    case ConditionRow::State::Capped: return "capped";
  }
  return "equal";
}

const char* orbit_status_name(OrbitStatus status) {
  switch (status) {
    case OrbitStatus::Same: return "same";
    case OrbitStatus::Different: return "different";
    case OrbitStatus::Unknown: return "unknown";
  }
  return "unknown";
}

nlohmann::ordered_json moves_doc(const std::vector<WhiteheadMove>& moves) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const WhiteheadMove& move : moves) doc.push_back(move.describe());
  return doc;
}

nlohmann::ordered_json compare_doc(const CompareReport& report) {
  nlohmann::ordered_json doc;
  doc["condition"] = condition_name(report.condition);
  doc["all_equal"] = report.all_equal;
  doc["capped"] = report.capped;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ConditionRow& row : report.rows) {
    nlohmann::ordered_json entry;
    entry["group"] = row.group;
    entry["state"] = state_name(row.state);
    entry["detail"] = row.detail;
    rows.push_back(std::move(entry));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

nlohmann::ordered_json orbit_doc(const OrbitVerdict& verdict) {
  nlohmann::ordered_json doc;
  doc["status"] = orbit_status_name(verdict.status);
  doc["certificate"] = verdict.certificate;
  doc["nodes_explored"] = verdict.nodes_explored;
  doc["witness_moves"] = moves_doc(verdict.witness_moves);
  return doc;
}

}  // namespace

ExperimentConfig default_config() {
  ExperimentConfig config;
  config.catalog = catalog_ids();
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open config file: " + path);
  ExperimentConfig config = default_config();
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string stripped = trim(line);
    if (stripped.empty()) continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(line_number) +
                                        ": expected 'key = value', got '" + stripped + "'");
    std::string key = trim(std::string_view(stripped).substr(0, eq));
    std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (key == "catalog") {
      config.catalog = split_ids(value);
    } else if (key == "rank") {
      std::uint64_t rank = parse_u64(value, "rank");
      if (rank < 1 || rank > 26) throw Error(ErrorKind::Parse, "rank out of range: " + value);
      config.rank = static_cast<std::int32_t>(rank);
    } else if (key == "budget") {
      config.budget = parse_u64(value, "budget");
    } else if (key == "quotient_cap") {
      config.quotient_cap = parse_u64(value, "quotient_cap");
    } else if (key == "orbit_node_cap") {
      config.orbit_node_cap = parse_u64(value, "orbit_node_cap");
    } else if (key == "output_path") {
      config.output_path = value;
    } else {
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(line_number) +
                                        ": unknown config key '" + key + "'");
    }
  }
  return config;
}

void apply_env_overrides(ExperimentConfig& config) {
  if (const char* value = std::getenv("FGTK_BUDGET")) config.budget = parse_u64(value, "FGTK_BUDGET");
  if (const char* value = std::getenv("FGTK_QUOTIENT_CAP"))
    config.quotient_cap = parse_u64(value, "FGTK_QUOTIENT_CAP");
  if (const char* value = std::getenv("FGTK_ORBIT_NODE_CAP"))
    config.orbit_node_cap = parse_u64(value, "FGTK_ORBIT_NODE_CAP");
}

std::vector<const FiniteGroup*> resolve_catalog(const std::vector<std::string>& ids) {
  std::vector<const FiniteGroup*> groups;
  groups.reserve(ids.size());
  for (const std::string& id : ids) groups.push_back(&catalog_group(id));
  return groups;
}

CompareCondition parse_condition(const std::string& name) {
  if (name == "hom") return CompareCondition::Hom;
  if (name == "epi") return CompareCondition::Epi;
  if (name == "imepi") return CompareCondition::ImEpi;
  if (name == "quotient") return CompareCondition::Quotient;
  throw Error(ErrorKind::Parse,
              "unknown condition '" + name + "' (expected hom, epi, imepi, or quotient)");
}

CompareReport compare_tuples(const WordTuple& left, const WordTuple& right,
                             CompareCondition condition, const ExperimentConfig& config) {
  std::vector<const FiniteGroup*> groups = resolve_catalog(config.catalog);
  EnumerationOptions options = options_for(config);
  CompareReport report;
  report.condition = condition;
  for (const FiniteGroup* group : groups) {
    // The quotient condition compares images inside the characteristic
    // quotient, which this toolkit materializes for abelian bases only.
    if (condition == CompareCondition::Quotient && !group->abelian()) continue;
    ConditionRow row;
    row.group = group->name();
    try {
      if (condition == CompareCondition::Quotient) {
        bool aligned = condition5_check(left, right, *group, config.quotient_cap, options);
        row.state = aligned ? ConditionRow::State::Equal : ConditionRow::State::Unequal;
        if (!aligned) row.detail = "no quotient automorphism aligns the tuple images";
      } else {
        MeasureCondition measure = condition == CompareCondition::Hom ? MeasureCondition::Hom
                                   : condition == CompareCondition::Epi
                                       ? MeasureCondition::Epi
                                       : MeasureCondition::ImEpi;
        ComparisonReport result = tuple_measures_equal(left, right, {group}, measure, options);
        row.state = result.rows.front().equal ? ConditionRow::State::Equal
                                              : ConditionRow::State::Unequal;
        row.detail = result.rows.front().detail;
      }
    } catch (const Error& error) {
      if (!error.is_resource_cap()) throw;
      row.state = ConditionRow::State::Capped;
      row.detail = error.what();
      ++report.capped;
    }
    if (row.state == ConditionRow::State::Unequal) report.all_equal = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

CompareReport subgroup_compare(const WordTuple& left, const WordTuple& right,
                               const ExperimentConfig& config) {
  if (left.arity() != right.arity())
    throw Error(ErrorKind::TupleArityMismatch, "tuples have different arities");
  for (const auto* side : {&left, &right}) {
    StallingsGraph graph = StallingsGraph::build(*side);
    if (static_cast<std::size_t>(graph.subgroup_rank()) != side->arity())
      throw Error(ErrorKind::TupleNotBasis,
                  "tuple generates a subgroup of rank " + std::to_string(graph.subgroup_rank()) +
                      ", so it is not an independent basis of length " +
                      std::to_string(side->arity()));
  }

  // Both tuples are bases of the subgroups they generate, so the positional
  // correspondence left[i] -> right[i] extends to a subgroup isomorphism and
  // the induced measures coincide exactly when the joint counts do.
  std::vector<const FiniteGroup*> groups = resolve_catalog(config.catalog);
  EnumerationOptions options = options_for(config);
  CompareReport report;
  report.condition = CompareCondition::Hom;
  for (const FiniteGroup* group : groups) {
    ConditionRow row;
    row.group = group->name();
    try {
      Fingerprint fp_left = hom_fingerprint(left, *group, options);
      Fingerprint fp_right = hom_fingerprint(right, *group, options);
      if (fp_left == fp_right) {
        row.state = ConditionRow::State::Equal;
      } else {
        row.state = ConditionRow::State::Unequal;
        row.detail = fp_left.diff(fp_right);
      }
    } catch (const Error& error) {
      if (!error.is_resource_cap()) throw;
      row.state = ConditionRow::State::Capped;
      row.detail = error.what();
      ++report.capped;
    }
    if (row.state == ConditionRow::State::Unequal) report.all_equal = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

const char* to_string(RigidityOutcome outcome) {
  switch (outcome) {
    case RigidityOutcome::MeasuresDiffer: return "measures_differ";
    case RigidityOutcome::MeasuresAgreeOrbitSame: return "measures_agree_orbit_same";
    case RigidityOutcome::MeasuresAgreeOrbitDifferent: return "measures_agree_orbit_different";
    case RigidityOutcome::MeasuresAgreeOrbitUnknown: return "measures_agree_orbit_unknown";
  }
  return "measures_differ";
}

RigidityReport rigidity_experiment(const WordTuple& left, const WordTuple& right,
                                   const ExperimentConfig& config) {
  RigidityReport report;
  report.hom = compare_tuples(left, right, CompareCondition::Hom, config);
  report.epi = compare_tuples(left, right, CompareCondition::Epi, config);
  report.imepi = compare_tuples(left, right, CompareCondition::ImEpi, config);
  report.quotient = compare_tuples(left, right, CompareCondition::Quotient, config);

  bool measures_agree = report.hom.all_equal && report.epi.all_equal &&
                        report.imepi.all_equal && report.quotient.all_equal;
  if (!measures_agree) {
    report.outcome = RigidityOutcome::MeasuresDiffer;
    for (const CompareReport* part : {&report.hom, &report.epi, &report.imepi, &report.quotient}) {
      for (const ConditionRow& row : part->rows)
        if (row.state == ConditionRow::State::Unequal) {
          report.witness_group = row.group;
          break;
        }
      if (!report.witness_group.empty()) break;
    }
    return report;
  }

  // The orbit search runs only on tuples whose computed measures all agree,
  // so a Same verdict can never contradict a measure difference.
  report.orbit = same_orbit(left, right, config.orbit_node_cap);
  switch (report.orbit->status) {
    case OrbitStatus::Same: report.outcome = RigidityOutcome::MeasuresAgreeOrbitSame; break;
    case OrbitStatus::Different:
      report.outcome = RigidityOutcome::MeasuresAgreeOrbitDifferent;
      break;
    case OrbitStatus::Unknown: report.outcome = RigidityOutcome::MeasuresAgreeOrbitUnknown; break;
  }
  return report;
}

namespace {

// Visits reduced words of exactly the given length in letter order
// a < a^-1 < b < b^-1 < ...; returns false when the visitor stops the scan.
bool visit_reduced_words(std::int32_t rank, std::size_t length, std::vector<std::int32_t>& prefix,
                         const std::function<bool(const std::vector<std::int32_t>&)>& visit) {
  if (prefix.size() == length) return visit(prefix);
  for (std::int32_t generator = 1; generator <= rank; ++generator) {
    for (std::int32_t letter : {generator, -generator}) {
      if (!prefix.empty() && prefix.back() == -letter) continue;
      prefix.push_back(letter);
      bool keep_going = visit_reduced_words(rank, length, prefix, visit);
      prefix.pop_back();
      if (!keep_going) return false;
    }
  }
  return true;
}

}  // namespace

InverseSearchResult search_inverse_witness(std::int32_t rank, std::int32_t max_len,
                                           const ExperimentConfig& config) {
  if (rank < 1) throw Error(ErrorKind::InvalidLetter, "rank must be at least 1");
  if (max_len < 1) throw Error(ErrorKind::Parse, "max_len must be at least 1");
  std::vector<const FiniteGroup*> groups = resolve_catalog(config.catalog);
  EnumerationOptions options = options_for(config);

  InverseSearchResult result;
  auto examine = [&](const std::vector<std::int32_t>& letters) {
    ++result.words_scanned;
    Word word = Word::reduce(letters, rank);
    WordTuple forward({word}, rank);
    WordTuple backward({word.inverse()}, rank);
    for (const FiniteGroup* group : groups) {
      Fingerprint fp_word = hom_fingerprint(forward, *group, options);
      Fingerprint fp_inverse = hom_fingerprint(backward, *group, options);
      if (fp_word.counts == fp_inverse.counts) continue;
      // Walk both count maps for the first element whose counts differ.
      auto it_word = fp_word.counts.begin();
      auto it_inverse = fp_inverse.counts.begin();
      while (it_word != fp_word.counts.end() || it_inverse != fp_inverse.counts.end()) {
        elem_t element;
        std::uint64_t count_word = 0, count_inverse = 0;
        if (it_inverse == fp_inverse.counts.end() ||
            (it_word != fp_word.counts.end() && it_word->first < it_inverse->first)) {
          element = it_word->first[0];
          count_word = it_word->second;
          ++it_word;
        } else if (it_word == fp_word.counts.end() || it_inverse->first < it_word->first) {
          element = it_inverse->first[0];
          count_inverse = it_inverse->second;
          ++it_inverse;
        } else {
          element = it_word->first[0];
          count_word = it_word->second;
          count_inverse = it_inverse->second;
          ++it_word;
          ++it_inverse;
        }
        if (count_word != count_inverse) {
          result.witness = InverseWitness{word,       group->name(), element,
                                          count_word, count_inverse, fp_word.total};
          return false;
        }
      }
    }
    return true;
  };

  std::vector<std::int32_t> prefix;
  for (std::size_t length = 1; length <= static_cast<std::size_t>(max_len); ++length)
    if (!visit_reduced_words(rank, length, prefix, examine)) break;
  return result;
}

std::vector<CatalogRow> catalog_listing() {
  std::vector<CatalogRow> rows;
  for (const std::string& id : catalog_ids()) {
    const FiniteGroup& group = catalog_group(id);
    rows.push_back(CatalogRow{id, group.order(), group.abelian()});
  }
  return rows;
}

std::string to_json(const CompareReport& report) { return compare_doc(report).dump(); }

std::string to_json(const RigidityReport& report) {
  nlohmann::ordered_json doc;
  doc["outcome"] = to_string(report.outcome);
  doc["witness_group"] = report.witness_group;
  doc["hom"] = compare_doc(report.hom);
  doc["epi"] = compare_doc(report.epi);
  doc["imepi"] = compare_doc(report.imepi);
  doc["quotient"] = compare_doc(report.quotient);
  if (report.orbit)
    doc["orbit"] = orbit_doc(*report.orbit);
  else
    doc["orbit"] = nullptr;
  return doc.dump();
}

std::string to_json(const InverseSearchResult& result, std::int32_t rank, std::int32_t max_len) {
  nlohmann::ordered_json doc;
  doc["rank"] = rank;
  doc["max_len"] = max_len;
  doc["words_scanned"] = result.words_scanned;
  if (result.witness) {
    nlohmann::ordered_json witness;
    witness["word"] = result.witness->word.str();
    witness["group"] = result.witness->group;
    witness["element"] = result.witness->element;
    witness["count_word"] = result.witness->count_word;
    witness["count_inverse"] = result.witness->count_inverse;
    witness["total"] = result.witness->total;
    doc["witness"] = std::move(witness);
  } else {
    doc["witness"] = nullptr;
  }
  return doc.dump();
}

std::string catalog_json() {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const CatalogRow& row : catalog_listing()) {
    nlohmann::ordered_json entry;
    entry["id"] = row.id;
    entry["order"] = row.order;
    entry["abelian"] = row.abelian;
    groups.push_back(std::move(entry));
  }
  doc["groups"] = std::move(groups);
  return doc.dump();
}

std::string witness_moves_json(const std::vector<WhiteheadMove>& moves) {
  return moves_doc(moves).dump();
}

}  // namespace fgtk
