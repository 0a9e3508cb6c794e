// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
//
// Every check is exact (integer equality); the only tolerances are the
// pinned wall-clock bounds named in the criteria below.

#include <chrono>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fgtk/experiment.hpp"
#include "fgtk/measures.hpp"
#include "fgtk/stallings.hpp"
#include "fgtk/whitehead.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kMassConservationBudgetSeconds = 60.0;
constexpr double kWhiteheadBudgetSeconds = 10.0;
constexpr double kFullSuiteBudgetSeconds = 120.0;

std::uint64_t g_seed = 20260819;
double g_elapsed_before_criterion9 = 0.0;

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::ostream&)> run;
};

std::vector<const fgtk::FiniteGroup*> full_catalog() {
  return fgtk::resolve_catalog(fgtk::catalog_ids());
}

std::vector<const fgtk::FiniteGroup*> abelian_catalog() {
  std::vector<const fgtk::FiniteGroup*> out;
  for (const auto* g : full_catalog())
    if (g->abelian()) out.push_back(g);
  return out;
}

fgtk::Endomorphism random_move_composition(std::mt19937_64& rng, std::int32_t rank,
                                           int max_moves) {
  auto moves = fgtk::whitehead_moves(rank);
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  std::uniform_int_distribution<int> count(0, max_moves);
  fgtk::Endomorphism e = fgtk::Endomorphism::identity(rank);
  int n = count(rng);
  for (int i = 0; i < n; ++i) e = fgtk::compose(moves[pick(rng)].to_endomorphism(), e);
  return e;
}

bool criterion_mass_conservation(std::ostream& detail) {
  auto start = Clock::now();
  std::mt19937_64 rng(g_seed + 1);
  auto groups = full_catalog();
  std::uniform_int_distribution<std::size_t> pick_group(0, groups.size() - 1);
  std::uniform_int_distribution<std::int32_t> pick_rank(1, 3);
  std::uniform_int_distribution<std::size_t> pick_arity(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const fgtk::FiniteGroup& g = *groups[pick_group(rng)];
    std::int32_t rank = pick_rank(rng);
    fgtk::WordTuple t = testutil::random_tuple(rng, rank, pick_arity(rng), 6);
    fgtk::Fingerprint fp = fgtk::hom_fingerprint(t, g);
    std::uint64_t expected = 1;
    for (std::int32_t i = 0; i < rank; ++i) expected *= static_cast<std::uint64_t>(g.order());
    std::uint64_t sum = 0;
    for (const auto& [key, n] : fp.counts) sum += n;
    if (sum != expected || fp.total != expected) {
      detail << "trial " << trial << " on " << g.name() << ": sum " << sum << " != |G|^n "
             << expected;
      return false;
    }
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (elapsed >= kMassConservationBudgetSeconds) {
    detail << "took " << elapsed << " s (budget " << kMassConservationBudgetSeconds << " s)";
    return false;
  }
  detail << "200 cases, " << elapsed << " s";
  return true;
}

bool criterion_epi_routes_agree(std::ostream& detail) {
  std::mt19937_64 rng(g_seed + 2);
  auto groups = full_catalog();
  std::uniform_int_distribution<std::size_t> pick_arity(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    fgtk::WordTuple t = testutil::random_tuple(rng, 2, pick_arity(rng), 5);
    for (const auto* g : groups) {
      fgtk::Fingerprint direct = fgtk::epi_fingerprint_direct(t, *g);
      fgtk::Fingerprint recursive = fgtk::epi_fingerprint_recursive(t, *g);
      if (!(direct == recursive)) {
        detail << "tuple " << trial << " on " << g->name() << ": " << direct.diff(recursive);
        return false;
      }
    }
  }
  detail << "50 tuples x " << groups.size() << " groups";
  return true;
}

bool criterion_decomposition_identity(std::ostream& detail) {
  std::mt19937_64 rng(g_seed + 3);
  std::uniform_int_distribution<std::size_t> pick_arity(1, 2);
  for (const char* id : {"S3", "D4", "Q8", "A4", "S4"}) {
    const fgtk::FiniteGroup& g = fgtk::catalog_group(id);
    for (int trial = 0; trial < 20; ++trial) {
      fgtk::WordTuple t = testutil::random_tuple(rng, 2, pick_arity(rng), 4);
      fgtk::Fingerprint hom = fgtk::hom_fingerprint(t, g);
      auto per_subgroup = fgtk::epi_counts_by_subgroup(t, g);
      for (const auto& [key, count] : hom.counts) {
        std::uint64_t sum = 0;
        for (const auto& entry : per_subgroup) {
          if (!entry.subgroup.contains_all(key)) continue;
          auto it = entry.counts.find(key);
          if (it != entry.counts.end()) sum += it->second;
        }
        if (sum != count) {
          detail << id << " trial " << trial << ": subgroup sum " << sum << " != hom count "
                 << count;
          return false;
        }
      }
    }
  }
  detail << "S3, D4, Q8, A4, S4 x 20 tuples";
  return true;
}

bool criterion_aut_invariance(std::ostream& detail) {
  std::mt19937_64 rng(g_seed + 4);
  auto groups = full_catalog();
  std::uniform_int_distribution<std::size_t> pick_group(0, groups.size() - 1);
  std::uniform_int_distribution<std::int32_t> pick_rank(2, 3);
  std::uniform_int_distribution<std::size_t> pick_arity(1, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::int32_t rank = pick_rank(rng);
    fgtk::WordTuple t = testutil::random_tuple(rng, rank, pick_arity(rng), 4);
    fgtk::Endomorphism phi = random_move_composition(rng, rank, 5);
    const fgtk::FiniteGroup& g = *groups[pick_group(rng)];
    fgtk::Fingerprint before = fgtk::hom_fingerprint(t, g);
    fgtk::Fingerprint after = fgtk::hom_fingerprint(phi.apply(t), g);
    if (!(before == after)) {
      detail << "trial " << trial << " on " << g.name() << ": " << before.diff(after);
      return false;
    }
  }
  detail << "100 random (tuple, move composition, group) triples";
  return true;
}

bool criterion_spot_checks(std::ostream& detail) {
  fgtk::Fingerprint aa = fgtk::hom_fingerprint(fgtk::parse_tuple({"aa"}), fgtk::catalog_group("Z4"));
  if (aa.counts != std::map<std::vector<fgtk::elem_t>, std::uint64_t>{{{0}, 2}, {{2}, 2}}) {
    detail << "hom((aa), Z4) is not {0:2, 2:2}";
    return false;
  }
  auto aa_oracle = oracle::hom_counts_cyclic({{1, 1}}, 1, 4);
  if (aa_oracle != oracle::CountMap{{{0}, 2}, {{2}, 2}}) {
    detail << "oracle disagrees on hom((aa), Z4)";
    return false;
  }

  fgtk::Fingerprint epi = fgtk::epi_fingerprint_direct(fgtk::parse_tuple({"a"}, 2),
                                                       fgtk::catalog_group("Z2"));
  if (epi.total != 3 || epi.total != oracle::epi_total_f2_z2()) {
    detail << "Epi(F_2 -> Z_2) total is " << epi.total << ", expected 3";
    return false;
  }

  auto images = fgtk::im_epi(fgtk::parse_tuple({"a", "b"}), fgtk::catalog_group("Z2"));
  std::set<std::vector<fgtk::elem_t>> expected;
  for (const auto& key : oracle::im_epi_f2_z2_generators())
    expected.insert(std::vector<fgtk::elem_t>(key.begin(), key.end()));
  if (images != expected) {
    detail << "im_epi((a,b), Z2) does not match the oracle";
    return false;
  }

  auto q2 = fgtk::char_quotient(2, fgtk::catalog_group("Z2"));
  if (static_cast<std::size_t>(q2.quotient.order()) != oracle::char_quotient_order_f2_z2()) {
    detail << "characteristic quotient for Z2 has order " << q2.quotient.order() << ", expected "
           << oracle::char_quotient_order_f2_z2();
    return false;
  }
  auto q3 = fgtk::char_quotient(2, fgtk::catalog_group("Z3"));
  if (static_cast<std::size_t>(q3.quotient.order()) != oracle::char_quotient_order_f2_z3()) {
    detail << "characteristic quotient for Z3 has order " << q3.quotient.order() << ", expected "
           << oracle::char_quotient_order_f2_z3();
    return false;
  }
  detail << "5 derived values vs pre-build oracles";
  return true;
}

bool criterion_inversion_covariance(std::ostream& detail) {
  std::mt19937_64 rng(g_seed + 6);
  auto groups = abelian_catalog();
  for (int trial = 0; trial < 100; ++trial) {
    fgtk::Word w = testutil::random_reduced_word(rng, 2, 6);
    fgtk::WordTuple t({w}, 2);
    fgtk::WordTuple tinv({w.inverse()}, 2);
    for (const auto* g : groups) {
      fgtk::Fingerprint fw = fgtk::hom_fingerprint(t, *g);
      fgtk::Fingerprint fi = fgtk::hom_fingerprint(tinv, *g);
      std::map<std::vector<fgtk::elem_t>, std::uint64_t> inverted;
      for (const auto& [key, n] : fw.counts) inverted[{g->inv(key[0])}] = n;
      if (fi.counts != inverted) {
        detail << "word " << w.str() << " on " << g->name() << ": inverse fingerprint mismatch";
        return false;
      }
    }
  }
  detail << "100 words x " << groups.size() << " abelian groups";
  return true;
}

bool criterion_subgroup_dual_path(std::ostream& detail) {
  std::mt19937_64 rng(g_seed + 7);
  const char* group_ids[] = {"Z2", "Z3", "S3"};
  std::uniform_int_distribution<std::size_t> pick_arity(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    fgtk::WordTuple t = testutil::random_tuple(rng, 2, pick_arity(rng), 5);
    const fgtk::FiniteGroup& g = fgtk::catalog_group(group_ids[trial % 3]);
    fgtk::SubgroupFingerprint via_basis = fgtk::subgroup_fingerprint(t, g);
    if (via_basis.basis.empty()) {
      if (!via_basis.fingerprint.counts.empty() && via_basis.fingerprint.counts.begin()->first !=
          std::vector<fgtk::elem_t>{}) {
        detail << "trial " << trial << ": trivial subgroup fingerprint malformed";
        return false;
      }
    } else {
      fgtk::Fingerprint direct =
          fgtk::hom_fingerprint(fgtk::WordTuple(via_basis.basis, t.rank), g);
      if (!(via_basis.fingerprint == direct)) {
        detail << "trial " << trial << " on " << g.name() << ": "
               << via_basis.fingerprint.diff(direct);
        return false;
      }
    }
    // generated-subgroup equality by mutual membership
    fgtk::StallingsGraph from_tuple = fgtk::StallingsGraph::build(t);
    fgtk::StallingsGraph from_basis = fgtk::StallingsGraph::build(via_basis.basis, t.rank);
    for (const auto& w : t.words)
      if (!from_basis.contains(w)) {
        detail << "trial " << trial << ": generator " << w.str() << " escapes the basis span";
        return false;
      }
    for (const auto& w : via_basis.basis)
      if (!from_tuple.contains(w)) {
        detail << "trial " << trial << ": basis word " << w.str() << " escapes the tuple span";
        return false;
      }
  }
  detail << "50 tuples, fingerprints + mutual membership";
  return true;
}

bool criterion_whitehead_soundness(std::ostream& detail) {
  auto start = Clock::now();
  auto letters = fgtk::same_orbit(fgtk::parse_tuple({"a"}, 2), fgtk::parse_tuple({"b"}, 2));
  if (letters.status != fgtk::OrbitStatus::Same || !letters.witness.has_value() ||
      letters.witness->apply(fgtk::Word::parse("a", 2)) != fgtk::Word::parse("b", 2)) {
    detail << "same_orbit((a),(b)) failed";
    return false;
  }
  auto split = fgtk::same_orbit(fgtk::parse_tuple({"aa"}, 2), fgtk::parse_tuple({"abAB"}, 2));
  if (split.status != fgtk::OrbitStatus::Different) {
    detail << "same_orbit((aa),(abAB)) did not separate";
    return false;
  }
  auto minimized = fgtk::whitehead_minimize(fgtk::parse_tuple({"ab"}));
  if (minimized.minimized.total_length() != 1) {
    detail << "minimize((ab)) has length " << minimized.minimized.total_length();
    return false;
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (elapsed >= kWhiteheadBudgetSeconds) {
    detail << "took " << elapsed << " s (budget " << kWhiteheadBudgetSeconds << " s)";
    return false;
  }
  detail << "witnessed join, separation, primitive descent in " << elapsed << " s";
  return true;
}

bool criterion_rigidity_pipeline(std::ostream& detail) {
  fgtk::ExperimentConfig config = fgtk::default_config();
  auto differ = fgtk::rigidity_experiment(fgtk::parse_tuple({"a"}, 2),
                                          fgtk::parse_tuple({"aa"}, 2), config);
  if (differ.outcome != fgtk::RigidityOutcome::MeasuresDiffer || differ.witness_group != "Z2") {
    detail << "(a) vs (aa) classified as " << fgtk::to_string(differ.outcome) << " with witness '"
           << differ.witness_group << "'";
    return false;
  }
  auto same = fgtk::rigidity_experiment(fgtk::parse_tuple({"aa"}, 2),
                                        fgtk::parse_tuple({"bb"}, 2), config);
  if (same.outcome != fgtk::RigidityOutcome::MeasuresAgreeOrbitSame) {
    detail << "(aa) vs (bb) classified as " << fgtk::to_string(same.outcome);
    return false;
  }
  double total = g_elapsed_before_criterion9;
  if (total >= kFullSuiteBudgetSeconds) {
    detail << "suite consumed " << total << " s before this criterion (budget "
           << kFullSuiteBudgetSeconds << " s)";
    return false;
  }
  detail << "both classifications exact; suite at " << total << " s of "
         << kFullSuiteBudgetSeconds << " s";
  return true;
}

bool criterion_cross_condition_coherence(std::ostream& detail) {
  std::mt19937_64 rng(g_seed + 10);
  auto groups = full_catalog();
  std::uniform_int_distribution<std::size_t> pick_arity(1, 2);
  for (int trial = 0; trial < 5; ++trial) {
    fgtk::WordTuple t = testutil::random_tuple(rng, 2, pick_arity(rng), 4);
    fgtk::Endomorphism phi = random_move_composition(rng, 2, 3);
    fgtk::WordTuple image = phi.apply(t);
    for (auto condition : {fgtk::MeasureCondition::Hom, fgtk::MeasureCondition::Epi,
                           fgtk::MeasureCondition::ImEpi}) {
      auto report = fgtk::tuple_measures_equal(t, image, groups, condition);
      if (!report.all_equal) {
        detail << "trial " << trial << ": a measure condition failed on an automorphic image";
        return false;
      }
    }
    for (const char* id : {"Z2", "Z3"}) {
      if (!fgtk::condition5_check(t, image, fgtk::catalog_group(id))) {
        detail << "trial " << trial << ": quotient condition failed on " << id;
        return false;
      }
    }
  }
  detail << "5 automorphic pairs, conditions 2-5";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
    } else if (std::strcmp(argv[i], "--help") == 0) {
      std::cout << "usage: fgtk_acceptance [--seed N]\n";
      return 0;
    }
  }

  std::vector<Criterion> criteria = {
      {1, "mass conservation", criterion_mass_conservation},
      {2, "epi recursion equals direct enumeration", criterion_epi_routes_agree},
      {3, "hom counts decompose over the subgroup lattice", criterion_decomposition_identity},
      {4, "fingerprints are move-invariant", criterion_aut_invariance},
      {5, "derived-value spot checks against oracles", criterion_spot_checks},
      {6, "inversion covariance on abelian groups", criterion_inversion_covariance},
      {7, "subgroup measures agree along both routes", criterion_subgroup_dual_path},
      {8, "orbit decisions are sound", criterion_whitehead_soundness},
      {9, "rigidity pipeline end to end", criterion_rigidity_pipeline},
      {10, "equivalence conditions cohere on automorphic pairs", criterion_cross_condition_coherence},
  };

  auto suite_start = Clock::now();
  std::cout << "acceptance suite (seed " << g_seed << ")\n";
  bool all_passed = true;
  for (const auto& criterion : criteria) {
    g_elapsed_before_criterion9 = std::chrono::duration<double>(Clock::now() - suite_start).count();
    std::ostringstream detail;
    bool passed = false;
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail << "threw: " << e.what();
    }
    all_passed = all_passed && passed;
    std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
              << criterion.name << " [" << detail.str() << "]\n";
  }
  double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  std::cout << (all_passed ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " in " << total
            << " s\n";
  return all_passed ? 0 : 1;
}
