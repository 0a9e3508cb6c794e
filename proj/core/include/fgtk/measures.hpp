#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fgtk/finite_group.hpp"
#include "fgtk/word.hpp"

namespace fgtk {

/// Exact joint value counts of a word tuple over a family of homomorphisms
/// into a finite group. Keys are tuples of element indices; total is the
/// number of homomorphisms counted (the sum of all counts).
struct Fingerprint {
  std::string group_name;
  elem_t group_order = 1;
  std::int32_t arity = 0;
  std::map<std::vector<elem_t>, std::uint64_t> counts;  // nonzero entries only
  std::uint64_t total = 0;

  bool operator==(const Fingerprint& other) const;

  /// Empty string when equal, otherwise a one-line description of the first
  /// difference in key order.
  std::string diff(const Fingerprint& other) const;
};

/// Stable serialization: {"group", "order", "arity", "total", "counts"},
/// counts sorted lexicographically by image.
std::string to_json(const Fingerprint& fp);

struct EnumerationOptions {
  std::uint64_t budget = 10'000'000;  // max homomorphisms per enumeration
  int threads = 1;                    // data-parallel split on the first generator image
};

/// Value of a word at a generator assignment, multiplied left to right.
elem_t evaluate(const Word& w, const std::vector<elem_t>& images, const FiniteGroup& group);

/// Counts over all |G|^rank homomorphisms. Throws EnumerationTooLarge when
/// |G|^rank exceeds the budget.
Fingerprint hom_fingerprint(const WordTuple& tuple, const FiniteGroup& group,
                            const EnumerationOptions& options = {});

/// Counts restricted to surjective homomorphisms, by direct enumeration.
Fingerprint epi_fingerprint_direct(const WordTuple& tuple, const FiniteGroup& group,
                                   const EnumerationOptions& options = {});

/// Per-subgroup surjection counts: hom counts into each subgroup minus the
/// counts of every proper subgroup, computed smallest subgroup first.
struct SubgroupEpiCounts {
  Subgroup subgroup;
  std::map<std::vector<elem_t>, std::uint64_t> counts;
};
std::vector<SubgroupEpiCounts> epi_counts_by_subgroup(const WordTuple& tuple,
                                                      const FiniteGroup& group,
                                                      const EnumerationOptions& options = {},
                                                      int subgroup_cap = 48);

/// Same values as epi_fingerprint_direct, recovered from hom counts of the
/// subgroup lattice; the two routes must agree exactly.
Fingerprint epi_fingerprint_recursive(const WordTuple& tuple, const FiniteGroup& group,
                                      const EnumerationOptions& options = {},
                                      int subgroup_cap = 48);

/// Joint images attained by surjective homomorphisms.
std::set<std::vector<elem_t>> im_epi(const WordTuple& tuple, const FiniteGroup& group,
                                     const EnumerationOptions& options = {});

/// Measure induced by the subgroup generated by the tuple: a free basis is
/// extracted from the folded core graph and fingerprinted in its place.
struct SubgroupFingerprint {
  std::vector<Word> basis;
  Fingerprint fingerprint;
};
SubgroupFingerprint subgroup_fingerprint(const WordTuple& tuple, const FiniteGroup& group,
                                         const EnumerationOptions& options = {});

enum class MeasureCondition { Hom, Epi, ImEpi };

struct GroupComparison {
  std::string group;
  bool equal = false;
  std::string detail;  // first difference when unequal
};

struct ComparisonReport {
  std::vector<GroupComparison> rows;
  bool all_equal = true;
};

/// Compares two tuples of equal arity and rank groupwise under the given
/// condition.
ComparisonReport tuple_measures_equal(const WordTuple& left, const WordTuple& right,
                                      const std::vector<const FiniteGroup*>& groups,
                                      MeasureCondition condition,
                                      const EnumerationOptions& options = {});

/// F_rank / K where K is the intersection of the kernels of all surjections
/// onto the base group. Elements are joint image vectors over one surjection
/// per kernel class, multiplied componentwise.
struct CharQuotient {
  std::string base_group;
  FiniteGroup quotient;
  std::vector<elem_t> generator_images;  // images of the free generators
};

CharQuotient char_quotient(std::int32_t rank, const FiniteGroup& group,
                           std::uint64_t quotient_cap = 100'000,
                           const EnumerationOptions& options = {});

/// True when some automorphism of the characteristic quotient carries the
/// image of the left tuple to the image of the right tuple.
bool condition5_check(const WordTuple& left, const WordTuple& right, const FiniteGroup& group,
                      std::uint64_t quotient_cap = 100'000,
                      const EnumerationOptions& options = {});

}  // namespace fgtk
