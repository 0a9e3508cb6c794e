#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgtk/error.hpp"

namespace fgtk {

using elem_t = std::int32_t;

/// Finite group as a full Cayley table. Element 0 is always the identity and
/// the element ordering is part of the contract of each constructor:
///   cyclic(m)        residues 0..m-1
///   symmetric(n)     permutations of {0..n-1} in lexicographic one-line
///                    order (identity first); product is composition,
///                    (s*t)(i) = s(t(i))
///   alternating(n)   even permutations, same order and product
///   dihedral(m)      rotations r_0..r_{m-1} then reflections s_0..s_{m-1};
///                    r_a r_b = r_{a+b}, r_a s_b = s_{a+b}, s_a r_b = s_{a-b},
///                    s_a s_b = r_{a-b} (indices mod m)
///   quaternion8()    1, -1, i, -i, j, -j, k, -k
///   direct_product   pairs (g1, g2) in lexicographic order
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int m);
  static FiniteGroup symmetric(int n);
  static FiniteGroup alternating(int n);
  static FiniteGroup dihedral(int m);
  static FiniteGroup quaternion8();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  /// Validates the full set of group axioms (identity at 0, inverses,
  /// associativity); throws NotAGroup on any violation.
  static FiniteGroup from_table(const std::vector<std::vector<elem_t>>& table,
                                std::string name);

  elem_t order() const { return order_; }
  const std::string& name() const { return name_; }

  elem_t mul(elem_t g, elem_t h) const;
  elem_t inv(elem_t g) const;
  bool abelian() const;

  /// Order of the cyclic subgroup generated by g.
  elem_t element_order(elem_t g) const;

  const std::vector<elem_t>& table() const { return table_; }

 private:
  friend FiniteGroup make_trusted_group(elem_t order, std::vector<elem_t> table,
                                        std::string name);
  FiniteGroup(elem_t order, std::vector<elem_t> table, std::string name, bool trusted);

  void check_element(elem_t g) const;

  elem_t order_;
  std::vector<elem_t> table_;  // row-major, table_[g * order_ + h]
  std::vector<elem_t> inverse_;
  std::string name_;
};

/// Internal: wraps a multiplication table produced by a construction that
/// guarantees the group axioms (quotients, closures), skipping the O(n^3)
/// revalidation that from_table performs.
FiniteGroup make_trusted_group(elem_t order, std::vector<elem_t> table, std::string name);

/// Subgroup of a parent group as a sorted element list. A view type: the
/// parent must outlive the subgroup.
struct Subgroup {
  const FiniteGroup* parent;
  std::vector<elem_t> elements;  // sorted, always contains 0

  elem_t order() const { return static_cast<elem_t>(elements.size()); }
  bool contains(elem_t g) const;
  bool contains_all(const std::vector<elem_t>& gs) const;

  bool operator==(const Subgroup& other) const { return elements == other.elements; }
};

/// Subgroup generated by the given elements; the empty set yields the
/// trivial subgroup.
Subgroup generated_closure(const FiniteGroup& group, const std::vector<elem_t>& generators);

/// Full subgroup lattice, sorted by (order, elements). Throws GroupTooLarge
/// when the group order exceeds max_order.
std::vector<Subgroup> all_subgroups(const FiniteGroup& group, int max_order = 48);

/// Searches for an automorphism f with f(src[i]) == dst[i] for all i.
/// Deterministic: candidates are scanned in lexicographic element order and
/// the first fully verified map is returned, as the image table of f.
std::optional<std::vector<elem_t>> automorphism_search(const FiniteGroup& group,
                                                       const std::vector<elem_t>& src,
                                                       const std::vector<elem_t>& dst,
                                                       int max_order = 48);

/// Built-in groups addressable by id. Listing order is fixed.
const std::vector<std::string>& catalog_ids();
const FiniteGroup& catalog_group(const std::string& id);

}  // namespace fgtk
