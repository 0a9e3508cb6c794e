#include "fgtk/measures.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <utility>

#include "fgtk/stallings.hpp"
#include "json.hpp"

namespace fgtk {

namespace {

using CountMap = std::map<std::vector<elem_t>, std::uint64_t>;

std::string key_to_string(const std::vector<elem_t>& key) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out << ",";
    out << key[i];
  }
  out << ")";
  return out.str();
}

// |domain|^rank with an overflow-safe comparison against the budget.
std::uint64_t checked_power(std::size_t domain_size, std::int32_t rank, std::uint64_t budget,
                            const std::string& what) {
  std::uint64_t total = 1;
  for (std::int32_t i = 0; i < rank; ++i) {
    if (domain_size != 0 && total > budget / domain_size)
      throw Error(ErrorKind::EnumerationTooLarge,
                  what + ": enumeration exceeds the budget of " + std::to_string(budget) +
                      " homomorphisms");
    total *= domain_size;
  }
  if (total > budget)
    throw Error(ErrorKind::EnumerationTooLarge,
                what + ": enumeration exceeds the budget of " + std::to_string(budget) +
                    " homomorphisms");
  return total;
}

elem_t evaluate_unchecked(const Word& w, const std::vector<elem_t>& images,
                          const FiniteGroup& group) {
  elem_t value = 0;
  for (std::int32_t letter : w.letters()) {
    if (letter > 0)
      value = group.mul(value, images[static_cast<std::size_t>(letter - 1)]);
    else
      value = group.mul(value, group.inv(images[static_cast<std::size_t>(-letter - 1)]));
  }
  return value;
}

// Counts joint word values over all generator assignments drawn from the
// domain. With required_closure_order >= 0 only assignments whose generated
// subgroup has exactly that order are counted. Splitting the first generator
// image across threads keeps the result exact and deterministic: per-thread
// maps merge by summation, which is order-independent.
CountMap count_assignments(const WordTuple& tuple, const FiniteGroup& group,
                           const std::vector<elem_t>& domain, const EnumerationOptions& options,
                           elem_t required_closure_order, const std::string& what) {
  checked_power(domain.size(), tuple.rank, options.budget, what);
  const std::size_t rank = static_cast<std::size_t>(tuple.rank);

  auto scan = [&](std::size_t first_begin, std::size_t first_step) {
    CountMap local;
    std::vector<std::size_t> odometer(rank, 0);
    std::vector<elem_t> images(rank, 0);
    for (std::size_t first = first_begin; first < domain.size(); first += first_step) {
      odometer.assign(rank, 0);
      odometer[0] = first;
      bool done = false;
      while (!done) {
        for (std::size_t i = 0; i < rank; ++i) images[i] = domain[odometer[i]];
        bool keep = true;
        if (required_closure_order >= 0)
          keep = generated_closure(group, images).order() == required_closure_order;
        if (keep) {
          std::vector<elem_t> key;
          key.reserve(tuple.words.size());
          for (const Word& w : tuple.words) key.push_back(evaluate_unchecked(w, images, group));
          ++local[std::move(key)];
        }
        // Advance all digits but the first, which this slice owns.
        done = true;
        for (std::size_t digit = rank; digit-- > 1;) {
          if (++odometer[digit] < domain.size()) {
            done = false;
            break;
          }
          odometer[digit] = 0;
        }
      }
    }
    return local;
  };

  if (domain.empty()) return {};
  int threads = std::max(1, options.threads);
  threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                   domain.size()));
  if (threads == 1) return scan(0, 1);

  std::vector<CountMap> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&, t] {
      partial[static_cast<std::size_t>(t)] =
          scan(static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
    });
  for (auto& worker : workers) worker.join();
  CountMap merged;
  for (const CountMap& part : partial)
    for (const auto& [key, n] : part) merged[key] += n;
  return merged;
}

std::vector<elem_t> whole_group_domain(const FiniteGroup& group) {
  std::vector<elem_t> domain(static_cast<std::size_t>(group.order()));
  for (elem_t g = 0; g < group.order(); ++g) domain[static_cast<std::size_t>(g)] = g;
  return domain;
}

Fingerprint wrap(const WordTuple& tuple, const FiniteGroup& group, CountMap counts) {
  Fingerprint fp;
  fp.group_name = group.name();
  fp.group_order = group.order();
  fp.arity = static_cast<std::int32_t>(tuple.arity());
  fp.counts = std::move(counts);
  fp.total = 0;
  for (const auto& [key, n] : fp.counts) fp.total += n;
  return fp;
}

}  // namespace

bool Fingerprint::operator==(const Fingerprint& other) const {
  return group_name == other.group_name && group_order == other.group_order &&
         arity == other.arity && total == other.total && counts == other.counts;
}

std::string Fingerprint::diff(const Fingerprint& other) const {
  if (group_name != other.group_name) return "groups differ: " + group_name + " vs " + other.group_name;
  if (group_order != other.group_order) return "group orders differ";
  if (arity != other.arity) return "arities differ";
  auto left = counts.begin();
  auto right = other.counts.begin();
  while (left != counts.end() || right != other.counts.end()) {
    if (right == other.counts.end() || (left != counts.end() && left->first < right->first))
      return "at " + key_to_string(left->first) + ": " + std::to_string(left->second) + " vs 0";
    if (left == counts.end() || right->first < left->first)
      return "at " + key_to_string(right->first) + ": 0 vs " + std::to_string(right->second);
    if (left->second != right->second)
      return "at " + key_to_string(left->first) + ": " + std::to_string(left->second) + " vs " +
             std::to_string(right->second);
    ++left;
    ++right;
  }
  if (total != other.total)
    return "totals differ: " + std::to_string(total) + " vs " + std::to_string(other.total);
  return "";
}

std::string to_json(const Fingerprint& fp) {
  nlohmann::ordered_json doc;
  doc["group"] = fp.group_name;
  doc["order"] = fp.group_order;
  doc["arity"] = fp.arity;
  doc["total"] = fp.total;
  auto counts = nlohmann::ordered_json::array();
  for (const auto& [key, n] : fp.counts) {
    nlohmann::ordered_json entry;
    entry["image"] = key;
    entry["n"] = n;
    counts.push_back(std::move(entry));
  }
  doc["counts"] = std::move(counts);
  return doc.dump();
}

elem_t evaluate(const Word& w, const std::vector<elem_t>& images, const FiniteGroup& group) {
  if (static_cast<std::int32_t>(images.size()) != w.rank())
    throw Error(ErrorKind::RankMismatch, "image count differs from the word's rank");
  for (elem_t g : images) group.inv(g);  // validates each element
  return evaluate_unchecked(w, images, group);
}

Fingerprint hom_fingerprint(const WordTuple& tuple, const FiniteGroup& group,
                            const EnumerationOptions& options) {
  CountMap counts = count_assignments(tuple, group, whole_group_domain(group), options, -1,
                                      group.name() + " hom counts");
  return wrap(tuple, group, std::move(counts));
}

Fingerprint epi_fingerprint_direct(const WordTuple& tuple, const FiniteGroup& group,
                                   const EnumerationOptions& options) {
  CountMap counts = count_assignments(tuple, group, whole_group_domain(group), options,
                                      group.order(), group.name() + " epi counts");
  return wrap(tuple, group, std::move(counts));
}

std::vector<SubgroupEpiCounts> epi_counts_by_subgroup(const WordTuple& tuple,
                                                      const FiniteGroup& group,
                                                      const EnumerationOptions& options,
                                                      int subgroup_cap) {
  std::vector<Subgroup> lattice = all_subgroups(group, subgroup_cap);
  std::vector<SubgroupEpiCounts> out;
  out.reserve(lattice.size());
  // The lattice is sorted by order, so every proper subgroup of the current
  // one is already resolved: epi(H) = hom(H) minus epis of proper subgroups.
  for (const Subgroup& h : lattice) {
    CountMap hom = count_assignments(tuple, group, h.elements, options, -1,
                                     group.name() + " subgroup hom counts");
    for (const SubgroupEpiCounts& smaller : out) {
      if (smaller.subgroup.order() >= h.order()) break;
      if (!std::includes(h.elements.begin(), h.elements.end(), smaller.subgroup.elements.begin(),
                         smaller.subgroup.elements.end()))
        continue;
      for (const auto& [key, n] : smaller.counts) {
        auto it = hom.find(key);
        if (it != hom.end()) {
          it->second -= n;
          if (it->second == 0) hom.erase(it);
        }
      }
    }
    out.push_back(SubgroupEpiCounts{h, std::move(hom)});
  }
  return out;
}

Fingerprint epi_fingerprint_recursive(const WordTuple& tuple, const FiniteGroup& group,
                                      const EnumerationOptions& options, int subgroup_cap) {
  std::vector<SubgroupEpiCounts> per_subgroup =
      epi_counts_by_subgroup(tuple, group, options, subgroup_cap);
  for (const SubgroupEpiCounts& entry : per_subgroup)
    if (entry.subgroup.order() == group.order()) return wrap(tuple, group, entry.counts);
  throw Error(ErrorKind::NotAGroup, group.name() + ": subgroup lattice misses the full group");
}

std::set<std::vector<elem_t>> im_epi(const WordTuple& tuple, const FiniteGroup& group,
                                     const EnumerationOptions& options) {
  Fingerprint fp = epi_fingerprint_direct(tuple, group, options);
  std::set<std::vector<elem_t>> support;
  for (const auto& [key, n] : fp.counts) support.insert(key);
  return support;
}

SubgroupFingerprint subgroup_fingerprint(const WordTuple& tuple, const FiniteGroup& group,
                                         const EnumerationOptions& options) {
  StallingsGraph graph = StallingsGraph::build(tuple);
  std::vector<Word> basis = graph.basis();
  Fingerprint fp = hom_fingerprint(WordTuple(basis, tuple.rank), group, options);
  return SubgroupFingerprint{std::move(basis), std::move(fp)};
}

ComparisonReport tuple_measures_equal(const WordTuple& left, const WordTuple& right,
                                      const std::vector<const FiniteGroup*>& groups,
                                      MeasureCondition condition,
                                      const EnumerationOptions& options) {
  if (left.arity() != right.arity())
    throw Error(ErrorKind::TupleArityMismatch, "tuples have different arities");
  if (left.rank != right.rank)
    throw Error(ErrorKind::RankMismatch, "tuples have different ambient ranks");
  ComparisonReport report;
  for (const FiniteGroup* group : groups) {
    GroupComparison row;
    row.group = group->name();
    switch (condition) {
      case MeasureCondition::Hom: {
        Fingerprint l = hom_fingerprint(left, *group, options);
        Fingerprint r = hom_fingerprint(right, *group, options);
        row.equal = l == r;
        if (!row.equal) row.detail = l.diff(r);
        break;
      }
      case MeasureCondition::Epi: {
        Fingerprint l = epi_fingerprint_direct(left, *group, options);
        Fingerprint r = epi_fingerprint_direct(right, *group, options);
        row.equal = l == r;
        if (!row.equal) row.detail = l.diff(r);
        break;
      }
      case MeasureCondition::ImEpi: {
        auto l = im_epi(left, *group, options);
        auto r = im_epi(right, *group, options);
        row.equal = l == r;
        if (!row.equal) {
          std::vector<std::vector<elem_t>> only;
          std::set_symmetric_difference(l.begin(), l.end(), r.begin(), r.end(),
                                        std::back_inserter(only));
          row.detail = "image " + key_to_string(only.front()) + " attained on one side only";
        }
        break;
      }
    }
    report.all_equal = report.all_equal && row.equal;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

// Encodes pairs of group elements as single integers for closure runs in GxG.
bool same_kernel(const FiniteGroup& group, const std::vector<elem_t>& phi,
                 const std::vector<elem_t>& psi) {
  const std::uint64_t n = static_cast<std::uint64_t>(group.order());
  std::set<std::uint64_t> closed{0};
  std::vector<std::uint64_t> frontier{0};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    std::uint64_t pair = static_cast<std::uint64_t>(phi[i]) * n + static_cast<std::uint64_t>(psi[i]);
    if (closed.insert(pair).second) frontier.push_back(pair);
  }
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : frontier) {
      std::vector<std::uint64_t> snapshot(closed.begin(), closed.end());
      elem_t fa = static_cast<elem_t>(f / n);
      elem_t fb = static_cast<elem_t>(f % n);
      for (std::uint64_t x : snapshot) {
        elem_t xa = static_cast<elem_t>(x / n);
        elem_t xb = static_cast<elem_t>(x % n);
        for (auto [a, b] : {std::pair{group.mul(fa, xa), group.mul(fb, xb)},
                            std::pair{group.mul(xa, fa), group.mul(xb, fb)}}) {
          std::uint64_t p = static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b);
          if (closed.insert(p).second) next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  // The closure is the subgroup generated by the joint images; both
  // projections are onto, and it is the graph of an isomorphism (equivalently
  // the kernels agree) exactly when it has |G| elements.
  return closed.size() == n;
}

// Practical bound on materializing a Cayley table for the quotient.
constexpr std::uint64_t kQuotientTableCap = 4096;

}  // namespace

CharQuotient char_quotient(std::int32_t rank, const FiniteGroup& group,
                           std::uint64_t quotient_cap, const EnumerationOptions& options) {
  if (rank < 1) throw Error(ErrorKind::InvalidLetter, "rank must be at least 1");
  checked_power(static_cast<std::size_t>(group.order()), rank, options.budget,
                group.name() + " surjection enumeration");

  // One representative surjection per kernel class, in lexicographic order.
  std::vector<std::vector<elem_t>> representatives;
  std::vector<elem_t> assignment(static_cast<std::size_t>(rank), 0);
  bool done = false;
  while (!done) {
    if (generated_closure(group, assignment).order() == group.order()) {
      bool fresh = true;
      for (const auto& rep : representatives)
        if (same_kernel(group, rep, assignment)) {
          fresh = false;
          break;
        }
      if (fresh) representatives.push_back(assignment);
    }
    std::size_t digit = static_cast<std::size_t>(rank);
    while (digit > 0) {
      --digit;
      if (++assignment[digit] < group.order()) break;
      assignment[digit] = 0;
      if (digit == 0) done = true;
    }
  }
  if (representatives.empty())
    throw Error(ErrorKind::NoEpimorphisms,
                group.name() + " admits no surjection from a free group of rank " +
                    std::to_string(rank));

  // The quotient embeds in the product of one copy of G per kernel class;
  // close the generator image-vectors under componentwise multiplication.
  std::vector<std::vector<elem_t>> generators(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    generators[i].reserve(representatives.size());
    for (const auto& rep : representatives) generators[i].push_back(rep[i]);
  }
  std::uint64_t effective_cap = std::min(quotient_cap, kQuotientTableCap);
  std::set<std::vector<elem_t>> closed;
  closed.insert(std::vector<elem_t>(representatives.size(), 0));
  std::vector<std::vector<elem_t>> frontier(closed.begin(), closed.end());
  for (const auto& g : generators)
    if (closed.insert(g).second) frontier.push_back(g);
  auto mul_vec = [&group](const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
    std::vector<elem_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = group.mul(a[i], b[i]);
    return out;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<elem_t>> next;
    for (const auto& f : frontier) {
      std::vector<std::vector<elem_t>> snapshot(closed.begin(), closed.end());
      for (const auto& x : snapshot) {
        for (auto&& product : {mul_vec(f, x), mul_vec(x, f)}) {
          if (closed.size() >= effective_cap && !closed.count(product))
            throw Error(ErrorKind::QuotientTooLarge,
                        group.name() + ": characteristic quotient exceeds the cap of " +
                            std::to_string(effective_cap) + " elements");
          if (closed.insert(product).second) next.push_back(product);
        }
      }
    }
    frontier = std::move(next);
  }

  // Index elements in lexicographic order; the identity vector is least.
  std::vector<std::vector<elem_t>> elements(closed.begin(), closed.end());
  std::map<std::vector<elem_t>, elem_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index[elements[i]] = static_cast<elem_t>(i);
  const std::size_t q = elements.size();
  std::vector<elem_t> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = index.at(mul_vec(elements[a], elements[b]));
  FiniteGroup quotient =
      make_trusted_group(static_cast<elem_t>(q), std::move(table), "Q(" + group.name() + ")");

  std::vector<elem_t> generator_images;
  generator_images.reserve(generators.size());
  for (const auto& g : generators) generator_images.push_back(index.at(g));
  return CharQuotient{group.name(), std::move(quotient), std::move(generator_images)};
}

bool condition5_check(const WordTuple& left, const WordTuple& right, const FiniteGroup& group,
                      std::uint64_t quotient_cap, const EnumerationOptions& options) {
  if (left.arity() != right.arity())
    throw Error(ErrorKind::TupleArityMismatch, "tuples have different arities");
  if (left.rank != right.rank)
    throw Error(ErrorKind::RankMismatch, "tuples have different ambient ranks");
  CharQuotient cq = [&] {
    try {
      return char_quotient(left.rank, group, quotient_cap, options);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoEpimorphisms) {
        // Empty kernel intersection convention: the quotient is trivial and
        // the condition holds vacuously. Signal with an empty marker.
        return CharQuotient{group.name(), FiniteGroup::cyclic(1), {}};
      }
      throw;
    }
  }();
  if (cq.generator_images.empty()) return true;  // vacuous case above
  auto image_of = [&](const WordTuple& tuple) {
    std::vector<elem_t> images;
    images.reserve(tuple.words.size());
    for (const Word& w : tuple.words)
      images.push_back(evaluate(w, cq.generator_images, cq.quotient));
    return images;
  };
  std::vector<elem_t> src = image_of(left);
  std::vector<elem_t> dst = image_of(right);
  return automorphism_search(cq.quotient, src, dst, cq.quotient.order()).has_value();
}

}  // namespace fgtk
