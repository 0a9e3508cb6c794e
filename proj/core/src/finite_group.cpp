#include "fgtk/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace fgtk {

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> one_line(static_cast<std::size_t>(n));
  std::iota(one_line.begin(), one_line.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(one_line);
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

// Cayley table of a listed permutation group under (s*t)(i) = s(t(i)).
std::vector<elem_t> permutation_table(const std::vector<std::vector<int>>& perms) {
  std::map<std::vector<int>, elem_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<elem_t>(i);
  const elem_t n = static_cast<elem_t>(perms.size());
  std::vector<elem_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (elem_t s = 0; s < n; ++s) {
    for (elem_t t = 0; t < n; ++t) {
      std::vector<int> product(perms[static_cast<std::size_t>(s)].size());
      for (std::size_t i = 0; i < product.size(); ++i)
        product[i] = perms[static_cast<std::size_t>(s)]
                          [static_cast<std::size_t>(perms[static_cast<std::size_t>(t)][i])];
      table[static_cast<std::size_t>(s) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(t)] = index.at(product);
    }
  }
  return table;
}

}  // namespace

FiniteGroup::FiniteGroup(elem_t order, std::vector<elem_t> table, std::string name, bool trusted)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
  if (order_ < 1) throw Error(ErrorKind::NotAGroup, name_ + ": order must be positive");
  const std::size_t n = static_cast<std::size_t>(order_);
  if (table_.size() != n * n)
    throw Error(ErrorKind::NotAGroup, name_ + ": table is not order x order");
  if (!trusted) {
    for (elem_t value : table_)
      if (value < 0 || value >= order_)
        throw Error(ErrorKind::NotAGroup, name_ + ": table entry out of range");
    for (elem_t g = 0; g < order_; ++g) {
      if (table_[static_cast<std::size_t>(g)] != g || table_[n * static_cast<std::size_t>(g)] != g)
        throw Error(ErrorKind::NotAGroup, name_ + ": element 0 is not the identity");
    }
    // Latin square: every row and column is a permutation.
    for (elem_t g = 0; g < order_; ++g) {
      std::vector<bool> row(n, false), col(n, false);
      for (elem_t h = 0; h < order_; ++h) {
        row[static_cast<std::size_t>(table_[static_cast<std::size_t>(g) * n +
                                            static_cast<std::size_t>(h)])] = true;
        col[static_cast<std::size_t>(table_[static_cast<std::size_t>(h) * n +
                                            static_cast<std::size_t>(g)])] = true;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!row[i] || !col[i])
          throw Error(ErrorKind::NotAGroup, name_ + ": a row or column is not a permutation");
    }
    for (elem_t a = 0; a < order_; ++a)
      for (elem_t b = 0; b < order_; ++b)
        for (elem_t c = 0; c < order_; ++c) {
          elem_t left = table_[static_cast<std::size_t>(table_[static_cast<std::size_t>(a) * n +
                                                               static_cast<std::size_t>(b)]) *
                                   n +
                               static_cast<std::size_t>(c)];
          elem_t right = table_[static_cast<std::size_t>(a) * n +
                                static_cast<std::size_t>(table_[static_cast<std::size_t>(b) * n +
                                                                static_cast<std::size_t>(c)])];
          if (left != right)
            throw Error(ErrorKind::NotAGroup, name_ + ": multiplication is not associative");
        }
  }
  inverse_.assign(n, -1);
  for (elem_t g = 0; g < order_; ++g) {
    for (elem_t h = 0; h < order_; ++h) {
      if (table_[static_cast<std::size_t>(g) * n + static_cast<std::size_t>(h)] == 0) {
        inverse_[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(g)] < 0)
      throw Error(ErrorKind::NotAGroup, name_ + ": an element has no inverse");
  }
}

FiniteGroup make_trusted_group(elem_t order, std::vector<elem_t> table, std::string name) {
  return FiniteGroup(order, std::move(table), std::move(name), true);
}

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw Error(ErrorKind::NotAGroup, "cyclic group needs a positive order");
  const std::size_t n = static_cast<std::size_t>(m);
  std::vector<elem_t> table(n * n);
  for (elem_t g = 0; g < m; ++g)
    for (elem_t h = 0; h < m; ++h)
      table[static_cast<std::size_t>(g) * n + static_cast<std::size_t>(h)] =
          static_cast<elem_t>((g + h) % m);
  return make_trusted_group(m, std::move(table), "Z" + std::to_string(m));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw Error(ErrorKind::NotAGroup, "symmetric group needs n >= 1");
  auto perms = permutations_lex(n);
  auto table = permutation_table(perms);
  return make_trusted_group(static_cast<elem_t>(perms.size()), std::move(table),
                            "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 1) throw Error(ErrorKind::NotAGroup, "alternating group needs n >= 1");
  std::vector<std::vector<int>> evens;
  for (auto& p : permutations_lex(n))
    if (is_even_permutation(p)) evens.push_back(std::move(p));
  auto table = permutation_table(evens);
  return make_trusted_group(static_cast<elem_t>(evens.size()), std::move(table),
                            "A" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int m) {
  if (m < 1) throw Error(ErrorKind::NotAGroup, "dihedral group needs a positive order");
  const elem_t order = static_cast<elem_t>(2 * m);
  const std::size_t n = static_cast<std::size_t>(order);
  auto mod = [m](int x) { return static_cast<elem_t>(((x % m) + m) % m); };
  std::vector<elem_t> table(n * n);
  auto at = [&table, n](elem_t g, elem_t h) -> elem_t& {
    return table[static_cast<std::size_t>(g) * n + static_cast<std::size_t>(h)];
  };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      at(static_cast<elem_t>(a), static_cast<elem_t>(b)) = mod(a + b);              // r_a r_b
      at(static_cast<elem_t>(a), static_cast<elem_t>(m + b)) =
          static_cast<elem_t>(m + mod(a + b));                                      // r_a s_b
      at(static_cast<elem_t>(m + a), static_cast<elem_t>(b)) =
          static_cast<elem_t>(m + mod(a - b));                                      // s_a r_b
      at(static_cast<elem_t>(m + a), static_cast<elem_t>(m + b)) = mod(a - b);      // s_a s_b
    }
  }
  return make_trusted_group(order, std::move(table), "D" + std::to_string(m));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements 1, -1, i, -i, j, -j, k, -k; axis codes 0:1, 1:i, 2:j, 3:k.
  auto axis_of = [](elem_t g) { return g / 2; };
  auto sign_of = [](elem_t g) { return g % 2 == 0 ? 1 : -1; };
  auto encode = [](int axis, int sign) { return static_cast<elem_t>(axis * 2 + (sign > 0 ? 0 : 1)); };
  // product of pure axes: axb[a][b] = (axis, sign) of a*b
  static constexpr int axis_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_product[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<elem_t> table(64);
  for (elem_t g = 0; g < 8; ++g)
    for (elem_t h = 0; h < 8; ++h) {
      int axis = axis_product[axis_of(g)][axis_of(h)];
      int sign = sign_of(g) * sign_of(h) * sign_product[axis_of(g)][axis_of(h)];
      table[static_cast<std::size_t>(g) * 8 + static_cast<std::size_t>(h)] = encode(axis, sign);
    }
  return make_trusted_group(8, std::move(table), "Q8");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const elem_t order = a.order() * b.order();
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<elem_t> table(n * n);
  for (elem_t g1 = 0; g1 < a.order(); ++g1)
    for (elem_t g2 = 0; g2 < b.order(); ++g2)
      for (elem_t h1 = 0; h1 < a.order(); ++h1)
        for (elem_t h2 = 0; h2 < b.order(); ++h2) {
          elem_t g = g1 * b.order() + g2;
          elem_t h = h1 * b.order() + h2;
          table[static_cast<std::size_t>(g) * n + static_cast<std::size_t>(h)] =
              a.mul(g1, h1) * b.order() + b.mul(g2, h2);
        }
  return make_trusted_group(order, std::move(table), a.name() + "x" + b.name());
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<elem_t>>& table,
                                    std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, name + ": empty table");
  std::vector<elem_t> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::NotAGroup, name + ": table is not square");
    for (elem_t value : row) {
      if (value < 0 || value >= static_cast<elem_t>(n))
        throw Error(ErrorKind::NotAGroup, name + ": table entry out of range");
      flat.push_back(value);
    }
  }
  return FiniteGroup(static_cast<elem_t>(n), std::move(flat), std::move(name), false);
}

elem_t FiniteGroup::mul(elem_t g, elem_t h) const {
  check_element(g);
  check_element(h);
  return table_[static_cast<std::size_t>(g) * static_cast<std::size_t>(order_) +
                static_cast<std::size_t>(h)];
}

elem_t FiniteGroup::inv(elem_t g) const {
  check_element(g);
  return inverse_[static_cast<std::size_t>(g)];
}

bool FiniteGroup::abelian() const {
  const std::size_t n = static_cast<std::size_t>(order_);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = g + 1; h < n; ++h)
      if (table_[g * n + h] != table_[h * n + g]) return false;
  return true;
}

elem_t FiniteGroup::element_order(elem_t g) const {
  check_element(g);
  elem_t power = g;
  elem_t order = 1;
  while (power != 0) {
    power = mul(power, g);
    ++order;
  }
  return order;
}

void FiniteGroup::check_element(elem_t g) const {
  if (g < 0 || g >= order_)
    throw Error(ErrorKind::InvalidElement,
                name_ + ": element " + std::to_string(g) + " outside order " +
                    std::to_string(order_));
}

bool Subgroup::contains(elem_t g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::contains_all(const std::vector<elem_t>& gs) const {
  for (elem_t g : gs)
    if (!contains(g)) return false;
  return true;
}

Subgroup generated_closure(const FiniteGroup& group, const std::vector<elem_t>& generators) {
  std::set<elem_t> closed{0};
  std::vector<elem_t> frontier{0};
  for (elem_t g : generators) {
    group.mul(g, g);  // validates the element
    if (closed.insert(g).second) frontier.push_back(g);
  }
  // Multiply frontier elements against everything known until stable.
  while (!frontier.empty()) {
    std::vector<elem_t> next;
    for (elem_t f : frontier) {
      std::vector<elem_t> snapshot(closed.begin(), closed.end());
      for (elem_t x : snapshot) {
        for (elem_t product : {group.mul(f, x), group.mul(x, f)})
          if (closed.insert(product).second) next.push_back(product);
      }
    }
    frontier = std::move(next);
  }
  return Subgroup{&group, std::vector<elem_t>(closed.begin(), closed.end())};
}

namespace {

// Subgroups as bitmasks; valid because the enumeration cap is <= 64 elements.
std::uint64_t closure_mask(const FiniteGroup& group, std::uint64_t seed) {
  std::vector<elem_t> elements;
  for (elem_t g = 0; g < group.order(); ++g)
    if (seed >> g & 1) elements.push_back(g);
  std::uint64_t mask = seed | 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<elem_t> current;
    for (elem_t g = 0; g < group.order(); ++g)
      if (mask >> g & 1) current.push_back(g);
    for (elem_t a : current)
      for (elem_t b : current) {
        elem_t p = group.mul(a, b);
        if (!(mask >> p & 1)) {
          mask |= std::uint64_t{1} << p;
          grew = true;
        }
      }
  }
  return mask;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& group, int max_order) {
  // The bitmask representation bounds the cap at 64 regardless of the request.
  if (group.order() > max_order || group.order() > 64)
    throw Error(ErrorKind::GroupTooLarge,
                group.name() + ": order " + std::to_string(group.order()) +
                    " exceeds the subgroup-enumeration cap " + std::to_string(max_order));
  std::set<std::uint64_t> masks;
  // Seed with every cyclic subgroup, then close under pairwise joins.
  for (elem_t g = 0; g < group.order(); ++g)
    masks.insert(closure_mask(group, std::uint64_t{1} << g));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> current(masks.begin(), masks.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::uint64_t join = closure_mask(group, current[i] | current[j]);
        if (masks.insert(join).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    std::vector<elem_t> elements;
    for (elem_t g = 0; g < group.order(); ++g)
      if (mask >> g & 1) elements.push_back(g);
    out.push_back(Subgroup{&group, std::move(elements)});
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

namespace {

// Extends the images of a generating set to the whole group along a breadth
// first traversal, then verifies the result is an automorphism fixing the
// required images. Returns the full image table or nothing.
std::optional<std::vector<elem_t>> try_extend(const FiniteGroup& group,
                                              const std::vector<elem_t>& gens,
                                              const std::vector<elem_t>& images) {
  const std::size_t n = static_cast<std::size_t>(group.order());
  std::vector<elem_t> map(n, -1);
  map[0] = 0;
  std::vector<elem_t> queue{0};
  std::size_t head = 0;
  while (head < queue.size()) {
    elem_t x = queue[head++];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      elem_t y = group.mul(x, gens[i]);
      elem_t fy = group.mul(map[static_cast<std::size_t>(x)], images[i]);
      if (map[static_cast<std::size_t>(y)] == -1) {
        map[static_cast<std::size_t>(y)] = fy;
        queue.push_back(y);
      } else if (map[static_cast<std::size_t>(y)] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;  // gens do not generate
  std::vector<bool> hit(n, false);
  for (elem_t value : map) {
    if (hit[static_cast<std::size_t>(value)]) return std::nullopt;
    hit[static_cast<std::size_t>(value)] = true;
  }
  for (elem_t a = 0; a < group.order(); ++a)
    for (elem_t b = 0; b < group.order(); ++b)
      if (map[static_cast<std::size_t>(group.mul(a, b))] !=
          group.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return std::nullopt;
  return map;
}

std::optional<std::vector<elem_t>> search_extra_images(const FiniteGroup& group,
                                                       std::vector<elem_t>& gens,
                                                       std::vector<elem_t>& images,
                                                       std::size_t depth) {
  if (depth == gens.size()) return try_extend(group, gens, images);
  elem_t target_order = group.element_order(gens[depth]);
  for (elem_t candidate = 0; candidate < group.order(); ++candidate) {
    if (group.element_order(candidate) != target_order) continue;
    images[depth] = candidate;
    if (auto found = search_extra_images(group, gens, images, depth + 1)) return found;
  }
  images[depth] = -1;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<elem_t>> automorphism_search(const FiniteGroup& group,
                                                       const std::vector<elem_t>& src,
                                                       const std::vector<elem_t>& dst,
                                                       int max_order) {
  if (src.size() != dst.size())
    throw Error(ErrorKind::TupleArityMismatch, "source and destination tuples differ in length");
  if (group.order() > max_order)
    throw Error(ErrorKind::GroupTooLarge,
                group.name() + ": order " + std::to_string(group.order()) +
                    " exceeds the automorphism-search cap " + std::to_string(max_order));
  for (std::size_t i = 0; i < src.size(); ++i) {
    group.mul(src[i], src[i]);
    group.mul(dst[i], dst[i]);
    if (group.element_order(src[i]) != group.element_order(dst[i])) return std::nullopt;
  }
  // An automorphism maps <src> onto <dst>; sizes must already agree.
  if (generated_closure(group, src).order() != generated_closure(group, dst).order())
    return std::nullopt;

  std::vector<elem_t> gens(src.begin(), src.end());
  std::vector<elem_t> images(dst.begin(), dst.end());
  Subgroup span = generated_closure(group, gens);
  while (span.order() < group.order()) {
    elem_t extra = 0;
    while (span.contains(extra)) ++extra;
    gens.push_back(extra);
    images.push_back(-1);
    span = generated_closure(group, gens);
  }
  auto result = search_extra_images(group, gens, images, src.size());
  if (!result) return std::nullopt;
  for (std::size_t i = 0; i < src.size(); ++i)
    if ((*result)[static_cast<std::size_t>(src[i])] != dst[i]) return std::nullopt;
  return result;
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {"Z1", "Z2", "Z3",    "Z4",    "Z5", "Z6",
                                               "Z7", "Z8", "Z2xZ2", "Z2xZ4", "S3", "D4",
                                               "D5", "Q8", "A4",    "S4"};
  return ids;
}

const FiniteGroup& catalog_group(const std::string& id) {
  static const std::map<std::string, FiniteGroup> groups = [] {
    std::map<std::string, FiniteGroup> out;
    for (int m = 1; m <= 8; ++m) out.emplace("Z" + std::to_string(m), FiniteGroup::cyclic(m));
    out.emplace("Z2xZ2", FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    out.emplace("Z2xZ4", FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
    out.emplace("S3", FiniteGroup::symmetric(3));
    out.emplace("D4", FiniteGroup::dihedral(4));
    out.emplace("D5", FiniteGroup::dihedral(5));
    out.emplace("Q8", FiniteGroup::quaternion8());
    out.emplace("A4", FiniteGroup::alternating(4));
    out.emplace("S4", FiniteGroup::symmetric(4));
    return out;
  }();
  auto it = groups.find(id);
  if (it == groups.end())
    throw Error(ErrorKind::Parse, "unknown group id '" + id + "'");
  return it->second;
}

}  // namespace fgtk
