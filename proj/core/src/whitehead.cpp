#include "fgtk/whitehead.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fgtk {

namespace {

void check_rank_supported(std::int32_t rank, std::int32_t cap, const char* what) {
  if (rank < 1) throw Error(ErrorKind::InvalidLetter, "rank must be at least 1");
  if (rank > cap)
    throw Error(ErrorKind::RankTooLarge, std::string(what) + " supports rank <= " +
                                             std::to_string(cap) + ", got " +
                                             std::to_string(rank));
}

Word letter_word(std::int32_t letter, std::int32_t rank) {
  return Word::from_letter(letter, rank);
}

}  // namespace

Endomorphism WhiteheadMove::to_endomorphism() const {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  if (kind == Kind::SignedPermutation) {
    for (std::int32_t i = 0; i < rank; ++i)
      images.push_back(letter_word(perm[static_cast<std::size_t>(i)], rank));
  } else {
    Word m = letter_word(multiplier, rank);
    for (std::int32_t i = 0; i < rank; ++i) {
      Word x = letter_word(i + 1, rank);
      switch (actions[static_cast<std::size_t>(i)]) {
        case Action::Fix: images.push_back(x); break;
        case Action::MultiplyLeft: images.push_back(concat(m, x)); break;
        case Action::MultiplyRightInverse: images.push_back(concat(x, m.inverse())); break;
        case Action::Conjugate: images.push_back(concat(concat(m, x), m.inverse())); break;
      }
    }
  }
  return Endomorphism(std::move(images));
}

WhiteheadMove WhiteheadMove::inverse() const {
  WhiteheadMove inv = *this;
  if (kind == Kind::SignedPermutation) {
    for (std::int32_t i = 0; i < rank; ++i) {
      std::int32_t image = perm[static_cast<std::size_t>(i)];
      std::int32_t j = std::abs(image);
      inv.perm[static_cast<std::size_t>(j - 1)] = image > 0 ? i + 1 : -(i + 1);
    }
  } else {
    inv.multiplier = -multiplier;
  }
  return inv;
}

std::string WhiteheadMove::describe() const {
  std::ostringstream out;
  if (kind == Kind::SignedPermutation) {
    out << "perm[";
    for (std::int32_t i = 0; i < rank; ++i) {
      if (i > 0) out << " ";
      out << letter_word(i + 1, rank).str() << "->"
          << letter_word(perm[static_cast<std::size_t>(i)], rank).str();
    }
    out << "]";
  } else {
    out << "mult[m=" << letter_word(multiplier, rank).str() << ";";
    for (std::int32_t i = 0; i < rank; ++i) {
      if (i > 0) out << ",";
      out << letter_word(i + 1, rank).str() << ":";
      switch (actions[static_cast<std::size_t>(i)]) {
        case Action::Fix: out << "fix"; break;
        case Action::MultiplyLeft: out << "left"; break;
        case Action::MultiplyRightInverse: out << "right-inv"; break;
        case Action::Conjugate: out << "conj"; break;
      }
    }
    out << "]";
  }
  return out.str();
}

std::vector<WhiteheadMove> whitehead_moves(std::int32_t rank) {
  check_rank_supported(rank, 4, "the move family");
  std::vector<WhiteheadMove> moves;

  // Signed permutations: permutations in lexicographic order, then sign
  // patterns in binary counting order (bit i negates generator i+1).
  std::vector<std::int32_t> permutation(static_cast<std::size_t>(rank));
  std::iota(permutation.begin(), permutation.end(), 1);
  do {
    for (std::uint32_t signs = 0; signs < (1u << rank); ++signs) {
      WhiteheadMove move;
      move.kind = WhiteheadMove::Kind::SignedPermutation;
      move.rank = rank;
      move.perm.resize(static_cast<std::size_t>(rank));
      for (std::int32_t i = 0; i < rank; ++i)
        move.perm[static_cast<std::size_t>(i)] =
            (signs >> i & 1) ? -permutation[static_cast<std::size_t>(i)]
                             : permutation[static_cast<std::size_t>(i)];
      moves.push_back(std::move(move));
    }
  } while (std::next_permutation(permutation.begin(), permutation.end()));

  // Multiplier moves: for each signed letter m, all action tuples except
  // all-Fix; the generator |m| itself is always fixed.
  std::uint64_t action_patterns = 1;
  for (std::int32_t i = 1; i < rank; ++i) action_patterns *= 4;
  for (std::int32_t base = 1; base <= rank; ++base) {
    for (std::int32_t m : {base, -base}) {
      for (std::uint64_t pattern = 1; pattern < action_patterns; ++pattern) {
        WhiteheadMove move;
        move.kind = WhiteheadMove::Kind::Multiplier;
        move.rank = rank;
        move.multiplier = m;
        move.actions.assign(static_cast<std::size_t>(rank), WhiteheadMove::Action::Fix);
        std::uint64_t digits = pattern;
        for (std::int32_t i = 0; i < rank; ++i) {
          if (i + 1 == base) continue;  // the multiplier's own generator stays fixed
          move.actions[static_cast<std::size_t>(i)] =
              static_cast<WhiteheadMove::Action>(digits % 4);
          digits /= 4;
        }
        moves.push_back(std::move(move));
      }
    }
  }
  return moves;
}

namespace {

// Metric minimized by the greedy pass and preserved by the level-set search:
// cyclic length for a single word, plain total length for larger tuples.
std::size_t orbit_length(const WordTuple& tuple) {
  if (tuple.arity() == 1) return cyclically_reduce(tuple.words[0]).core.size();
  return tuple.total_length();
}

// Least rotation of a cyclically reduced word, the canonical conjugacy
// representative used as a search node.
Word canonical_rotation(const Word& core) {
  const auto& letters = core.letters();
  if (letters.size() <= 1) return core;
  std::vector<std::int32_t> best = letters;
  std::vector<std::int32_t> rotation = letters;
  for (std::size_t shift = 1; shift < letters.size(); ++shift) {
    std::rotate(rotation.begin(), rotation.begin() + 1, rotation.end());
    if (rotation < best) best = rotation;
  }
  return Word::reduce(best, core.rank());
}

WordTuple search_node(const WordTuple& tuple) {
  if (tuple.arity() != 1) return tuple;
  return WordTuple({canonical_rotation(cyclically_reduce(tuple.words[0]).core)}, tuple.rank);
}

std::vector<std::vector<std::int32_t>> node_key(const WordTuple& tuple) {
  std::vector<std::vector<std::int32_t>> key;
  key.reserve(tuple.words.size());
  for (const Word& w : tuple.words) key.push_back(w.letters());
  return key;
}

// Canonical form of the abelianized tuple under the right action of the
// integral linear automorphism group: the column-style Hermite normal form,
// computed as the row form of the transpose. Positive pivots with reduced
// entries above make the form unique, so equality is an exact test.
std::vector<std::vector<std::int64_t>> abelian_normal_form(const WordTuple& tuple) {
  const std::size_t n = static_cast<std::size_t>(tuple.rank);
  const std::size_t k = tuple.words.size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    auto exponents = abelianization(tuple.words[j]);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = exponents[i];
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k && pivot_row < n; ++col) {
    // Euclidean elimination below the pivot row.
    while (true) {
      std::size_t smallest = n;
      for (std::size_t row = pivot_row; row < n; ++row)
        if (m[row][col] != 0 &&
            (smallest == n || std::abs(m[row][col]) < std::abs(m[smallest][col])))
          smallest = row;
      if (smallest == n) break;  // column is zero from pivot_row down
      std::swap(m[pivot_row], m[smallest]);
      bool cleared = true;
      for (std::size_t row = pivot_row + 1; row < n; ++row) {
        if (m[row][col] == 0) continue;
        std::int64_t q = m[row][col] / m[pivot_row][col];
        for (std::size_t j = 0; j < k; ++j) m[row][j] -= q * m[pivot_row][j];
        if (m[row][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[pivot_row][col] == 0) continue;
    if (m[pivot_row][col] < 0)
      for (std::size_t j = 0; j < k; ++j) m[pivot_row][j] = -m[pivot_row][j];
    for (std::size_t row = 0; row < pivot_row; ++row) {
      std::int64_t q = m[row][col] / m[pivot_row][col];
      if (m[row][col] % m[pivot_row][col] < 0) --q;  // floor division
      if (q != 0)
        for (std::size_t j = 0; j < k; ++j) m[row][j] -= q * m[pivot_row][j];
    }
    ++pivot_row;
  }
  return m;
}

WhiteheadMove inner_letter_move(std::int32_t letter, std::int32_t rank) {
  WhiteheadMove move;
  move.kind = WhiteheadMove::Kind::Multiplier;
  move.rank = rank;
  move.multiplier = letter;
  move.actions.assign(static_cast<std::size_t>(rank), WhiteheadMove::Action::Conjugate);
  move.actions[static_cast<std::size_t>(std::abs(letter) - 1)] = WhiteheadMove::Action::Fix;
  return move;
}

Endomorphism fold_moves(const std::vector<WhiteheadMove>& moves, std::int32_t rank) {
  Endomorphism e = Endomorphism::identity(rank);
  for (const WhiteheadMove& m : moves) e = compose(m.to_endomorphism(), e);
  return e;
}

}  // namespace

MinimizeResult whitehead_minimize(const WordTuple& tuple) {
  check_rank_supported(tuple.rank, 3, "length minimization");
  std::vector<WhiteheadMove> moves = whitehead_moves(tuple.rank);
  std::vector<Endomorphism> endos;
  endos.reserve(moves.size());
  for (const WhiteheadMove& m : moves) endos.push_back(m.to_endomorphism());

  WordTuple current = tuple;
  std::vector<WhiteheadMove> applied;
  bool improved = true;
  while (improved) {
    improved = false;
    std::size_t length = orbit_length(current);
    for (std::size_t i = 0; i < moves.size(); ++i) {
      WordTuple candidate = endos[i].apply(current);
      if (orbit_length(candidate) < length) {
        current = std::move(candidate);
        applied.push_back(moves[i]);
        improved = true;
        break;
      }
    }
  }
  if (current.arity() == 1)
    current = WordTuple({cyclically_reduce(current.words[0]).core}, current.rank);
  return MinimizeResult{std::move(current), std::move(applied)};
}

OrbitVerdict same_orbit(const WordTuple& left, const WordTuple& right, std::uint64_t node_cap) {
  if (left.arity() != right.arity())
    throw Error(ErrorKind::TupleArityMismatch, "tuples have different arities");
  if (left.rank != right.rank)
    throw Error(ErrorKind::RankMismatch, "tuples have different ambient ranks");
  check_rank_supported(left.rank, 3, "orbit search");
  const std::int32_t rank = left.rank;
  const bool single_word = left.arity() == 1;

  OrbitVerdict verdict;
  if (left == right) {
    verdict.status = OrbitStatus::Same;
    verdict.witness = Endomorphism::identity(rank);
    verdict.certificate = "identical tuples";
    return verdict;
  }

  if (abelian_normal_form(left) != abelian_normal_form(right)) {
    verdict.status = OrbitStatus::Different;
    verdict.certificate =
        "abelianized images are inequivalent under the integral linear action";
    return verdict;
  }

  MinimizeResult min_left = whitehead_minimize(left);
  MinimizeResult min_right = whitehead_minimize(right);
  std::size_t length = orbit_length(min_left.minimized);
  if (length != orbit_length(min_right.minimized)) {
    verdict.status = OrbitStatus::Different;
    verdict.certificate = "minimal lengths differ: " + std::to_string(length) + " vs " +
                          std::to_string(orbit_length(min_right.minimized));
    return verdict;
  }

  std::vector<WhiteheadMove> moves = whitehead_moves(rank);
  std::vector<Endomorphism> endos;
  endos.reserve(moves.size());
  for (const WhiteheadMove& m : moves) endos.push_back(m.to_endomorphism());

  struct NodeRecord {
    WordTuple tuple;
    std::int64_t parent;
    std::size_t move_index;
  };
  WordTuple start = search_node(min_left.minimized);
  WordTuple target = search_node(min_right.minimized);
  std::vector<NodeRecord> nodes{{start, -1, 0}};
  std::map<std::vector<std::vector<std::int32_t>>, std::size_t> visited{{node_key(start), 0}};

  std::optional<std::size_t> found;
  if (start == target) found = 0;
  std::size_t head = 0;
  while (!found && head < nodes.size()) {
    std::size_t current = head++;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      WordTuple child = search_node(endos[i].apply(nodes[current].tuple));
      if (orbit_length(child) != length) continue;
      auto key = node_key(child);
      if (visited.count(key)) continue;
      if (nodes.size() + 1 > node_cap) {
        verdict.status = OrbitStatus::Unknown;
        verdict.certificate =
            "node cap of " + std::to_string(node_cap) + " exceeded during the level-set search";
        verdict.nodes_explored = nodes.size();
        return verdict;
      }
      visited.emplace(std::move(key), nodes.size());
      nodes.push_back(NodeRecord{child, static_cast<std::int64_t>(current), i});
      if (child == target) {
        found = nodes.size() - 1;
        break;
      }
    }
  }
  verdict.nodes_explored = nodes.size();

  if (!found) {
    if (single_word) {
      verdict.status = OrbitStatus::Different;
      verdict.certificate = "minimal level set exhausted (" + std::to_string(nodes.size()) +
                            " nodes); the search is complete for single words";
    } else {
      verdict.status = OrbitStatus::Unknown;
      verdict.certificate = "level set exhausted (" + std::to_string(nodes.size()) +
                            " nodes); completeness for ordered tuples is not established";
    }
    return verdict;
  }

  // Witness: the moves that minimized the left tuple, then the search path,
  // then the inverted minimization of the right tuple, first applied first.
  std::vector<WhiteheadMove> witness_moves = min_left.moves;
  std::vector<std::size_t> path;
  for (std::int64_t at = static_cast<std::int64_t>(*found); nodes[static_cast<std::size_t>(at)].parent >= 0;
       at = nodes[static_cast<std::size_t>(at)].parent)
    path.push_back(nodes[static_cast<std::size_t>(at)].move_index);
  for (auto it = path.rbegin(); it != path.rend(); ++it) witness_moves.push_back(moves[*it]);
  for (auto it = min_right.moves.rbegin(); it != min_right.moves.rend(); ++it)
    witness_moves.push_back(it->inverse());

  Endomorphism witness = fold_moves(witness_moves, rank);
  if (single_word && witness.apply(left) != right) {
    // The chain tracked conjugacy classes; align the exact words with an
    // inner automorphism u (image of left) u^-1 == right.
    Word image = witness.apply(left.words[0]);
    CyclicForm image_form = cyclically_reduce(image);
    CyclicForm right_form = cyclically_reduce(right.words[0]);
    if (image_form.core.size() != right_form.core.size())
      throw std::logic_error("orbit witness: conjugacy alignment failed");
    std::optional<Word> conjugator;
    std::vector<std::int32_t> rotation = image_form.core.letters();
    for (std::size_t shift = 0; shift < std::max<std::size_t>(rotation.size(), 1); ++shift) {
      if (rotation == right_form.core.letters()) {
        // rot_shift(core) = prefix^-1 core prefix, with prefix the consumed part
        Word prefix = Word::reduce(
            std::vector<std::int32_t>(image_form.core.letters().begin(),
                                      image_form.core.letters().begin() +
                                          static_cast<std::ptrdiff_t>(shift)),
            rank);
        conjugator =
            concat(concat(right_form.conjugator, prefix.inverse()),
                   image_form.conjugator.inverse());
        break;
      }
      if (!rotation.empty())
        std::rotate(rotation.begin(), rotation.begin() + 1, rotation.end());
    }
    if (!conjugator) throw std::logic_error("orbit witness: no aligning rotation exists");
    const auto& letters = conjugator->letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      witness_moves.push_back(inner_letter_move(*it, rank));
    witness = fold_moves(witness_moves, rank);
  }
  if (witness.apply(left) != right)
    throw std::logic_error("orbit witness verification failed");

  verdict.status = OrbitStatus::Same;
  verdict.witness = std::move(witness);
  verdict.witness_moves = std::move(witness_moves);
  verdict.certificate = "connected by " + std::to_string(path.size()) + " level move" +
                        (path.size() == 1 ? "" : "s");
  return verdict;
}

}  // namespace fgtk
