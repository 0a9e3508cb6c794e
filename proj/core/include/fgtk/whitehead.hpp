#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgtk/word.hpp"

namespace fgtk {

/// Generator of the automorphism group of a free group, in two families:
/// signed permutations of the generators, and multiplier moves that compose
/// each generator with a fixed letter.
struct WhiteheadMove {
  enum class Kind { SignedPermutation, Multiplier };
  enum class Action : std::uint8_t {
    Fix,                    // x -> x
    MultiplyLeft,           // x -> m x
    MultiplyRightInverse,   // x -> x m^-1
    Conjugate,              // x -> m x m^-1
  };

  Kind kind = Kind::SignedPermutation;
  std::int32_t rank = 1;
  std::vector<std::int32_t> perm;  // SignedPermutation: image letter per generator
  std::int32_t multiplier = 0;     // Multiplier: signed letter m
  std::vector<Action> actions;     // Multiplier: per generator; Fix at |m|

  Endomorphism to_endomorphism() const;
  WhiteheadMove inverse() const;
  std::string describe() const;
};

/// All moves for the given rank in a fixed deterministic order: the 2^n n!
/// signed permutations first, then every nontrivial multiplier move. Throws
/// RankTooLarge for rank > 4.
std::vector<WhiteheadMove> whitehead_moves(std::int32_t rank);

/// Greedy length reduction: repeatedly applies the first move that strictly
/// decreases the total length until none does. Single words are measured and
/// returned cyclically reduced; tuples of arity >= 2 use plain reduced
/// length. Rank must be <= 3.
struct MinimizeResult {
  WordTuple minimized;
  std::vector<WhiteheadMove> moves;
};
MinimizeResult whitehead_minimize(const WordTuple& tuple);

enum class OrbitStatus { Same, Different, Unknown };

struct OrbitVerdict {
  OrbitStatus status = OrbitStatus::Unknown;
  std::optional<Endomorphism> witness;     // Same: maps the left tuple exactly to the right
  std::vector<WhiteheadMove> witness_moves;
  std::string certificate;                 // reason for Different / Unknown
  std::uint64_t nodes_explored = 0;
};

/// Decides whether two tuples lie in one automorphism orbit: abelianized
/// images are compared first (an exact invariant), both tuples are
/// minimized, and tuples of equal minimal length are connected by a
/// breadth-first search over length-preserving moves. The search is
/// exhaustive for single words; for arity >= 2 an exhausted level set is
/// reported as Unknown, and hitting the node cap is always Unknown.
OrbitVerdict same_orbit(const WordTuple& left, const WordTuple& right,
                        std::uint64_t node_cap = 1'000'000);

}  // namespace fgtk
