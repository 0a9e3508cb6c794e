#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fgtk/error.hpp"

namespace fgtk {

/// Freely reduced word in a free group of a fixed rank. Letters are nonzero
/// signed integers: +i is the i-th generator, -i its inverse. Instances are
/// immutable values and always reduced.
class Word {
 public:
  /// Empty word of the given ambient rank (rank >= 1).
  explicit Word(std::int32_t rank);

  /// Reduces a raw letter sequence. Throws InvalidLetter if a letter is zero
  /// or exceeds the rank in absolute value.
  static Word reduce(std::vector<std::int32_t> letters, std::int32_t rank);

  static Word from_letter(std::int32_t letter, std::int32_t rank);

  /// Text form: lowercase a..z are generators 1..26, uppercase their
  /// inverses, "1" is the empty word. Input is reduced after parsing.
  static Word parse(std::string_view text, std::int32_t rank);

  /// Same grammar with the rank inferred as the largest generator used
  /// (rank 1 for the empty word).
  static Word parse(std::string_view text);

  std::int32_t rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<std::int32_t>& letters() const { return letters_; }

  Word inverse() const;

  /// Inverse of parse; only defined for ranks representable in text (<= 26).
  std::string str() const;

  auto operator<=>(const Word&) const = default;

 private:
  Word(std::int32_t rank, std::vector<std::int32_t> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  std::int32_t rank_;
  std::vector<std::int32_t> letters_;
};

/// Reduced concatenation. Both arguments must share a rank.
Word concat(const Word& a, const Word& b);

struct CyclicForm {
  Word core;        // cyclically reduced
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

CyclicForm cyclically_reduce(const Word& w);

/// Exponent-sum vector of length rank().
std::vector<std::int64_t> abelianization(const Word& w);

/// Ordered tuple of words sharing one ambient rank.
struct WordTuple {
  std::vector<Word> words;
  std::int32_t rank;

  WordTuple(std::vector<Word> words, std::int32_t rank);

  /// Infers the rank from the words; the tuple must be nonempty.
  static WordTuple of(std::vector<Word> words);

  std::size_t arity() const { return words.size(); }
  std::size_t total_length() const;

  auto operator<=>(const WordTuple&) const = default;
};

/// Parses a list of word strings into a tuple with a common rank. With
/// rank == 0 the rank is inferred as the largest generator used overall.
WordTuple parse_tuple(const std::vector<std::string>& texts, std::int32_t rank = 0);

/// Endomorphism of a free group, given by the images of the generators.
/// All images share the ambient rank, which equals the number of images.
class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images);

  static Endomorphism identity(std::int32_t rank);

  /// x |-> u x u^-1 for every generator x.
  static Endomorphism inner(const Word& u);

  std::int32_t rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;
  WordTuple apply(const WordTuple& tuple) const;

  auto operator<=>(const Endomorphism&) const = default;

 private:
  std::int32_t rank_;
  std::vector<Word> images_;
};

/// compose(outer, inner).apply(w) == outer.apply(inner.apply(w)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

}  // namespace fgtk
