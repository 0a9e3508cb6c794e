#include "fgtk/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace fgtk {

namespace {

void check_rank(std::int32_t rank) {
  if (rank < 1) throw Error(ErrorKind::InvalidLetter, "rank must be at least 1");
}

void check_letter(std::int32_t letter, std::int32_t rank) {
  if (letter == 0 || std::abs(letter) > rank)
    throw Error(ErrorKind::InvalidLetter,
                "letter " + std::to_string(letter) + " outside rank " + std::to_string(rank));
}

void require_same_rank(std::int32_t a, std::int32_t b) {
  if (a != b)
    throw Error(ErrorKind::RankMismatch,
                "ranks " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

// Appends a letter to an already-reduced prefix, cancelling if possible.
void push_reduced(std::vector<std::int32_t>& letters, std::int32_t letter) {
  if (!letters.empty() && letters.back() == -letter)
    letters.pop_back();
  else
    letters.push_back(letter);
}

}  // namespace

Word::Word(std::int32_t rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(std::vector<std::int32_t> letters, std::int32_t rank) {
  check_rank(rank);
  for (std::int32_t letter : letters) check_letter(letter, rank);
  std::vector<std::int32_t> reduced;
  reduced.reserve(letters.size());
  for (std::int32_t letter : letters) push_reduced(reduced, letter);
  return Word(rank, std::move(reduced));
}

Word Word::from_letter(std::int32_t letter, std::int32_t rank) {
  check_rank(rank);
  check_letter(letter, rank);
  return Word(rank, {letter});
}

Word Word::parse(std::string_view text, std::int32_t rank) {
  check_rank(rank);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty word text; use \"1\" for the identity");
  if (text == "1") return Word(rank);
  std::vector<std::int32_t> letters;
  letters.reserve(text.size());
  for (char c : text) {
    std::int32_t letter;
    if (c >= 'a' && c <= 'z')
      letter = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      letter = -(c - 'A' + 1);
    else
      throw Error(ErrorKind::Parse, std::string("unexpected character '") + c + "' in word text");
    check_letter(letter, rank);
    letters.push_back(letter);
  }
  return reduce(std::move(letters), rank);
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty word text; use \"1\" for the identity");
  std::int32_t rank = 1;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') rank = std::max(rank, c - 'a' + 1);
    if (c >= 'A' && c <= 'Z') rank = std::max(rank, c - 'A' + 1);
  }
  return parse(text, rank);
}

Word Word::inverse() const {
  std::vector<std::int32_t> letters(letters_.rbegin(), letters_.rend());
  for (std::int32_t& letter : letters) letter = -letter;
  return Word(rank_, std::move(letters));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (std::int32_t letter : letters_) {
    if (letter > 0)
      out.push_back(static_cast<char>('a' + letter - 1));
    else
      out.push_back(static_cast<char>('A' - letter - 1));
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  require_same_rank(a.rank(), b.rank());
  std::vector<std::int32_t> letters = a.letters();
  letters.reserve(letters.size() + b.size());
  for (std::int32_t letter : b.letters()) push_reduced(letters, letter);
  return Word::reduce(std::move(letters), a.rank());
}

CyclicForm cyclically_reduce(const Word& w) {
  const auto& letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  Word conjugator = Word::reduce(
      std::vector<std::int32_t>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo)),
      w.rank());
  Word core = Word::reduce(std::vector<std::int32_t>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                                     letters.begin() + static_cast<std::ptrdiff_t>(hi)),
                           w.rank());
  return CyclicForm{std::move(core), std::move(conjugator)};
}

std::vector<std::int64_t> abelianization(const Word& w) {
  std::vector<std::int64_t> exponents(static_cast<std::size_t>(w.rank()), 0);
  for (std::int32_t letter : w.letters()) {
    if (letter > 0)
      ++exponents[static_cast<std::size_t>(letter - 1)];
    else
      --exponents[static_cast<std::size_t>(-letter - 1)];
  }
  return exponents;
}

WordTuple::WordTuple(std::vector<Word> words_in, std::int32_t rank_in)
    : words(std::move(words_in)), rank(rank_in) {
  check_rank(rank);
  for (const Word& w : words) require_same_rank(w.rank(), rank);
}

WordTuple WordTuple::of(std::vector<Word> words) {
  if (words.empty())
    throw Error(ErrorKind::RankMismatch, "cannot infer a rank from an empty tuple");
  std::int32_t rank = words.front().rank();
  return WordTuple(std::move(words), rank);
}

std::size_t WordTuple::total_length() const {
  std::size_t total = 0;
  for (const Word& w : words) total += w.size();
  return total;
}

WordTuple parse_tuple(const std::vector<std::string>& texts, std::int32_t rank) {
  if (texts.empty()) throw Error(ErrorKind::Parse, "empty tuple");
  if (rank == 0) {
    for (const std::string& text : texts) rank = std::max(rank, Word::parse(text).rank());
    rank = std::max(rank, 1);
  }
  std::vector<Word> words;
  words.reserve(texts.size());
  for (const std::string& text : texts) words.push_back(Word::parse(text, rank));
  return WordTuple(std::move(words), rank);
}

Endomorphism::Endomorphism(std::vector<Word> images)
    : rank_(static_cast<std::int32_t>(images.size())), images_(std::move(images)) {
  check_rank(rank_);
  for (const Word& w : images_) require_same_rank(w.rank(), rank_);
}

Endomorphism Endomorphism::identity(std::int32_t rank) {
  check_rank(rank);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (std::int32_t i = 1; i <= rank; ++i) images.push_back(Word::from_letter(i, rank));
  return Endomorphism(std::move(images));
}

Endomorphism Endomorphism::inner(const Word& u) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(u.rank()));
  for (std::int32_t i = 1; i <= u.rank(); ++i)
    images.push_back(concat(concat(u, Word::from_letter(i, u.rank())), u.inverse()));
  return Endomorphism(std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
  require_same_rank(w.rank(), rank_);
  std::vector<std::int32_t> letters;
  for (std::int32_t letter : w.letters()) {
    const Word& image = images_[static_cast<std::size_t>(std::abs(letter) - 1)];
    if (letter > 0) {
      for (std::int32_t l : image.letters()) push_reduced(letters, l);
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it)
        push_reduced(letters, -*it);
    }
  }
  return Word::reduce(std::move(letters), rank_);
}

WordTuple Endomorphism::apply(const WordTuple& tuple) const {
  require_same_rank(tuple.rank, rank_);
  std::vector<Word> words;
  words.reserve(tuple.words.size());
  for (const Word& w : tuple.words) words.push_back(apply(w));
  return WordTuple(std::move(words), rank_);
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  require_same_rank(outer.rank(), inner.rank());
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const Word& w : inner.images()) images.push_back(outer.apply(w));
  return Endomorphism(std::move(images));
}

}  // namespace fgtk
