#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

// Reduced-word arithmetic in the rank-k group generated by k+1 involutions
// a_1..a_{k+1} (free product of k+1 cyclic groups of order 2).  A word is
// reduced exactly when no two adjacent letters are equal; the empty word is
// the identity.  Words are always stored reduced.

inline constexpr int kMaxRank = 31;  // generator indices must fit a 32-bit mask

// Number of generators (k+1) for ambient rank k; validates 1 <= k <= kMaxRank.
int generator_count(int rank);

struct Word {
  int rank = 1;              // ambient rank k; letters range over 1..k+1
  std::vector<int> letters;  // fully reduced, 1-based generator indices

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

Word identity_word(int rank);

// Applies a_i a_i = e transitively (stack discipline); idempotent.
Word reduce(int rank, std::span<const int> raw);

// reduce(concat(x, y)); both inputs being reduced, cancellation can only
// happen at the junction.
Word multiply(const Word& x, const Word& y);

// Each generator is its own inverse, so inversion just reverses the letters.
Word inverse(const Word& x);

int length(const Word& x);

// Occurrences of a_i in the reduced representation (w_x(a_i)).
int letter_count(const Word& x, int generator);

// In-place variant of multiply for hot loops: `buffer` holds a reduced word,
// `tail` is appended with junction cancellation.
void append_reduced(std::vector<int>& buffer, std::span<const int> tail);

// Streams every reduced word of length <= max_len exactly once, in
// length-then-lexicographic order, starting with the identity.
class WordStream {
 public:
  WordStream(int rank, int max_len);
  bool next(Word& out);

 private:
  bool advance();

  int rank_;
  int max_len_;
  bool started_ = false;
  std::vector<int> cur_;
};

std::vector<Word> all_words(int rank, int max_len);

// 1 + sum_{n=1..max_len} (k+1) * k^(n-1); throws on uint64 overflow.
std::uint64_t reduced_word_count(int rank, int max_len);

// Text format: whitespace-separated 1-based indices; empty string = identity.
Word parse_word(int rank, std::string_view text);
std::string format_word(const Word& x);

}  // namespace gk
