#include "gk/freeword.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace gk {

int generator_count(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("rank must be in 1.." + std::to_string(kMaxRank) +
                                ", got " + std::to_string(rank));
  }
  return rank + 1;
}

Word identity_word(int rank) {
  generator_count(rank);
  return Word{rank, {}};
}

Word reduce(int rank, std::span<const int> raw) {
  const int n = generator_count(rank);
  Word out{rank, {}};
  out.letters.reserve(raw.size());
  for (int g : raw) {
    if (g < 1 || g > n) {
      throw std::invalid_argument("generator index " + std::to_string(g) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (!out.letters.empty() && out.letters.back() == g) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(g);
    }
  }
  return out;
}

void append_reduced(std::vector<int>& buffer, std::span<const int> tail) {
  for (int g : tail) {
    if (!buffer.empty() && buffer.back() == g) {
      buffer.pop_back();
    } else {
      buffer.push_back(g);
    }
  }
}

Word multiply(const Word& x, const Word& y) {
  if (x.rank != y.rank) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(x.rank) +
                                " vs " + std::to_string(y.rank));
  }
  Word out{x.rank, x.letters};
  out.letters.reserve(x.letters.size() + y.letters.size());
  append_reduced(out.letters, y.letters);
  return out;
}

Word inverse(const Word& x) {
  Word out{x.rank, {x.letters.rbegin(), x.letters.rend()}};
  return out;
}

int length(const Word& x) { return static_cast<int>(x.letters.size()); }

int letter_count(const Word& x, int generator) {
  if (generator < 1 || generator > generator_count(x.rank)) {
    throw std::invalid_argument("generator index out of range");
  }
  int count = 0;
  for (int g : x.letters) count += (g == generator);
  return count;
}

WordStream::WordStream(int rank, int max_len) : rank_(rank), max_len_(max_len) {
  generator_count(rank);
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
}

bool WordStream::advance() {
  const int n = rank_ + 1;
  // Next word of the same length in lex order, keeping letters reduced.
  for (int i = static_cast<int>(cur_.size()) - 1; i >= 0; --i) {
    for (int v = cur_[i] + 1; v <= n; ++v) {
      if (i > 0 && cur_[i - 1] == v) continue;
      cur_[i] = v;
      for (std::size_t j = i + 1; j < cur_.size(); ++j) {
        cur_[j] = (cur_[j - 1] == 1) ? 2 : 1;
      }
      return true;
    }
  }
  // Exhausted this length; start the smallest word of the next length.
  const auto len = static_cast<int>(cur_.size()) + 1;
  if (len > max_len_) return false;
  cur_.assign(len, 1);
  for (int j = 1; j < len; ++j) cur_[j] = (cur_[j - 1] == 1) ? 2 : 1;
  return true;
}

bool WordStream::next(Word& out) {
  if (!started_) {
    started_ = true;
    cur_.clear();
  } else if (!advance()) {
    return false;
  }
  out.rank = rank_;
  out.letters = cur_;
  return true;
}

std::vector<Word> all_words(int rank, int max_len) {
  std::vector<Word> out;
  out.reserve(reduced_word_count(rank, max_len));
  WordStream stream(rank, max_len);
  Word w;
  while (stream.next(w)) out.push_back(w);
  return out;
}

std::uint64_t reduced_word_count(int rank, int max_len) {
  generator_count(rank);
  const auto k = static_cast<unsigned __int128>(rank);
  unsigned __int128 total = 1;
  unsigned __int128 level = k + 1;  // (k+1) * k^(n-1) words of length n
  for (int n = 1; n <= max_len; ++n) {
    total += level;
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("reduced_word_count overflows uint64");
    }
    level *= k;
  }
  return static_cast<std::uint64_t>(total);
}

Word parse_word(int rank, std::string_view text) {
  std::vector<int> raw;
  std::istringstream in{std::string(text)};
  int value = 0;
  while (in >> value) raw.push_back(value);
  if (!in.eof()) throw std::invalid_argument("malformed word text: " + std::string(text));
  return reduce(rank, raw);
}

std::string format_word(const Word& x) {
  std::string out;
  for (std::size_t i = 0; i < x.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(x.letters[i]);
  }
  return out;
}

}  // namespace gk
