#include "gk/parity.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gk {

SubsetMask full_mask(int rank) {
  const int n = generator_count(rank);
  return (n == 32) ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1);
}

std::vector<int> mask_indices(SubsetMask a) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (a & (SubsetMask{1} << i)) out.push_back(i + 1);
  }
  return out;
}

SubsetMask mask_from_indices(int rank, std::span<const int> indices) {
  const int n = generator_count(rank);
  SubsetMask a = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("subset index " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(n));
    }
    a |= SubsetMask{1} << (i - 1);
  }
  return a;
}

SubsetMask parse_mask(int rank, std::string_view text) {
  std::vector<int> indices;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    indices.push_back(std::stoi(token));
  }
  return mask_from_indices(rank, indices);
}

std::string format_mask(SubsetMask a) {
  std::string out;
  for (int i : mask_indices(a)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

void validate_family(int rank, const SubsetFamily& f) {
  const SubsetMask full = full_mask(rank);
  for (std::size_t i = 0; i < f.masks.size(); ++i) {
    if (f.masks[i] == 0) throw std::invalid_argument("empty subset mask rejected");
    if (f.masks[i] & ~full) throw std::invalid_argument("mask exceeds rank");
    for (std::size_t j = i + 1; j < f.masks.size(); ++j) {
      if (f.masks[i] == f.masks[j]) {
        throw std::invalid_argument("duplicate masks: " + format_mask(f.masks[i]));
      }
    }
  }
}

namespace {

// Parity of the letter counts of x, one bit per generator.  Membership in
// any H_A is a popcount parity of this against the mask.
SubsetMask letter_parity(const Word& x) {
  SubsetMask p = 0;
  for (int g : x.letters) p ^= SubsetMask{1} << (g - 1);
  return p;
}

}  // namespace

bool h_membership(const Word& x, SubsetMask a) {
  if (a == 0) throw std::invalid_argument("empty subset mask rejected");
  if (a & ~full_mask(x.rank)) throw std::invalid_argument("mask exceeds rank");
  return (std::popcount(letter_parity(x) & a) & 1) == 0;
}

std::uint32_t signature_bits(const Word& x, const SubsetFamily& f) {
  validate_family(x.rank, f);
  if (f.masks.size() > 32) throw std::invalid_argument("family too large");
  const SubsetMask p = letter_parity(x);
  std::uint32_t sig = 0;
  for (std::size_t j = 0; j < f.masks.size(); ++j) {
    sig |= static_cast<std::uint32_t>(std::popcount(p & f.masks[j]) & 1) << j;
  }
  return sig;
}

std::vector<int> coset_signature(const Word& x, const SubsetFamily& f) {
  const std::uint32_t sig = signature_bits(x, f);
  std::vector<int> out(f.masks.size());
  for (std::size_t j = 0; j < f.masks.size(); ++j) out[j] = (sig >> j) & 1;
  return out;
}

int gf2_rank(std::span<const SubsetMask> masks) {
  std::vector<SubsetMask> rows(masks.begin(), masks.end());
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    const SubsetMask pivot_bit = SubsetMask{1} << bit;
    int pivot = -1;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r] & pivot_bit) {
        pivot = static_cast<int>(r);
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && (rows[r] & pivot_bit)) rows[r] ^= rows[rank];
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

std::optional<int> contraction_witness(int rank, const SubsetFamily& f) {
  if (f.masks.empty()) throw std::invalid_argument("family must be nonempty");
  validate_family(rank, f);
  const int full_rank = gf2_rank(f.masks);
  if (full_rank == static_cast<int>(f.masks.size())) return std::nullopt;
  // Some mask lies in the span of the others; report the first such index.
  for (std::size_t i = 0; i < f.masks.size(); ++i) {
    std::vector<SubsetMask> rest;
    for (std::size_t j = 0; j < f.masks.size(); ++j) {
      if (j != i) rest.push_back(f.masks[j]);
    }
    if (gf2_rank(rest) == full_rank) return static_cast<int>(i);
  }
  throw std::logic_error("dependent family without a droppable mask");
}

bool is_contractible(int rank, const SubsetFamily& f) {
  return contraction_witness(rank, f).has_value();
}

std::uint64_t intersection_index(int rank, const SubsetFamily& f) {
  validate_family(rank, f);
  return std::uint64_t{1} << gf2_rank(f.masks);
}

namespace {

// Reduced row echelon form of three independent masks, rows descending, as a
// canonical key for their span.
std::array<SubsetMask, 3> rref3(SubsetMask a, SubsetMask b, SubsetMask c) {
  std::array<SubsetMask, 3> rows{a, b, c};
  int top = 0;
  for (int bit = 31; bit >= 0 && top < 3; --bit) {
    const SubsetMask pivot_bit = SubsetMask{1} << bit;
    int pivot = -1;
    for (int r = top; r < 3; ++r) {
      if (rows[r] & pivot_bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[top], rows[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r != top && (rows[r] & pivot_bit)) rows[r] ^= rows[top];
    }
    ++top;
  }
  return rows;
}

}  // namespace

TripleSpans enumerate_triple_spans(int rank) {
  TripleSpans out;
  generator_count(rank);
  if (rank > 7) throw std::invalid_argument("triple-span enumeration supported for rank <= 7");
  const SubsetMask full = full_mask(rank);
  std::set<std::array<SubsetMask, 3>> seen;
  for (SubsetMask a = 1; a <= full; ++a) {
    for (SubsetMask b = a + 1; b <= full; ++b) {
      const SubsetMask ab = a ^ b;
      for (SubsetMask c = b + 1; c <= full; ++c) {
        if (c == ab) continue;  // dependent triple
        ++out.labeled_triples;
        auto key = rref3(a, b, c);
        if (seen.insert(key).second) out.bases.push_back(key);
      }
    }
  }
  std::sort(out.bases.begin(), out.bases.end());
  return out;
}

std::uint64_t distinct_triple_intersections(int rank) {
  if (rank < 2) return 0;
  return enumerate_triple_spans(rank).bases.size();
}

}  // namespace gk
