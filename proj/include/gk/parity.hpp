#pragma once

#include "gk/freeword.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gk {

// Parity subgroups: H_A = { x : sum_{i in A} w_x(a_i) is even } for a
// nonempty A within {1..k+1}, and intersections of several of them.
// Everything reduces to GF(2) linear algebra on the subset masks.

using SubsetMask = std::uint32_t;  // bit i-1 set <=> index i in the subset

struct SubsetFamily {
  std::vector<SubsetMask> masks;  // pairwise distinct, nonempty
};

SubsetMask full_mask(int rank);
std::vector<int> mask_indices(SubsetMask a);
SubsetMask mask_from_indices(int rank, std::span<const int> indices);

// Text format: comma-separated 1-based indices ("1,3,4").
SubsetMask parse_mask(int rank, std::string_view text);
std::string format_mask(SubsetMask a);

// Distinct, nonempty, within rank; throws std::invalid_argument.
void validate_family(int rank, const SubsetFamily& f);

bool h_membership(const Word& x, SubsetMask a);

// Bit j of the result = parity of sum_{i in masks[j]} w_x(a_i).  XORs under
// multiplication, which is what makes every H_A a subgroup.
std::uint32_t signature_bits(const Word& x, const SubsetFamily& f);
std::vector<int> coset_signature(const Word& x, const SubsetFamily& f);

int gf2_rank(std::span<const SubsetMask> masks);

// Witness index i0 such that dropping masks[i0] leaves the intersection
// unchanged (masks[i0] lies in the span of the others); nullopt when the
// family is non-contractible.
std::optional<int> contraction_witness(int rank, const SubsetFamily& f);
bool is_contractible(int rank, const SubsetFamily& f);

// Index of the intersection of the H_A in the whole group: 2^rank(masks).
std::uint64_t intersection_index(int rank, const SubsetFamily& f);

// Number of distinct subgroups arising as non-contractible triple
// intersections = number of 3-dimensional GF(2) subspaces of GF(2)^{k+1},
// counted by explicit subspace enumeration.
std::uint64_t distinct_triple_intersections(int rank);

// Canonical bases (reduced row echelon, rows descending) of every
// 3-dimensional subspace of GF(2)^{k+1}, plus the number of unordered
// independent triples of distinct nonempty masks seen along the way.
struct TripleSpans {
  std::vector<std::array<SubsetMask, 3>> bases;
  std::uint64_t labeled_triples = 0;
};
TripleSpans enumerate_triple_spans(int rank);

}  // namespace gk
