#pragma once

#include "gk/quotients.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gk {

// Catalog groups of the given order that are generated by their involutions;
// only these can appear as quotients of the word group.
std::vector<std::string> classify_quotient_groups(int order);

// The two published index-8 families: kernels of the triple parity
// construction (one per 3-dimensional span) and kernels of two-class
// partition homomorphisms onto D4.  Descriptor sets are deduplicated and
// sorted; the labeled counts are the raw construction counts.
struct PaperIndex8 {
  std::vector<KernelDescriptor> r_family;
  std::vector<KernelDescriptor> d4_family;
  std::uint64_t labeled_triples = 0;     // unordered independent mask triples
  std::uint64_t labeled_partitions = 0;  // ordered (C0; C1, C2) partitions
};
PaperIndex8 enumerate_paper_index8(int rank);

// The published index-10 family: partition homomorphisms onto the order-10
// reflection group.
struct PaperIndex10 {
  std::vector<KernelDescriptor> family;
  std::uint64_t labeled_partitions = 0;
};
PaperIndex10 enumerate_paper_index10(int rank);

// Printed counting expressions, evaluated verbatim.
std::int64_t formula_index8(int rank);   // 8^{k+1} - 6*4^{k+1} + 3^{k+1} + 9*2^{k+1} - 5
std::int64_t formula_index10(int rank);  // 3^{k+1} - 2^{k+2} + 1
std::int64_t formula_r(int rank);        // (2^{k+1})(2^{k+1} - 2)(2^{k+2} - 3)

// Direct enumeration of ordered (zero; first, second) partitions with both
// named classes nonempty.
std::uint64_t count_ordered_partitions(int rank);

struct OddIndexReport {
  int order = 0;
  bool impossible = false;
  std::vector<std::string> involution_generated;  // offending quotients, if any
  std::string explanation;
};

// Evidence that no normal subgroup has the given odd index: no group of that
// order is generated by involutions.
OddIndexReport odd_index_impossible(int order);

// A verified normal subgroup of the given even index: the full-support
// parity subgroup for index 2, a dihedral kernel for index >= 4.
KernelDescriptor construct_even_index(int rank, int index);

// Every ordered two-class partition of {1..k+1}, zero class possibly empty.
std::vector<PartitionSpec> ordered_two_class_partitions(int rank);

}  // namespace gk
