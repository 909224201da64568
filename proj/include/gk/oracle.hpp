#pragma once

#include "gk/enumerate.hpp"
#include "gk/quotients.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

struct OracleConfig {
  std::uint64_t budget = 100'000'000;  // assignment evaluations allowed per run
  int workers = 1;
};

struct BudgetError : std::runtime_error {
  BudgetError(std::string group, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("enumerating assignments onto " + group + " needs " +
                           std::to_string(required) + " evaluations, over the budget of " +
                           std::to_string(budget) + "; no partial results returned"),
        group_label(std::move(group)),
        required(required),
        budget(budget) {}
  std::string group_label;
  std::uint64_t required;
  std::uint64_t budget;
};

struct QuotientCount {
  std::string iso_label;
  std::uint64_t assignments = 0;   // involution-or-identity image tuples
  std::uint64_t surjective = 0;
  std::uint64_t descriptors = 0;
  std::uint64_t automorphisms = 0;  // |Aut(quotient)|
};

struct OracleResult {
  int rank = 1;
  int order = 1;
  std::vector<KernelDescriptor> descriptors;  // sorted, deduplicated
  std::vector<QuotientCount> per_group;
};

// Ground truth by exhaustion: every assignment of generators to
// involution-or-identity elements of every catalog group of the order,
// filtered to epimorphisms, canonicalized, deduplicated.  The assignment
// space is split into contiguous ranges per worker and merged by set union,
// so the result does not depend on the worker count.
OracleResult brute_force_kernels(int rank, int order, const OracleConfig& cfg = {});

struct DedupReport {
  bool agree = true;
  std::string detail;  // first mismatch when !agree
  std::vector<QuotientCount> per_group;
};

// Deduplicates the surjective assignments two independent ways — canonical
// descriptors vs pairwise automorphism-orbit tests — and compares the
// resulting partitions.
DedupReport dedup_crosscheck(int rank, int order, const OracleConfig& cfg = {});

struct ComparisonReport {
  int rank = 1;
  int order = 8;
  std::uint64_t oracle_count = 0;
  std::uint64_t paper_family_count = 0;
  std::uint64_t labeled_count = 0;
  std::int64_t formula_value = 0;
  bool paper_subset_of_oracle = false;
  bool oracle_subset_of_paper = false;
  std::vector<KernelDescriptor> missing_from_paper;
  std::vector<std::string> notes;
  std::vector<QuotientCount> per_group;
};

// Oracle vs published families and printed formulas for index 8 or 10.
// Disagreement is data, not an error.
ComparisonReport cross_check_paper(int rank, int order, const OracleConfig& cfg = {});

struct SeparationResult {
  bool separated = false;
  Word witness;  // a word in exactly one kernel, when separated
  int searched_max_len = 0;
};

// Exhaustive search for a word lying in exactly one of the two kernels.
SeparationResult word_separation_oracle(const GeneratorAssignment& phi1,
                                        const GeneratorAssignment& phi2, int max_len);

// Helper shared by the oracle paths: all surjective involution-or-identity
// assignments onto the target, in deterministic order.
std::vector<std::vector<int>> surjective_assignments(int rank, const GroupPtr& target,
                                                     std::uint64_t budget);

}  // namespace gk
