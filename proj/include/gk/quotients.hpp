#pragma once

#include "gk/freeword.hpp"
#include "gk/parity.hpp"
#include "gk/smallgroup.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gk {

// A homomorphism from the rank-k word group into a finite group, given by
// the images of the k+1 generators.  Every image must square to the
// identity (forced by a_i^2 = e).
struct GeneratorAssignment {
  GroupPtr target;
  std::vector<int> images;  // one per generator; images[i-1] is the image of a_i

  int rank() const { return static_cast<int>(images.size()) - 1; }
};

// Validates image range and the involution constraint.
GeneratorAssignment make_assignment(GroupPtr target, std::vector<int> images);

// An ordered partition of {1..k+1}: a possibly-empty zero class whose
// generators map to the identity, plus nonempty disjoint classes covering
// the rest.
struct PartitionSpec {
  SubsetMask zero_class = 0;
  std::vector<SubsetMask> classes;
};

void validate_partition(int rank, const PartitionSpec& spec);

// A finite-index normal subgroup, canonicalized as the kernel of an
// epimorphism onto a catalog group: quotient name, quotient order, and the
// lexicographically minimal generator-image vector over all isomorphisms
// onto the catalog representative.
struct KernelDescriptor {
  std::string iso_label;
  int index = 1;
  std::vector<int> images;  // element ids in the catalog representative

  bool operator==(const KernelDescriptor&) const = default;
  auto operator<=>(const KernelDescriptor&) const = default;
};

std::vector<std::string> descriptor_image_labels(const KernelDescriptor& d);

int evaluate(const GeneratorAssignment& phi, const Word& x);
bool is_epimorphism(const GeneratorAssignment& phi);
bool kernel_member(const GeneratorAssignment& phi, const Word& x);

// Membership in the subgroup cut out by a partition-induced homomorphism:
// generators in class j map to designated[j], the zero class maps to the
// identity, and x belongs iff its image is the identity.
bool hperiod_membership(const PartitionSpec& spec, const GroupTable& target,
                        std::span<const int> designated, const Word& x);

// Epimorphism onto K8 determined by three independent masks: the image of
// a_i has one coordinate per mask, set when i lies in that mask.  Its kernel
// is exactly the intersection of the three parity subgroups.
GeneratorAssignment triple_hom(int rank, SubsetMask a1, SubsetMask a2, SubsetMask a3);

// Epimorphism onto D4 from a two-class partition: first class -> b,
// second class -> ab, zero class -> e.
GeneratorAssignment partition_hom_d4(int rank, const PartitionSpec& spec);

// Epimorphism onto the order-10 reflection group: first class -> a,
// second class -> b, zero class -> e.
GeneratorAssignment partition_hom_r10(int rank, const PartitionSpec& spec);

// Shared instance of make_r10(), the target of partition_hom_r10.
GroupPtr r10_group();

// Canonicalizes assignments onto a fixed target: finds the catalog
// representative, precomputes every isomorphism target -> representative,
// and maps image vectors to their lexicographic minimum.  Two epimorphisms
// onto the target have equal kernels iff they canonicalize identically.
class Canonicalizer {
 public:
  explicit Canonicalizer(GroupPtr target);

  const std::string& iso_label() const { return label_; }
  const GroupPtr& representative() const { return rep_; }
  std::size_t isomorphism_count() const { return maps_.size(); }

  KernelDescriptor canonical(std::span<const int> images) const;

 private:
  GroupPtr target_;
  GroupPtr rep_;
  std::string label_;
  std::vector<std::vector<int>> maps_;  // every isomorphism target -> rep
};

// One-shot canonicalization; requires is_epimorphism(phi).
KernelDescriptor canonical_descriptor(const GeneratorAssignment& phi);

// Rebuilds the assignment a descriptor denotes (catalog representative as
// the target).
GeneratorAssignment descriptor_assignment(const KernelDescriptor& d);

struct VerifyReport {
  bool passed = false;
  std::string failure;  // counterexample description when !passed
  int closure_size = 0;
  std::uint64_t kernel_words = 0;
  std::uint64_t closure_checks = 0;
  std::uint64_t conjugation_checks = 0;
};

// Checks a descriptor the hard way: (i) the images generate the whole
// quotient, (ii) the kernel words up to max_word_len are closed under
// multiplication and inversion, (iii) seeded random conjugates of kernel
// words stay in the kernel.
VerifyReport verify_descriptor(const KernelDescriptor& d, int rank, int max_word_len,
                               int samples, std::uint64_t seed);

}  // namespace gk
