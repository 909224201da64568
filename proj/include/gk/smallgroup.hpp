#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

// Constructors refuse to close a generating set past this order; everything
// classified here has order <= 12, with headroom for dihedral targets.
inline constexpr int kGroupOrderBound = 64;

struct SizeBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite group as an explicit multiplication table.  Element 0 is the
// identity.  Every constructor audits the table (Latin square, identity,
// inverses, associativity) before returning it.
struct GroupTable {
  int order = 1;
  std::vector<int> table;           // row-major: table[x*order + y] = x*y
  std::vector<std::string> labels;  // labels[0] == "e"
  std::string iso_label;            // catalog name, set by catalog matching

  int mul(int x, int y) const { return table[x * order + y]; }
  int inv(int x) const;
  int label_id(const std::string& label) const;  // throws if absent
};

using GroupPtr = std::shared_ptr<const GroupTable>;
using Automorphism = std::vector<int>;  // permutation of element ids

// Throws std::invalid_argument naming the first violated axiom.
void validate_group(const GroupTable& g);

GroupTable make_cyclic(int n);
// Order 2m: o(a) = m, o(b) = 2, ba = a^{m-1}b.  Elements are ordered
// e, a, ..., a^{m-1}, b, ab, ..., a^{m-1}b.
GroupTable make_dihedral(int m);
// Order 4m: o(a) = 2m, b^2 = a^m, ba = a^{2m-1}b.
GroupTable make_dicyclic(int m);
// Quaternion group: o(a) = 4, a^2 = b^2, ba = a^3b (= dicyclic with m = 2).
GroupTable make_quaternion8();
// Order 2^m with every element an involution; labels e, a, b, ab, c, ...
GroupTable make_elementary_abelian2(int m);
GroupTable make_alternating4();

// Closes the generating permutations (one-line form, 0-based) under
// composition; labels elements by their shortest product expression.
GroupTable make_perm_group(std::span<const std::vector<int>> generators,
                           std::span<const std::string> names = {});

// The order-10 permutation group generated by two involutions whose product
// is a 5-cycle: (1,2)(3,4) and (2,3)(4,5) acting on five points.
GroupTable make_r10();

GroupTable direct_product(const GroupTable& g, const GroupTable& h);

// Least n >= 1 with x^n = e.
int element_order(const GroupTable& g, int x);

// All x with x^2 = e, identity included.
std::vector<int> involution_ids(const GroupTable& g);

// Smallest subset containing the seeds and the identity, closed under the
// table; returned sorted.
std::vector<int> subgroup_closure(const GroupTable& g, std::span<const int> seeds);

// Table-preserving bijection g -> h found by generator-image backtracking,
// pruned by element orders; nullopt when none exists.
std::optional<std::vector<int>> isomorphism(const GroupTable& g, const GroupTable& h);
bool isomorphic(const GroupTable& g, const GroupTable& h);

// The complete automorphism group, by the same backtracking search.
std::vector<Automorphism> automorphisms(const GroupTable& g);

// One representative per isomorphism class of groups of the given order;
// supported for 1 <= order <= 12.
const std::vector<GroupPtr>& catalog(int order);

// Resolves a catalog name ("D4", "K8", ...) to its representative; dihedral
// names beyond order 12 ("D7".."D32") resolve to freshly registered tables.
GroupPtr catalog_lookup(const std::string& iso_label);

}  // namespace gk
