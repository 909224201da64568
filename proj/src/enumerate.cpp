#include "gk/enumerate.hpp"

#include <algorithm>
#include <set>

namespace gk {

std::vector<std::string> classify_quotient_groups(int order) {
  std::vector<std::string> out;
  for (const auto& g : catalog(order)) {
    const auto closure = subgroup_closure(*g, involution_ids(*g));
    if (static_cast<int>(closure.size()) == g->order) out.push_back(g->iso_label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartitionSpec> ordered_two_class_partitions(int rank) {
  const int n = generator_count(rank);
  if (n > 13) throw std::invalid_argument("partition enumeration supported for rank <= 12");
  std::vector<PartitionSpec> out;
  std::vector<int> slot(n, 0);  // 0 = zero class, 1 = first, 2 = second
  while (true) {
    PartitionSpec spec;
    spec.classes.assign(2, 0);
    for (int i = 0; i < n; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (slot[i] == 0) {
        spec.zero_class |= bit;
      } else {
        spec.classes[slot[i] - 1] |= bit;
      }
    }
    if (spec.classes[0] && spec.classes[1]) out.push_back(spec);
    int i = 0;
    while (i < n && slot[i] == 2) slot[i++] = 0;
    if (i == n) break;
    ++slot[i];
  }
  return out;
}

PaperIndex8 enumerate_paper_index8(int rank) {
  PaperIndex8 out;

  const TripleSpans spans = enumerate_triple_spans(rank);
  out.labeled_triples = spans.labeled_triples;
  {
    std::set<KernelDescriptor> dedup;
    Canonicalizer canon(catalog_lookup("K8"));
    for (const auto& basis : spans.bases) {
      const auto phi = triple_hom(rank, basis[0], basis[1], basis[2]);
      dedup.insert(canon.canonical(phi.images));
    }
    out.r_family.assign(dedup.begin(), dedup.end());
  }

  {
    std::set<KernelDescriptor> dedup;
    Canonicalizer canon(catalog_lookup("D4"));
    for (const auto& spec : ordered_two_class_partitions(rank)) {
      ++out.labeled_partitions;
      const auto phi = partition_hom_d4(rank, spec);
      dedup.insert(canon.canonical(phi.images));
    }
    out.d4_family.assign(dedup.begin(), dedup.end());
  }
  return out;
}

PaperIndex10 enumerate_paper_index10(int rank) {
  PaperIndex10 out;
  std::set<KernelDescriptor> dedup;
  Canonicalizer canon(r10_group());
  for (const auto& spec : ordered_two_class_partitions(rank)) {
    ++out.labeled_partitions;
    const auto phi = partition_hom_r10(rank, spec);
    dedup.insert(canon.canonical(phi.images));
  }
  out.family.assign(dedup.begin(), dedup.end());
  return out;
}

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  __int128 value = 1;
  for (int i = 0; i < exp; ++i) {
    value *= base;
    if (value > INT64_MAX) throw std::overflow_error("formula value overflows int64");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

std::int64_t formula_index8(int rank) {
  generator_count(rank);
  const int n = rank + 1;
  return ipow(8, n) - 6 * ipow(4, n) + ipow(3, n) + 9 * ipow(2, n) - 5;
}

std::int64_t formula_index10(int rank) {
  generator_count(rank);
  const int n = rank + 1;
  return ipow(3, n) - ipow(2, n + 1) + 1;
}

std::int64_t formula_r(int rank) {
  generator_count(rank);
  const int n = rank + 1;
  return ipow(2, n) * (ipow(2, n) - 2) * (ipow(2, n + 1) - 3);
}

std::uint64_t count_ordered_partitions(int rank) {
  return ordered_two_class_partitions(rank).size();
}

OddIndexReport odd_index_impossible(int order) {
  if (order < 3 || order > 12 || order % 2 == 0) {
    throw std::invalid_argument("expected an odd order in 3..11, got " + std::to_string(order));
  }
  OddIndexReport report;
  report.order = order;
  report.involution_generated = classify_quotient_groups(order);
  report.impossible = report.involution_generated.empty();
  std::string names;
  for (const auto& g : catalog(order)) {
    if (!names.empty()) names += ", ";
    names += g->iso_label;
  }
  report.explanation =
      report.impossible
          ? "no group of order " + std::to_string(order) + " (" + names +
                ") is generated by involutions, so no quotient of that order exists"
          : "involution-generated groups of order " + std::to_string(order) + " found";
  return report;
}

KernelDescriptor construct_even_index(int rank, int index) {
  const int n = generator_count(rank);
  if (index < 2 || index % 2 != 0) {
    throw std::invalid_argument("index must be even and >= 2");
  }
  const int p = index / 2;
  if (p == 1) {
    // Kernel of the parity map over the full generator set.
    GroupPtr z2 = catalog_lookup("Z2");
    return canonical_descriptor(make_assignment(z2, std::vector<int>(n, 1)));
  }
  if (2 * p > kGroupOrderBound) {
    throw SizeBoundError("dihedral target of order " + std::to_string(index) +
                         " exceeds the constructor bound");
  }
  // a1 -> b, every other generator -> ab; b and ab generate D_p since their
  // product is a rotation of full order.  The canonicalizer resolves the
  // catalog name (D2 lands on Z2xZ2).
  auto dp = std::make_shared<const GroupTable>(make_dihedral(p));
  const int b = dp->label_id("b");
  const int ab = dp->label_id("ab");
  std::vector<int> images(n, ab);
  images[0] = b;
  return canonical_descriptor(make_assignment(std::move(dp), std::move(images)));
}

}  // namespace gk
