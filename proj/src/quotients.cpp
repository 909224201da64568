#include "gk/quotients.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace gk {

GeneratorAssignment make_assignment(GroupPtr target, std::vector<int> images) {
  if (!target) throw std::invalid_argument("null target group");
  if (images.size() < 2) throw std::invalid_argument("need at least two generator images");
  generator_count(static_cast<int>(images.size()) - 1);
  for (int x : images) {
    if (x < 0 || x >= target->order) throw std::invalid_argument("image id out of range");
    if (target->mul(x, x) != 0) {
      throw std::invalid_argument("image " + target->labels[x] + " is not an involution");
    }
  }
  return GeneratorAssignment{std::move(target), std::move(images)};
}

void validate_partition(int rank, const PartitionSpec& spec) {
  const SubsetMask full = full_mask(rank);
  SubsetMask covered = spec.zero_class;
  if (spec.zero_class & ~full) throw std::invalid_argument("zero class exceeds rank");
  for (SubsetMask c : spec.classes) {
    if (c == 0) throw std::invalid_argument("partition classes must be nonempty");
    if (c & ~full) throw std::invalid_argument("class exceeds rank");
    if (c & covered) throw std::invalid_argument("partition classes overlap");
    covered |= c;
  }
  if (covered != full) throw std::invalid_argument("partition does not cover all generators");
}

std::vector<std::string> descriptor_image_labels(const KernelDescriptor& d) {
  const GroupPtr rep = catalog_lookup(d.iso_label);
  std::vector<std::string> out;
  out.reserve(d.images.size());
  for (int x : d.images) out.push_back(rep->labels[x]);
  return out;
}

int evaluate(const GeneratorAssignment& phi, const Word& x) {
  if (x.rank != phi.rank()) throw std::invalid_argument("word rank does not match assignment");
  const GroupTable& g = *phi.target;
  int cur = 0;
  for (int letter : x.letters) cur = g.mul(cur, phi.images[letter - 1]);
  return cur;
}

bool is_epimorphism(const GeneratorAssignment& phi) {
  return static_cast<int>(subgroup_closure(*phi.target, phi.images).size()) ==
         phi.target->order;
}

bool kernel_member(const GeneratorAssignment& phi, const Word& x) {
  return evaluate(phi, x) == 0;
}

bool hperiod_membership(const PartitionSpec& spec, const GroupTable& target,
                        std::span<const int> designated, const Word& x) {
  validate_partition(x.rank, spec);
  if (designated.size() != spec.classes.size()) {
    throw std::invalid_argument("need one designated generator per class");
  }
  for (int g : designated) {
    if (g < 0 || g >= target.order) throw std::invalid_argument("designated id out of range");
    if (target.mul(g, g) != 0) {
      throw std::invalid_argument("designated image " + target.labels[g] +
                                  " is not an involution");
    }
  }
  int cur = 0;
  for (int letter : x.letters) {
    const SubsetMask bit = SubsetMask{1} << (letter - 1);
    int image = 0;
    for (std::size_t j = 0; j < spec.classes.size(); ++j) {
      if (spec.classes[j] & bit) {
        image = designated[j];
        break;
      }
    }
    cur = target.mul(cur, image);
  }
  return cur == 0;
}

GeneratorAssignment triple_hom(int rank, SubsetMask a1, SubsetMask a2, SubsetMask a3) {
  const int n = generator_count(rank);
  SubsetFamily family{{a1, a2, a3}};
  validate_family(rank, family);
  if (is_contractible(rank, family)) {
    throw std::invalid_argument("contractible triple: kernel index would drop below 8");
  }
  GroupPtr k8 = catalog_lookup("K8");
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    // K8 element ids are bitmasks over {a, b, c}.
    images[i] = ((a1 & bit) ? 1 : 0) | ((a2 & bit) ? 2 : 0) | ((a3 & bit) ? 4 : 0);
  }
  return make_assignment(std::move(k8), std::move(images));
}

namespace {

GeneratorAssignment two_class_hom(int rank, const PartitionSpec& spec, GroupPtr target,
                                  int first_image, int second_image) {
  validate_partition(rank, spec);
  if (spec.classes.size() != 2) {
    throw std::invalid_argument("expected exactly two partition classes, got " +
                                std::to_string(spec.classes.size()));
  }
  const int n = generator_count(rank);
  std::vector<int> images(n, 0);
  for (int i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    if (spec.classes[0] & bit) {
      images[i] = first_image;
    } else if (spec.classes[1] & bit) {
      images[i] = second_image;
    }
  }
  return make_assignment(std::move(target), std::move(images));
}

}  // namespace

GeneratorAssignment partition_hom_d4(int rank, const PartitionSpec& spec) {
  GroupPtr d4 = catalog_lookup("D4");
  const int b = d4->label_id("b");
  const int ab = d4->label_id("ab");
  return two_class_hom(rank, spec, std::move(d4), b, ab);
}

GroupPtr r10_group() {
  static const GroupPtr r10 = std::make_shared<const GroupTable>(make_r10());
  return r10;
}

GeneratorAssignment partition_hom_r10(int rank, const PartitionSpec& spec) {
  const GroupPtr r10 = r10_group();
  const int a = r10->label_id("a");
  const int b = r10->label_id("b");
  return two_class_hom(rank, spec, r10, a, b);
}

Canonicalizer::Canonicalizer(GroupPtr target) : target_(std::move(target)) {
  if (!target_) throw std::invalid_argument("null target group");

  auto adopt = [&](const GroupPtr& candidate) {
    auto witness = isomorphism(*target_, *candidate);
    if (!witness) return false;
    rep_ = candidate;
    label_ = candidate->iso_label;
    // All isomorphisms target -> rep form the coset Aut(rep) . witness, so
    // minimizing over these minimizes over every isomorphism.
    for (const auto& alpha : automorphisms(*rep_)) {
      std::vector<int> composed(target_->order);
      for (int x = 0; x < target_->order; ++x) composed[x] = alpha[(*witness)[x]];
      maps_.push_back(std::move(composed));
    }
    return true;
  };

  if (target_->order <= 12) {
    for (const auto& candidate : catalog(target_->order)) {
      if (adopt(candidate)) return;
    }
  } else if (target_->order % 2 == 0) {
    // Dihedral quotients past the catalog range (even-index constructions).
    if (adopt(catalog_lookup("D" + std::to_string(target_->order / 2)))) return;
  }
  throw std::invalid_argument("target group matches no known representative of order " +
                              std::to_string(target_->order));
}

KernelDescriptor Canonicalizer::canonical(std::span<const int> images) const {
  KernelDescriptor d;
  d.iso_label = label_;
  d.index = rep_->order;
  std::vector<int> best;
  std::vector<int> tmp(images.size());
  for (const auto& m : maps_) {
    for (std::size_t i = 0; i < images.size(); ++i) tmp[i] = m[images[i]];
    if (best.empty() || tmp < best) best = tmp;
  }
  d.images = std::move(best);
  return d;
}

KernelDescriptor canonical_descriptor(const GeneratorAssignment& phi) {
  if (!is_epimorphism(phi)) {
    throw std::invalid_argument("assignment is not surjective; kernel index would be smaller");
  }
  Canonicalizer canon(phi.target);
  return canon.canonical(phi.images);
}

GeneratorAssignment descriptor_assignment(const KernelDescriptor& d) {
  GroupPtr rep = catalog_lookup(d.iso_label);
  if (rep->order != d.index) {
    throw std::invalid_argument("descriptor index does not match quotient order");
  }
  return make_assignment(std::move(rep), d.images);
}

VerifyReport verify_descriptor(const KernelDescriptor& d, int rank, int max_word_len,
                               int samples, std::uint64_t seed) {
  VerifyReport report;
  GeneratorAssignment phi = descriptor_assignment(d);

  report.closure_size =
      static_cast<int>(subgroup_closure(*phi.target, phi.images).size());
  if (report.closure_size != d.index) {
    report.failure = "image closure has " + std::to_string(report.closure_size) +
                     " elements, expected " + std::to_string(d.index);
    return report;
  }

  std::vector<Word> kernel;
  {
    WordStream stream(rank, max_word_len);
    Word w;
    while (stream.next(w)) {
      if (kernel_member(phi, w)) kernel.push_back(w);
    }
  }
  report.kernel_words = kernel.size();

  const GroupTable& g = *phi.target;
  std::vector<int> buffer;
  auto image_of = [&](const std::vector<int>& letters) {
    int cur = 0;
    for (int letter : letters) cur = g.mul(cur, phi.images[letter - 1]);
    return cur;
  };

  for (const Word& h : kernel) {
    const Word h_inv = inverse(h);
    if (!kernel_member(phi, h_inv)) {
      report.failure = "kernel not closed under inversion at [" + format_word(h) + "]";
      return report;
    }
  }
  for (const Word& x : kernel) {
    for (const Word& y : kernel) {
      buffer.assign(x.letters.begin(), x.letters.end());
      append_reduced(buffer, y.letters);
      ++report.closure_checks;
      if (image_of(buffer) != 0) {
        report.failure = "kernel not closed under product: [" + format_word(x) + "] * [" +
                         format_word(y) + "]";
        return report;
      }
    }
  }

  // Normality: x^{-1} h x for seeded random x and kernel h.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, max_word_len);
  std::uniform_int_distribution<int> letter_dist(1, generator_count(rank));
  std::uniform_int_distribution<std::size_t> kernel_dist(0, kernel.empty() ? 0 : kernel.size() - 1);
  for (int s = 0; s < samples; ++s) {
    std::vector<int> raw;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) raw.push_back(letter_dist(rng));
    const Word x = reduce(rank, raw);
    const Word& h = kernel[kernel_dist(rng)];
    buffer.assign(x.letters.rbegin(), x.letters.rend());  // x^{-1}
    append_reduced(buffer, h.letters);
    append_reduced(buffer, x.letters);
    ++report.conjugation_checks;
    if (image_of(buffer) != 0) {
      report.failure = "conjugate of kernel word [" + format_word(h) + "] by [" +
                       format_word(x) + "] left the kernel";
      return report;
    }
  }

  report.passed = true;
  return report;
}

}  // namespace gk
