#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/json_io.hpp"
#include "gk/oracle.hpp"

#include <algorithm>

using namespace gk;

TEST_CASE("desk-scale kernel counts") {
  // Frozen after confirming with the independent dedup strategy and the
  // orbit-size law: surjective assignment counts factor exactly as
  // |Aut(quotient)| times the kernel count.
  struct Expected {
    int rank, order;
    std::uint64_t kernels;
  };
  for (const auto& e : std::vector<Expected>{{1, 8, 1}, {2, 8, 13}, {1, 10, 1}, {2, 10, 9}}) {
    const auto result = brute_force_kernels(e.rank, e.order);
    CHECK(result.descriptors.size() == e.kernels);
    for (const auto& qc : result.per_group) {
      CHECK(qc.surjective == qc.automorphisms * qc.descriptors);
    }
  }
  // per-quotient split at (2,8): twelve D4 kernels, one K8 kernel
  const auto result = brute_force_kernels(2, 8);
  for (const auto& qc : result.per_group) {
    if (qc.iso_label == "D4") {
      CHECK(qc.surjective == 96);
      CHECK(qc.descriptors == 12);
    }
    if (qc.iso_label == "K8") {
      CHECK(qc.surjective == 168);
      CHECK(qc.descriptors == 1);
    }
    if (qc.iso_label == "Q8" || qc.iso_label == "Z8" || qc.iso_label == "Z4xZ2") {
      CHECK(qc.surjective == 0);  // not involution-generated
    }
  }
}

TEST_CASE("oracle descriptors all verify") {
  const auto result = brute_force_kernels(2, 10);
  for (const auto& d : result.descriptors) {
    CHECK(verify_descriptor(d, 2, 6, 200, 17).passed);
  }
}

TEST_CASE("worker count does not change the result") {
  for (int workers : {2, 3, 5}) {
    OracleConfig cfg;
    cfg.workers = workers;
    const auto parallel = brute_force_kernels(2, 8, cfg);
    const auto serial = brute_force_kernels(2, 8);
    CHECK(parallel.descriptors == serial.descriptors);
    CHECK(oracle_catalog_to_json(parallel).dump() == oracle_catalog_to_json(serial).dump());
  }
}

TEST_CASE("budget overruns are explicit errors") {
  OracleConfig cfg;
  cfg.budget = 10;
  CHECK_THROWS_AS(brute_force_kernels(2, 8, cfg), BudgetError);
  try {
    brute_force_kernels(2, 8, cfg);
  } catch (const BudgetError& e) {
    CHECK(e.budget == 10);
    CHECK(e.required > 10);
    CHECK_FALSE(e.group_label.empty());
  }
}

TEST_CASE("the two dedup strategies agree") {
  for (int rank : {1, 2}) {
    for (int order : {8, 10}) {
      const auto report = dedup_crosscheck(rank, order);
      CHECK(report.agree);
      for (const auto& qc : report.per_group) {
        CHECK(qc.surjective == qc.automorphisms * qc.descriptors);
      }
    }
  }
}

TEST_CASE("published families sit inside the oracle sets") {
  for (int rank : {1, 2}) {
    const auto oracle8 = brute_force_kernels(rank, 8);
    const auto families = enumerate_paper_index8(rank);
    for (const auto& d : families.r_family) {
      CHECK(std::binary_search(oracle8.descriptors.begin(), oracle8.descriptors.end(), d));
    }
    for (const auto& d : families.d4_family) {
      CHECK(std::binary_search(oracle8.descriptors.begin(), oracle8.descriptors.end(), d));
    }
    const auto oracle10 = brute_force_kernels(rank, 10);
    for (const auto& d : enumerate_paper_index10(rank).family) {
      CHECK(std::binary_search(oracle10.descriptors.begin(), oracle10.descriptors.end(), d));
    }
  }
}

TEST_CASE("cross check report flags") {
  SUBCASE("rank 1, index 8: families are complete, the formula is not") {
    const auto report = cross_check_paper(1, 8);
    CHECK(report.oracle_count == 1);
    CHECK(report.paper_family_count == 1);
    CHECK(report.formula_value == 8);
    CHECK(report.paper_subset_of_oracle);
    CHECK(report.oracle_subset_of_paper);
    CHECK(report.missing_from_paper.empty());
    bool formula_flagged = false;
    for (const auto& note : report.notes) {
      formula_flagged = formula_flagged || note.find("differs") != std::string::npos;
    }
    CHECK(formula_flagged);
  }
  SUBCASE("rank 2, index 8: six kernels outside the families") {
    const auto report = cross_check_paper(2, 8);
    CHECK(report.oracle_count == 13);
    CHECK(report.paper_family_count == 7);
    CHECK(report.paper_subset_of_oracle);
    CHECK_FALSE(report.oracle_subset_of_paper);
    CHECK(report.missing_from_paper.size() == 6);
    for (const auto& d : report.missing_from_paper) CHECK(d.iso_label == "D4");
  }
  SUBCASE("rank 2, index 10") {
    const auto report = cross_check_paper(2, 10);
    CHECK(report.oracle_count == 9);
    CHECK(report.paper_family_count == 6);
    CHECK(report.labeled_count == 12);
    CHECK(report.formula_value == 12);
    CHECK(report.paper_subset_of_oracle);
    CHECK(report.missing_from_paper.size() == 3);
  }
  SUBCASE("unsupported index") {
    CHECK_THROWS_AS(cross_check_paper(1, 6), std::invalid_argument);
  }
}

TEST_CASE("word separation oracle") {
  GroupPtr d4 = catalog_lookup("D4");
  const int b = d4->label_id("b"), ab = d4->label_id("ab"), a3b = d4->label_id("a3b");
  const auto phi1 = make_assignment(d4, {b, ab});
  const auto phi2 = make_assignment(d4, {ab, b});
  const auto phi3 = make_assignment(d4, {b, a3b});

  CHECK_FALSE(word_separation_oracle(phi1, phi2, 8).separated);
  CHECK_FALSE(word_separation_oracle(phi1, phi1, 8).separated);
  const auto sep = word_separation_oracle(phi1, phi3, 8);
  CHECK(sep.separated == (canonical_descriptor(phi1) != canonical_descriptor(phi3)));
  if (sep.separated) {
    CHECK(kernel_member(phi1, sep.witness) != kernel_member(phi3, sep.witness));
  }
}

TEST_CASE("separation verdicts match descriptor equality on every pair, rank 1") {
  for (int order : {8, 10}) {
    for (const auto& target : catalog(order)) {
      const auto assignments = surjective_assignments(1, target, 1 << 20);
      std::vector<GeneratorAssignment> phis;
      for (const auto& images : assignments) {
        phis.push_back(make_assignment(target, images));
      }
      const Canonicalizer canon(target);
      for (std::size_t i = 0; i < phis.size(); ++i) {
        const auto di = canon.canonical(phis[i].images);
        for (std::size_t j = i; j < phis.size(); ++j) {
          const auto dj = canon.canonical(phis[j].images);
          const bool separated = word_separation_oracle(phis[i], phis[j], 8).separated;
          CHECK(separated == (di != dj));
        }
      }
    }
  }
}

TEST_CASE("descriptor json round trip") {
  const auto d = canonical_descriptor(triple_hom(2, 0b001, 0b010, 0b100));
  const auto j = descriptor_to_json(d);
  CHECK(j.at("quotient") == "K8");
  CHECK(j.at("index") == 8);
  CHECK(descriptor_from_json(j) == d);

  const auto report = cross_check_paper(1, 10);
  const auto rj = comparison_to_json(report);
  for (const char* key :
       {"k", "index", "oracle_count", "paper_family_count", "labeled_count", "formula_value",
        "paper_subset_of_oracle", "oracle_subset_of_paper", "missing_from_paper", "notes"}) {
    CHECK(rj.contains(key));
  }
}
