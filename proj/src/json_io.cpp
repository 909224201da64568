#include "gk/json_io.hpp"

namespace gk {

using nlohmann::ordered_json;

ordered_json group_to_json(const GroupTable& g) {
  ordered_json j;
  j["order"] = g.order;
  j["labels"] = g.labels;
  std::vector<std::vector<int>> rows(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) rows[x][y] = g.mul(x, y);
  }
  j["table"] = rows;
  return j;
}

ordered_json descriptor_to_json(const KernelDescriptor& d) {
  ordered_json j;
  j["quotient"] = d.iso_label;
  j["index"] = d.index;
  j["images"] = descriptor_image_labels(d);
  return j;
}

KernelDescriptor descriptor_from_json(const nlohmann::json& j) {
  KernelDescriptor d;
  d.iso_label = j.at("quotient").get<std::string>();
  d.index = j.at("index").get<int>();
  const GroupPtr rep = catalog_lookup(d.iso_label);
  for (const auto& label : j.at("images")) {
    d.images.push_back(rep->label_id(label.get<std::string>()));
  }
  return d;
}

namespace {

ordered_json descriptor_array(const std::vector<KernelDescriptor>& ds) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : ds) arr.push_back(descriptor_to_json(d));
  return arr;
}

}  // namespace

ordered_json paper_catalog_to_json(int rank, const PaperIndex8& families) {
  ordered_json j;
  j["k"] = rank;
  j["index"] = 8;
  j["families"]["R"] = descriptor_array(families.r_family);
  j["families"]["D4"] = descriptor_array(families.d4_family);
  j["labeled_counts"]["R_triples"] = families.labeled_triples;
  j["labeled_counts"]["D4_partitions"] = families.labeled_partitions;
  j["formulas"]["index8"] = formula_index8(rank);
  j["formulas"]["R"] = formula_r(rank);
  return j;
}

ordered_json paper_catalog_to_json(int rank, const PaperIndex10& family) {
  ordered_json j;
  j["k"] = rank;
  j["index"] = 10;
  j["families"]["R10"] = descriptor_array(family.family);
  j["labeled_counts"]["R10_partitions"] = family.labeled_partitions;
  j["formulas"]["index10"] = formula_index10(rank);
  return j;
}

ordered_json oracle_catalog_to_json(const OracleResult& result) {
  ordered_json j;
  j["k"] = result.rank;
  j["index"] = result.order;
  ordered_json families = ordered_json::object();
  for (const auto& qc : result.per_group) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : result.descriptors) {
      if (d.iso_label == qc.iso_label) arr.push_back(descriptor_to_json(d));
    }
    families[qc.iso_label] = std::move(arr);
  }
  j["families"] = std::move(families);
  ordered_json counts = ordered_json::object();
  for (const auto& qc : result.per_group) {
    counts[qc.iso_label] = {{"assignments", qc.assignments},
                            {"surjective", qc.surjective},
                            {"descriptors", qc.descriptors},
                            {"automorphisms", qc.automorphisms}};
  }
  j["labeled_counts"] = std::move(counts);
  if (result.order == 8) {
    j["formulas"]["index8"] = formula_index8(result.rank);
    j["formulas"]["R"] = formula_r(result.rank);
  } else if (result.order == 10) {
    j["formulas"]["index10"] = formula_index10(result.rank);
  }
  return j;
}

ordered_json comparison_to_json(const ComparisonReport& report) {
  ordered_json j;
  j["k"] = report.rank;
  j["index"] = report.order;
  j["oracle_count"] = report.oracle_count;
  j["paper_family_count"] = report.paper_family_count;
  j["labeled_count"] = report.labeled_count;
  j["formula_value"] = report.formula_value;
  j["paper_subset_of_oracle"] = report.paper_subset_of_oracle;
  j["oracle_subset_of_paper"] = report.oracle_subset_of_paper;
  j["missing_from_paper"] = descriptor_array(report.missing_from_paper);
  j["notes"] = report.notes;
  return j;
}

}  // namespace gk
