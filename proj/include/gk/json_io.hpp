#pragma once

#include "gk/enumerate.hpp"
#include "gk/oracle.hpp"
#include "gk/quotients.hpp"
#include "gk/smallgroup.hpp"

#include <json.hpp>

namespace gk {

// Stable, diff-friendly serialization: ordered keys, descriptor sets sorted.

nlohmann::ordered_json group_to_json(const GroupTable& g);

nlohmann::ordered_json descriptor_to_json(const KernelDescriptor& d);
KernelDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::ordered_json paper_catalog_to_json(int rank, const PaperIndex8& families);
nlohmann::ordered_json paper_catalog_to_json(int rank, const PaperIndex10& family);
nlohmann::ordered_json oracle_catalog_to_json(const OracleResult& result);

nlohmann::ordered_json comparison_to_json(const ComparisonReport& report);

}  // namespace gk
