#pragma once

// JSON mirrors of tables, reports and Hom tables.
// Table schema: {n, d, ring_tag, normalization,
//                entries: [{degree, eigen_exp, eigen_exp_mod_m?, labels: {partition: coeff}}]}

#include <json.hpp>

#include "dlcoh/cohomology.hpp"
#include "dlcoh/report.hpp"
#include "dlcoh/tilting.hpp"

namespace dlcoh {

using Json = nlohmann::ordered_json;

Json to_json(const VirtualChar& v);
VirtualChar virtual_char_from_json(const Json& j, int rank);

Json to_json(const CohomologyTable& t);
// Recovers n, d, ring, normalization and the graded table.
CohomologyTable table_from_json(const Json& j);

Json to_json(const Report& r);
Json to_json(const HomDimTable& t);

std::string to_string(Normalization n);
Normalization normalization_from_string(const std::string& s);
RingTag ring_tag_from_string(const std::string& s);

}  // namespace dlcoh
