#pragma once

#include "ncfusion/decorated.hpp"
#include "ncfusion/fusion.hpp"
#include "ncfusion/partition.hpp"
#include "ncfusion/tensor_map.hpp"

#include "json.hpp"

#include <string>

namespace ncfusion {

using Json = nlohmann::json;

// {"upper": k, "lower": l, "blocks": [["u1","l1"], ...]} in canonical order.
Json partition_to_json(const Partition &p);
Partition partition_from_json(const Json &j);

// Partition JSON plus "upper_labels"/"lower_labels" arrays of element names.
Json decorated_to_json(const Group &g, const DecoratedPartition &d);
DecoratedPartition decorated_from_json(const Group &g, const Json &j);

// [{"word": [...], "mult": m}, ...] in canonical word order.
Json combination_to_json(const Group &g, const RepCombination &c);
RepCombination combination_from_json(const Group &g, const Json &j);

// [{"word": [{"factor": f, "label": [...]}, ...], "mult": m}, ...], factors 1-based.
Json free_combination_to_json(const RingList &rings, const FreeCombination &c);

// {"rows", "cols", "data" (row-major), "legend": [[alpha, i, j], ...]}
Json tensor_map_to_json(const MultiMatrixAlgebra &a, const TensorMap &t);
// Row-major, one line per lower multi-index.
std::string tensor_map_to_csv(const TensorMap &t);
// "alpha,i,j" per basis element in canonical order.
std::string basis_legend_csv(const MultiMatrixAlgebra &a);

Json parse_json_text(const std::string &text, const std::string &what);
std::string read_text_file(const std::string &path);

} // namespace ncfusion
