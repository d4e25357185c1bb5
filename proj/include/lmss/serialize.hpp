#pragma once

#include <vector>

#include "json.hpp"
#include "lmss/classifier.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/matching.hpp"
#include "lmss/set_family.hpp"

namespace lmss {

using Json = nlohmann::json;

/// Sorted label array.
Json to_json(const Graph& g, VertexSet s);
/// Array of sorted label arrays, in family order.
Json to_json(const Graph& g, const SetFamily& family);
/// Sorted array of sorted label pairs.
Json to_json(const Graph& g, const Matching& m);
/// Ascending array of sorted label arrays.
Json to_json(const Graph& g, const Chain& chain);
/// {is_greedoid, branch, cycle_length, witness, psi_size}
Json to_json(const Graph& g, const Verdict& v);
Json to_json(const Graph& g, const Witness& w);

}  // namespace lmss
