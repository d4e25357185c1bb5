#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lmss/graph.hpp"

namespace lmss {

/// Names of the built-in example graphs, in listing order.
const std::vector<std::string>& corpus_names();

/// Throws DomainError for an unknown name.
Graph corpus(std::string_view name);

}  // namespace lmss
