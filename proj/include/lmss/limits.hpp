#pragma once

#include <cstddef>

#include "lmss/errors.hpp"

namespace lmss {

/// Hard cap imposed by the 64-bit vertex set representation.
inline constexpr std::size_t kMaxVertices = 64;

struct Limits {
    std::size_t structural = 24;   // α, μ, predicates, single-set queries
    std::size_t enumeration = 14;  // whole-family enumeration of Ψ(G) or of maximum matchings
};

inline void require_order(std::size_t order, std::size_t limit) {
    if (order > limit) throw SizeLimitError(order, limit);
}

}  // namespace lmss
