#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/limits.hpp"
#include "lmss/set_family.hpp"

namespace lmss {

bool is_stable(const Graph& g, VertexSet s);

/// α(G[within]) by branch and bound with a greedy clique-cover bound. No size guard.
std::size_t stability_number_within(const Graph& g, VertexSet within);

/// α(G). Guarded by limits.structural.
std::size_t stability_number(const Graph& g, const Limits& limits = {});

/// Ω(G), canonical order. Guarded by limits.structural.
SetFamily maximum_stable_sets(const Graph& g, const Limits& limits = {});

/// Visits every nonempty stable subset of `within`, each exactly once.
void for_each_stable_set(const Graph& g, VertexSet within,
                         const std::function<void(VertexSet)>& visit);

/// s ∈ Ψ(G[host]): s is stable and maximum inside host ∩ N[s].
/// The empty set is not a member.
bool is_local_max_stable_within(const Graph& g, VertexSet host, VertexSet s);

/// s ∈ Ψ(G). Guarded by limits.structural.
bool is_local_max_stable(const Graph& g, VertexSet s, const Limits& limits = {});

/// Ψ(G) without ∅, canonical order. The membership tests run as an OpenMP
/// parallel loop. Guarded by limits.enumeration.
SetFamily enumerate_psi(const Graph& g, const Limits& limits = {});

/// Serial reference for enumerate_psi; identical output.
SetFamily enumerate_psi_serial(const Graph& g, const Limits& limits = {});

/// Whether some maximum stable set of g contains s. Requires s ∈ Ψ(G)
/// (DomainError otherwise); guarded by limits.structural.
bool extends_to_maximum(const Graph& g, VertexSet s, const Limits& limits = {});

}  // namespace lmss
