#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/limits.hpp"

namespace lmss {

/// Set of pairwise vertex-disjoint edges of a graph, stored canonically:
/// each edge with its endpoints in label order, edges sorted by label pairs.
class Matching {
public:
    Matching() = default;
    /// Throws DomainError if some pair is not an edge of g or two pairs share a vertex.
    Matching(const Graph& g, std::vector<Edge> edges);
    static Matching from_labels(const Graph& g,
                                const std::vector<std::pair<std::string, std::string>>& edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    VertexSet saturated() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Edge> edges_;
};

/// μ(G[within]). No size guard.
std::size_t matching_number_within(const Graph& g, VertexSet within);
/// μ(G). Guarded by limits.structural.
std::size_t matching_number(const Graph& g, const Limits& limits = {});

/// Every matching of size μ(G), in canonical order. Guarded by limits.enumeration.
std::vector<Matching> maximum_matchings(const Graph& g, const Limits& limits = {});

/// An m-alternating cycle of g, or nothing. The cycle starts with a matched
/// edge: c[0]c[1] ∈ m, c[1]c[2] ∉ m, and so on, closing with c.back()c[0] ∉ m.
/// Throws DomainError if m is not a matching of g.
std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m);

/// No m-alternating cycle exists.
bool is_uniquely_restricted(const Graph& g, const Matching& m);

/// Perfect matchings of g[within], counting stops once `cap` is reached.
std::size_t count_perfect_matchings(const Graph& g, VertexSet within, std::size_t cap);

/// Independent check: m is the only perfect matching of the subgraph induced
/// by the vertices it saturates. Guarded by limits.structural on that subgraph.
bool is_uniquely_restricted_oracle(const Graph& g, const Matching& m, const Limits& limits = {});

struct UniquelyRestrictedSummary {
    bool all_uniquely_restricted = true;
    std::optional<Matching> witness;  // first failing maximum matching
    std::vector<Matching> failures;   // every failing one, exhaustive mode only
};

/// Whether every maximum matching of g is uniquely restricted. Stops at the
/// first failure unless `exhaustive`. Guarded by limits.enumeration.
UniquelyRestrictedSummary all_max_matchings_ur(const Graph& g, const Limits& limits = {},
                                               bool exhaustive = false);

/// α + μ = |V| for g[within]. No size guard.
bool is_konig_egervary_within(const Graph& g, VertexSet within);
/// Guarded by limits.structural.
bool is_konig_egervary(const Graph& g, const Limits& limits = {});

}  // namespace lmss
