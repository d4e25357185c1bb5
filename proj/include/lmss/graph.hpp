#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lmss/errors.hpp"
#include "lmss/limits.hpp"
#include "lmss/vertex_set.hpp"

namespace lmss {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph with string labels.
///
/// Vertices are indexed in declaration order. A second, lexicographic order
/// over labels (the "canonical" order) drives every deterministic output:
/// enumeration order, witness choice, serialization.
class Graph {
public:
    Graph() = default;

    /// Throws DomainError on empty/whitespace/duplicate labels, self-loops,
    /// duplicate edges, endpoints out of range, or more than kMaxVertices.
    Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    /// Vertices in first-appearance order across `edges`.
    static Graph from_labeled_edges(const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t order() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    /// Throws DomainError for an unknown label.
    Vertex index(std::string_view label) const;

    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    VertexSet vertices() const { return VertexSet::prefix(order()); }

    /// Edges with endpoints ordered canonically, sorted canonically.
    std::vector<Edge> edges() const;

    /// Position of v in the lexicographic label order.
    std::size_t rank(Vertex v) const { return rank_[v]; }
    /// Vertex indices in lexicographic label order.
    const std::vector<Vertex>& canonical_order() const { return by_rank_; }
    /// Members of s in canonical order.
    std::vector<Vertex> sorted(VertexSet s) const;

    /// Throws DomainError if s has members outside this graph.
    void require_subset(VertexSet s) const;
    VertexSet set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(VertexSet s) const;

    /// s re-expressed over lexicographic ranks instead of indices.
    VertexSet rank_mask(VertexSet s) const;
    /// Size first, then lexicographic on the sorted label sequences.
    bool canonical_less(VertexSet a, VertexSet b) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<VertexSet> adj_;
    std::vector<std::size_t> rank_;
    std::vector<Vertex> by_rank_;
    std::size_t edge_count_ = 0;
};

enum class CycleParity { three, even, odd };

const char* to_string(CycleParity p);

struct CycleInfo {
    std::vector<Vertex> vertices;  // cyclic order, canonical rotation and direction
    std::size_t length = 0;
    CycleParity parity = CycleParity::three;
};

/// Raised by unique_cycle when the graph has no cycle or more than one.
class CycleError : public DomainError {
public:
    enum class Kind { forest, not_unicycle };
    CycleError(Kind kind, const std::string& what) : DomainError(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Neighborhoods. Members of s must belong to g (DomainError otherwise).
VertexSet neighborhood(const Graph& g, VertexSet s);
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

Graph induced_subgraph(const Graph& g, VertexSet s);

/// Connected components of g[within], each as a vertex set, ordered by lowest index.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
VertexSet pendant_vertices(const Graph& g);
VertexSet simplicial_vertices(const Graph& g);

/// The single cycle of g. Throws CycleError(forest) on acyclic input and
/// CycleError(not_unicycle) when there are two or more cycles.
CycleInfo unique_cycle(const Graph& g);

}  // namespace lmss
