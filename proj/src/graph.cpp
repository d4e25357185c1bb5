#include "lmss/graph.hpp"

#include <algorithm>
#include <numeric>

namespace lmss {

namespace {

bool valid_label(const std::string& s) {
    return !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    });
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
    const auto n = labels_.size();
    if (n > kMaxVertices)
        throw DomainError("graph has " + std::to_string(n) + " vertices, representation limit is " +
                          std::to_string(kMaxVertices));
    for (Vertex v = 0; v < n; ++v) {
        if (!valid_label(labels_[v])) throw DomainError("invalid vertex label '" + labels_[v] + "'");
        if (!index_.emplace(labels_[v], v).second)
            throw DomainError("duplicate vertex label '" + labels_[v] + "'");
    }
    adj_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loop at '" + labels_[u] + "'");
        if (adj_[u].contains(v))
            throw DomainError("duplicate edge " + labels_[u] + "-" + labels_[v]);
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++edge_count_;
    }
    by_rank_.resize(n);
    std::iota(by_rank_.begin(), by_rank_.end(), Vertex{0});
    std::sort(by_rank_.begin(), by_rank_.end(),
              [&](Vertex a, Vertex b) { return labels_[a] < labels_[b]; });
    rank_.resize(n);
    for (std::size_t r = 0; r < n; ++r) rank_[by_rank_[r]] = r;
}

Graph Graph::from_labeled_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> seen;
    auto id = [&](const std::string& s) {
        auto [it, fresh] = seen.emplace(s, labels.size());
        if (fresh) labels.push_back(s);
        return it->second;
    };
    std::vector<Edge> idx;
    idx.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto u = id(a);
        idx.emplace_back(u, id(b));
    }
    return Graph(std::move(labels), idx);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::index(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw DomainError("unknown vertex '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (rank_[u] < rank_[v]) out.emplace_back(u, v);
    std::sort(out.begin(), out.end(), [&](const Edge& a, const Edge& b) {
        return std::pair(rank_[a.first], rank_[a.second]) < std::pair(rank_[b.first], rank_[b.second]);
    });
    return out;
}

std::vector<Vertex> Graph::sorted(VertexSet s) const {
    std::vector<Vertex> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    return out;
}

void Graph::require_subset(VertexSet s) const {
    if (!s.subset_of(vertices())) throw DomainError("vertex set has members outside the graph");
}

VertexSet Graph::set_of(const std::vector<std::string>& labels) const {
    VertexSet s;
    for (const auto& l : labels) s.insert(index(l));
    return s;
}

std::vector<std::string> Graph::labels_of(VertexSet s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : sorted(s)) out.push_back(labels_[v]);
    return out;
}

VertexSet Graph::rank_mask(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s) out.insert(rank_[v]);
    return out;
}

bool Graph::canonical_less(VertexSet a, VertexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    // Equal sizes: the sequence holding the least element of the symmetric
    // difference is the lexicographically smaller one.
    VertexSet ra = rank_mask(a), rb = rank_mask(b);
    Mask diff = ra.bits() ^ rb.bits();
    return diff != 0 && ra.contains(VertexSet(diff).front());
}

const char* to_string(CycleParity p) {
    switch (p) {
        case CycleParity::three: return "three";
        case CycleParity::even: return "even";
        case CycleParity::odd: return "odd";
    }
    return "?";
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
    return closed_neighborhood(g, s) - s;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    g.require_subset(s);
    VertexSet out = s;
    for (Vertex v : s) out |= g.neighbors(v);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    g.require_subset(s);
    std::vector<std::string> labels;
    std::vector<Vertex> remap(g.order(), 0);
    for (Vertex v : s) {
        remap[v] = labels.size();
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (Vertex u : s)
        for (Vertex v : g.neighbors(u) & s)
            if (u < v) edges.emplace_back(remap[u], remap[v]);
    return Graph(std::move(labels), edges);
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool is_forest(const Graph& g) {
    return g.edge_count() + components(g).size() == g.order();
}

bool is_bipartite(const Graph& g) {
    for (VertexSet comp : components(g)) {
        VertexSet side[2] = {VertexSet::single(comp.front()), {}};
        VertexSet frontier = side[0];
        int parity = 0;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            if (next.intersects(side[parity])) return false;
            next -= side[1 - parity];
            side[1 - parity] |= next;
            frontier = next;
            parity = 1 - parity;
        }
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

bool is_clique(const Graph& g, VertexSet s) {
    g.require_subset(s);
    for (Vertex v : s)
        if (!(s.without(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

VertexSet pendant_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.insert(v);
    return out;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (is_clique(g, g.neighbors(v))) out.insert(v);
    return out;
}

CycleInfo unique_cycle(const Graph& g) {
    const auto comps = components(g).size();
    if (g.edge_count() + comps == g.order())
        throw CycleError(CycleError::Kind::forest, "graph is a forest");
    if (g.edge_count() + comps != g.order() + 1)
        throw CycleError(CycleError::Kind::not_unicycle, "graph has more than one cycle");

    // Peel vertices of degree <= 1 until only the cycle remains.
    VertexSet core = g.vertices();
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v : core)
            if ((g.neighbors(v) & core).size() <= 1) {
                core.erase(v);
                changed = true;
            }
    }

    Vertex start = g.sorted(core).front();
    auto ends = g.sorted(g.neighbors(start) & core);
    CycleInfo info;
    info.vertices.push_back(start);
    Vertex prev = start, cur = ends.front();
    while (cur != start) {
        info.vertices.push_back(cur);
        VertexSet next = (g.neighbors(cur) & core).without(prev);
        prev = cur;
        cur = next.front();
    }
    info.length = info.vertices.size();
    info.parity = info.length == 3       ? CycleParity::three
                  : info.length % 2 == 0 ? CycleParity::even
                                         : CycleParity::odd;
    return info;
}

}  // namespace lmss
