#include "lmss/matching.hpp"

#include <algorithm>

#include "lmss/stability.hpp"

namespace lmss {

namespace {

void validate(const Graph& g, const Matching& m) {
    VertexSet seen;
    for (auto [u, v] : m.edges()) {
        if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            throw DomainError("matching contains a pair that is not an edge");
        if (seen.contains(u) || seen.contains(v))
            throw DomainError("matching edges share a vertex");
        seen.insert(u);
        seen.insert(v);
    }
}

void matching_search(const Graph& g, VertexSet avail, std::size_t taken, std::size_t& best) {
    if (taken + avail.size() / 2 <= best) return;
    if (avail.empty()) {
        best = taken;
        return;
    }
    Vertex v = avail.front();
    for (Vertex u : g.neighbors(v) & avail)
        matching_search(g, avail.without(u).without(v), taken + 1, best);
    matching_search(g, avail.without(v), taken, best);
}

struct MatchingEnumerator {
    const Graph& g;
    const std::vector<Edge>& edges;
    std::size_t target;
    std::vector<Edge> chosen;
    std::vector<std::vector<Edge>> out;

    void run(std::size_t i, VertexSet used) {
        if (chosen.size() == target) {
            out.push_back(chosen);
            return;
        }
        if (i == edges.size()) return;
        VertexSet live;
        for (std::size_t j = i; j < edges.size(); ++j) {
            auto [u, v] = edges[j];
            if (!used.contains(u) && !used.contains(v)) {
                live.insert(u);
                live.insert(v);
            }
        }
        if (chosen.size() + live.size() / 2 < target) return;
        auto [u, v] = edges[i];
        if (!used.contains(u) && !used.contains(v)) {
            chosen.push_back(edges[i]);
            run(i + 1, used.with(u).with(v));
            chosen.pop_back();
        }
        run(i + 1, used);
    }
};

struct CycleSearch {
    const Graph& g;
    std::vector<Vertex> mate;
    VertexSet saturated;
    Vertex start = 0;
    std::vector<Vertex> path;

    // `path` ends at a vertex entered through its matched edge.
    bool extend(VertexSet allowed) {
        Vertex x = path.back();
        VertexSet next = g.neighbors(x) & saturated;
        next.erase(mate[x]);
        if (path.size() >= 4 && next.contains(start)) return true;
        for (Vertex y : next & allowed) {
            Vertex z = mate[y];
            if (!allowed.contains(z)) continue;
            path.push_back(y);
            path.push_back(z);
            if (extend(allowed.without(y).without(z))) return true;
            path.pop_back();
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

Matching::Matching(const Graph& g, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u >= g.order() || v >= g.order()) throw DomainError("matching endpoint out of range");
        if (g.rank(v) < g.rank(u)) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        return std::pair(g.rank(a.first), g.rank(a.second)) <
               std::pair(g.rank(b.first), g.rank(b.second));
    });
    edges_ = std::move(edges);
    validate(g, *this);
}

Matching Matching::from_labels(const Graph& g,
                               const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<Edge> idx;
    for (const auto& [a, b] : edges) idx.emplace_back(g.index(a), g.index(b));
    return Matching(g, std::move(idx));
}

VertexSet Matching::saturated() const {
    VertexSet s;
    for (auto [u, v] : edges_) s |= VertexSet{u, v};
    return s;
}

std::size_t matching_number_within(const Graph& g, VertexSet within) {
    std::size_t best = 0;
    matching_search(g, within & g.vertices(), 0, best);
    return best;
}

std::size_t matching_number(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.structural);
    return matching_number_within(g, g.vertices());
}

std::vector<Matching> maximum_matchings(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.enumeration);
    const auto edges = g.edges();
    MatchingEnumerator e{g, edges, matching_number_within(g, g.vertices()), {}, {}};
    e.run(0, {});
    std::vector<Matching> out;
    out.reserve(e.out.size());
    for (auto& m : e.out) out.emplace_back(g, std::move(m));
    return out;
}

std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m) {
    validate(g, m);
    CycleSearch search{g, std::vector<Vertex>(g.order(), 0), m.saturated(), 0, {}};
    for (auto [u, v] : m.edges()) {
        search.mate[u] = v;
        search.mate[v] = u;
    }
    // Each cycle is found from its lowest-index vertex, leaving through the
    // matched edge; everything else on the cycle has a larger index.
    for (Vertex s : search.saturated) {
        VertexSet allowed = VertexSet(search.saturated.bits() & ~((Mask{2} << s) - 1));
        Vertex t = search.mate[s];
        search.start = s;
        search.path = {s, t};
        if (search.extend(allowed.without(t))) return search.path;
    }
    return std::nullopt;
}

bool is_uniquely_restricted(const Graph& g, const Matching& m) {
    return !find_alternating_cycle(g, m).has_value();
}

std::size_t count_perfect_matchings(const Graph& g, VertexSet within, std::size_t cap) {
    if (within.empty()) return 1;
    Vertex v = within.front();
    std::size_t total = 0;
    for (Vertex u : g.neighbors(v) & within) {
        total += count_perfect_matchings(g, within.without(v).without(u), cap - total);
        if (total >= cap) break;
    }
    return total;
}

bool is_uniquely_restricted_oracle(const Graph& g, const Matching& m, const Limits& limits) {
    validate(g, m);
    const VertexSet sat = m.saturated();
    require_order(sat.size(), limits.structural);
    return count_perfect_matchings(g, sat, 2) == 1;
}

UniquelyRestrictedSummary all_max_matchings_ur(const Graph& g, const Limits& limits,
                                               bool exhaustive) {
    UniquelyRestrictedSummary summary;
    for (auto& m : maximum_matchings(g, limits)) {
        if (is_uniquely_restricted(g, m)) continue;
        summary.all_uniquely_restricted = false;
        if (!summary.witness) summary.witness = m;
        if (!exhaustive) break;
        summary.failures.push_back(std::move(m));
    }
    return summary;
}

bool is_konig_egervary_within(const Graph& g, VertexSet within) {
    within &= g.vertices();
    return stability_number_within(g, within) + matching_number_within(g, within) == within.size();
}

bool is_konig_egervary(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.structural);
    return is_konig_egervary_within(g, g.vertices());
}

}  // namespace lmss
