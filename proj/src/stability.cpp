#include "lmss/stability.hpp"

#include <algorithm>

namespace lmss {

namespace {

// Greedy partition of `cand` into cliques; the count bounds α(G[cand]).
std::size_t clique_cover_bound(const Graph& g, VertexSet cand) {
    VertexSet cliques[kMaxVertices];
    std::size_t used = 0;
    for (Vertex v : cand) {
        std::size_t c = 0;
        while (c < used && !cliques[c].subset_of(g.neighbors(v))) ++c;
        if (c == used) cliques[used++] = VertexSet{};
        cliques[c].insert(v);
    }
    return used;
}

void max_stable_search(const Graph& g, VertexSet cand, std::size_t taken, std::size_t& best) {
    for (;;) {
        if (cand.empty()) {
            best = std::max(best, taken);
            return;
        }
        if (taken + cand.size() <= best) return;
        // A vertex of degree <= 1 always belongs to some maximum stable set.
        Vertex pick = cand.front();
        std::size_t pick_deg = 0;
        bool reduced = false;
        for (Vertex v : cand) {
            auto d = (g.neighbors(v) & cand).size();
            if (d <= 1) {
                cand -= g.neighbors(v).with(v);
                ++taken;
                reduced = true;
                break;
            }
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (reduced) continue;
        if (taken + clique_cover_bound(g, cand) <= best) return;
        max_stable_search(g, cand - g.neighbors(pick).with(pick), taken + 1, best);
        cand.erase(pick);
    }
}

void stable_sets_of_size(const Graph& g, VertexSet cand, VertexSet chosen, std::size_t target,
                         std::vector<VertexSet>& out) {
    if (chosen.size() == target) {
        out.push_back(chosen);
        return;
    }
    if (cand.empty() || chosen.size() + clique_cover_bound(g, cand) < target) return;
    Vertex v = cand.front();
    stable_sets_of_size(g, cand - g.neighbors(v).with(v), chosen.with(v), target, out);
    stable_sets_of_size(g, cand.without(v), chosen, target, out);
}

void stable_walk(const Graph& g, VertexSet cand, VertexSet chosen,
                 const std::function<void(VertexSet)>& visit) {
    while (!cand.empty()) {
        Vertex v = cand.front();
        cand.erase(v);
        VertexSet next = chosen.with(v);
        visit(next);
        stable_walk(g, cand - g.neighbors(v), next, visit);
    }
}

std::vector<VertexSet> all_stable_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_stable_set(g, g.vertices(), [&](VertexSet s) { out.push_back(s); });
    return out;
}

}  // namespace

bool is_stable(const Graph& g, VertexSet s) {
    g.require_subset(s);
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

std::size_t stability_number_within(const Graph& g, VertexSet within) {
    std::size_t best = 0;
    max_stable_search(g, within & g.vertices(), 0, best);
    return best;
}

std::size_t stability_number(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.structural);
    return stability_number_within(g, g.vertices());
}

SetFamily maximum_stable_sets(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.structural);
    std::vector<VertexSet> out;
    stable_sets_of_size(g, g.vertices(), {}, stability_number_within(g, g.vertices()), out);
    return SetFamily(g, std::move(out));
}

void for_each_stable_set(const Graph& g, VertexSet within,
                         const std::function<void(VertexSet)>& visit) {
    stable_walk(g, within & g.vertices(), {}, visit);
}

bool is_local_max_stable_within(const Graph& g, VertexSet host, VertexSet s) {
    if (s.empty() || !s.subset_of(host)) return false;
    VertexSet closed = s;
    for (Vertex v : s) {
        if (g.neighbors(v).intersects(s)) return false;
        closed |= g.neighbors(v);
    }
    closed &= host;
    // Members of s have no neighbours in s, so the stable set s itself
    // certifies α(G[closed]) >= |s|; the search only has to beat it.
    std::size_t best = s.size();
    max_stable_search(g, closed, 0, best);
    return best == s.size();
}

bool is_local_max_stable(const Graph& g, VertexSet s, const Limits& limits) {
    require_order(g.order(), limits.structural);
    g.require_subset(s);
    return is_local_max_stable_within(g, g.vertices(), s);
}

SetFamily enumerate_psi(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.enumeration);
    const auto stable = all_stable_sets(g);
    const auto count = static_cast<std::ptrdiff_t>(stable.size());
    const VertexSet host = g.vertices();
    std::vector<char> member(stable.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        member[i] = is_local_max_stable_within(g, host, stable[i]) ? 1 : 0;
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < stable.size(); ++i)
        if (member[i]) out.push_back(stable[i]);
    return SetFamily(g, std::move(out));
}

SetFamily enumerate_psi_serial(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.enumeration);
    std::vector<VertexSet> out;
    for (VertexSet s : all_stable_sets(g))
        if (is_local_max_stable_within(g, g.vertices(), s)) out.push_back(s);
    return SetFamily(g, std::move(out));
}

bool extends_to_maximum(const Graph& g, VertexSet s, const Limits& limits) {
    if (!is_local_max_stable(g, s, limits))
        throw DomainError("extends_to_maximum requires a local maximum stable set");
    const auto omega = maximum_stable_sets(g, limits);
    return std::any_of(omega.begin(), omega.end(), [&](VertexSet m) { return s.subset_of(m); });
}

}  // namespace lmss
