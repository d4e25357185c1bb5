#include "lmss/classifier.hpp"

#include "lmss/stability.hpp"

namespace lmss {

const char* to_string(Branch b) {
    switch (b) {
        case Branch::forest: return "forest";
        case Branch::k3: return "k3";
        case Branch::even_cycle: return "even_cycle";
        case Branch::odd_cycle: return "odd_cycle";
        case Branch::brute_force: return "brute_force";
    }
    return "?";
}

namespace {

std::optional<std::size_t> cycle_length_of(const Graph& g) {
    try {
        return unique_cycle(g).length;
    } catch (const CycleError&) {
        return std::nullopt;
    }
}

void extend_chordless(const Graph& g, std::vector<Vertex>& path, VertexSet on_path,
                      std::size_t min_length, std::vector<std::vector<Vertex>>& out) {
    const Vertex first = path.front(), last = path.back();
    // Vertices adjacent to an interior path vertex would create a chord.
    VertexSet interior = on_path.without(first).without(last);
    VertexSet blocked;
    for (Vertex v : interior) blocked |= g.neighbors(v);

    for (Vertex w : g.neighbors(last)) {
        if (w < first || on_path.contains(w) || blocked.contains(w)) continue;
        // A neighbour of `first` closes the cycle; keep one orientation.
        if (g.adjacent(w, first)) {
            if (path.size() + 1 >= min_length && path[1] < w) {
                path.push_back(w);
                out.push_back(path);
                path.pop_back();
            }
            continue;
        }
        path.push_back(w);
        extend_chordless(g, path, on_path.with(w), min_length, out);
        path.pop_back();
    }
}

}  // namespace

Verdict classify_unicycle(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.enumeration);
    Verdict v;
    if (is_forest(g)) {
        v.branch = Branch::forest;
        return v;
    }
    const auto cycle = unique_cycle(g);
    v.cycle_length = cycle.length;

    if (cycle.length == 3) {
        v.branch = Branch::k3;
        return v;
    }

    if (cycle.length % 2 == 0) {
        v.branch = Branch::even_cycle;
        if (!is_bipartite(g)) throw InvariantViolation("even unicycle graph is not bipartite");
        auto ur = all_max_matchings_ur(g, limits);
        v.is_greedoid = ur.all_uniquely_restricted;
        if (ur.witness) v.witness = *ur.witness;
        return v;
    }

    v.branch = Branch::odd_cycle;
    if (!all_max_matchings_ur(g, limits).all_uniquely_restricted)
        throw InvariantViolation("graph without even cycles has a non-uniquely-restricted maximum matching");
    const auto psi = enumerate_psi(g, limits);
    v.psi_size = psi.size();
    for (VertexSet s : psi)
        if (!is_konig_egervary_within(g, closed_neighborhood(g, s))) {
            v.is_greedoid = false;
            v.witness = s;
            break;
        }
    return v;
}

Verdict brute_force_greedoid(const Graph& g, const Limits& limits) {
    const auto psi = enumerate_psi(g, limits);
    const auto check = is_greedoid(psi);
    Verdict v;
    v.branch = Branch::brute_force;
    v.is_greedoid = check.is_greedoid;
    v.cycle_length = cycle_length_of(g);
    v.psi_size = psi.size();
    if (check.failed) v.witness = AxiomWitness{*check.failed, check.x, check.y};
    return v;
}

std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, std::size_t min_length) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (Vertex t : g.neighbors(s)) {
            if (t < s) continue;
            std::vector<Vertex> path{s, t};
            extend_chordless(g, path, VertexSet{s, t}, min_length, out);
        }
    }
    return out;
}

PrefilterResult cycle_psi_prefilter(const Graph& g, const Limits& limits) {
    require_order(g.order(), limits.structural);
    for (const auto& cycle : induced_cycles(g, 4)) {
        VertexSet on_cycle;
        for (Vertex v : cycle) on_cycle.insert(v);
        const auto omega = maximum_stable_sets(induced_subgraph(g, on_cycle), limits);
        // Map back from the induced subgraph's indices (ascending order of on_cycle).
        std::vector<Vertex> back(on_cycle.begin(), on_cycle.end());
        for (VertexSet local : omega) {
            VertexSet s;
            for (Vertex i : local) s.insert(back[i]);
            if (is_local_max_stable_within(g, g.vertices(), s)) return {false, s};
        }
    }
    return {};
}

CrossValidation cross_validate(const Graph& g, const Limits& limits) {
    CrossValidation cv{classify_unicycle(g, limits), brute_force_greedoid(g, limits), false};
    cv.agree = cv.classifier.is_greedoid == cv.oracle.is_greedoid;
    return cv;
}

}  // namespace lmss
