#include "lmss/greedoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "lmss/stability.hpp"

namespace lmss {

const char* to_string(Axiom a) {
    return a == Axiom::accessibility ? "accessibility" : "exchange";
}

AccessibilityCheck check_accessibility(const SetFamily& family) {
    for (VertexSet x : family) {
        bool removable = false;
        for (Vertex v : x)
            if (family.contains_or_empty(x.without(v))) {
                removable = true;
                break;
            }
        if (!removable) return {false, x};
    }
    return {};
}

ExchangeCheck check_exchange(const SetFamily& family) {
    std::map<std::size_t, std::vector<VertexSet>> by_size;
    for (VertexSet s : family) by_size[s.size()].push_back(s);
    for (VertexSet x : family) {
        auto smaller = by_size.find(x.size() - 1);
        if (smaller == by_size.end()) continue;  // Y = ∅ is always augmentable
        for (VertexSet y : smaller->second) {
            bool augmentable = false;
            for (Vertex v : x - y)
                if (family.contains(y.with(v))) {
                    augmentable = true;
                    break;
                }
            if (!augmentable) return {false, std::pair(x, y)};
        }
    }
    return {};
}

GreedoidCheck is_greedoid(const SetFamily& family) {
    if (auto acc = check_accessibility(family); !acc.holds)
        return {false, Axiom::accessibility, *acc.witness, std::nullopt};
    if (auto ex = check_exchange(family); !ex.holds)
        return {false, Axiom::exchange, ex.witness->first, ex.witness->second};
    return {};
}

bool is_valid_chain(const Graph& g, const Chain& chain, VertexSet target) {
    if (chain.steps.empty() || chain.top() != target) return false;
    VertexSet prev;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        VertexSet step = chain.steps[i];
        if (step.size() != i + 1 || !prev.subset_of(step) || !step.subset_of(g.vertices()))
            return false;
        if (!is_local_max_stable_within(g, g.vertices(), step)) return false;
        prev = step;
    }
    return true;
}

namespace {

void require_psi_member(const Graph& g, VertexSet s, const Limits& limits, const char* op) {
    require_order(g.order(), limits.structural);
    g.require_subset(s);
    if (!is_local_max_stable_within(g, g.vertices(), s))
        throw DomainError(std::string(op) + " requires a local maximum stable set");
}

using Accept = std::function<bool(VertexSet)>;

// Descending walk from s inside Ψ(G[host]); each step drops the first vertex
// in canonical order whose removal keeps the set in Ψ(G[host]) and passes
// `accept`. Returns the ascending chain. `overridden` counts steps where the
// first Ψ(G[host]) candidate was rejected by `accept`.
std::optional<Chain> descend(const Graph& g, VertexSet host, VertexSet s, const Accept& accept,
                             std::size_t* overridden = nullptr) {
    std::vector<VertexSet> down{s};
    for (VertexSet cur = s; cur.size() > 1;) {
        bool moved = false, rejected = false;
        for (Vertex v : g.sorted(cur)) {
            VertexSet next = cur.without(v);
            if (!is_local_max_stable_within(g, host, next)) continue;
            if (!accept(next)) {
                rejected = true;
                continue;
            }
            down.push_back(next);
            cur = next;
            moved = true;
            break;
        }
        if (!moved) return std::nullopt;
        if (rejected && overridden) ++*overridden;
    }
    return Chain{{down.rbegin(), down.rend()}};
}

}  // namespace

std::optional<Chain> find_accessibility_chain(const Graph& g, VertexSet s, const Limits& limits) {
    require_psi_member(g, s, limits, "find_accessibility_chain");
    std::unordered_map<VertexSet, bool, VertexSetHash> in_psi;
    std::unordered_set<VertexSet, VertexSetHash> dead;
    auto member = [&](VertexSet x) {
        auto [it, fresh] = in_psi.try_emplace(x, false);
        if (fresh) it->second = is_local_max_stable_within(g, g.vertices(), x);
        return it->second;
    };
    std::vector<VertexSet> down{s};
    std::function<bool(VertexSet)> reach = [&](VertexSet cur) {
        if (cur.size() == 1) return true;
        if (dead.count(cur)) return false;
        for (Vertex v : g.sorted(cur)) {
            VertexSet next = cur.without(v);
            if (!member(next)) continue;
            down.push_back(next);
            if (reach(next)) return true;
            down.pop_back();
        }
        dead.insert(cur);
        return false;
    };
    if (!reach(s)) return std::nullopt;
    return Chain{{down.rbegin(), down.rend()}};
}

Chain chain_for_forest(const Graph& g, VertexSet s, const Limits& limits) {
    if (!is_forest(g)) throw DomainError("chain_for_forest requires a forest");
    require_psi_member(g, s, limits, "chain_for_forest");
    auto chain = descend(g, g.vertices(), s, [](VertexSet) { return true; });
    if (!chain) throw InvariantViolation("forest descent found no removable vertex");
    return *chain;
}

VertexSet TriangleDecomposition::hanging(std::size_t i) const {
    VertexSet out;
    for (VertexSet t : attached[i]) out |= t;
    return out;
}

VertexSet TriangleDecomposition::side(std::size_t i) const {
    return hanging(i).with(triangle[i]);
}

VertexSet TriangleDecomposition::remainder_vertices() const {
    VertexSet out;
    for (VertexSet r : remainder) out |= r;
    return out;
}

TriangleDecomposition decompose_triangle(const Graph& g) {
    const auto cycle = unique_cycle(g);
    if (cycle.length != 3) throw DomainError("the unique cycle is not a triangle");
    TriangleDecomposition d;
    std::copy(cycle.vertices.begin(), cycle.vertices.end(), d.triangle.begin());
    const VertexSet tri{d.triangle[0], d.triangle[1], d.triangle[2]};
    for (VertexSet comp : components(g, g.vertices() - tri)) {
        VertexSet touching;
        for (Vertex v : comp) touching |= g.neighbors(v) & tri;
        if (touching.empty()) {
            d.remainder.push_back(comp);
            continue;
        }
        for (std::size_t i = 0; i < 3; ++i)
            if (touching.contains(d.triangle[i])) d.attached[i].push_back(comp);
    }
    return d;
}

TriangleChain chain_via_triangle(const Graph& g, VertexSet s, const Limits& limits) {
    const auto d = decompose_triangle(g);
    require_psi_member(g, s, limits, "chain_via_triangle");

    const VertexSet all = g.vertices();
    const VertexSet tri{d.triangle[0], d.triangle[1], d.triangle[2]};
    const VertexSet forest = all - tri;
    auto in_psi = [&](VertexSet x) { return is_local_max_stable_within(g, all, x); };
    auto check = [](bool ok, const char* what) {
        if (!ok) throw InvariantViolation(std::string("triangle construction: ") + what);
    };

    TriangleChain result;
    // Forest chains are taken inside T = G - {x1,x2,x3}. A member of Ψ(T)
    // adjacent to x2 or x3 need not lie in Ψ(G), so every step is also
    // required to be in Ψ(G); steps where that requirement changed the
    // choice are counted as repairs.
    auto forest_chain = [&](VertexSet base) {
        check(is_local_max_stable_within(g, forest, base), "set is not in Ψ(G - C3)");
        auto chain = descend(g, forest, base, in_psi, &result.repairs);
        check(chain.has_value(), "no step of the forest descent stays in Ψ(G)");
        return std::move(*chain);
    };

    if (!s.intersects(tri)) {
        result.chain = forest_chain(s);
        check(is_valid_chain(g, result.chain, s), "chain failed validation");
        return result;
    }

    result.meets_triangle = true;
    std::size_t i1 = 0;
    while (!s.contains(d.triangle[i1])) ++i1;
    const Vertex x1 = d.triangle[i1];
    const VertexSet side1 = d.side(i1);

    for (std::size_t i = 0; i < 3; ++i) {
        if (i == i1) continue;
        VertexSet part = s & d.hanging(i);
        check(part.empty() || is_local_max_stable_within(g, d.hanging(i), part),
              "S_i is not in Ψ(G_i)");
    }
    for (VertexSet r : d.remainder) {
        VertexSet part = s & r;
        check(part.empty() || is_local_max_stable_within(g, r, part),
              "remainder part is not local maximum");
    }
    check(is_local_max_stable_within(g, side1, s & side1), "S_1 is not in Ψ(G_1)");

    // Descend from s, always keeping x1, until x1 can be taken last.
    std::vector<VertexSet> down{s};
    for (VertexSet cur = s;;) {
        const VertexSet cur1 = cur & side1;
        const VertexSet without_x1 = cur.without(x1);
        std::optional<Vertex> pick;
        if ((cur1.size() == 1 || is_local_max_stable_within(g, side1, cur1.without(x1)))) {
            // S_1 - {x1} ∈ Ψ(G_1): x1 goes last, below it a forest chain.
            if (without_x1.empty() || in_psi(without_x1)) {
                Chain lower;
                if (!without_x1.empty()) lower = forest_chain(without_x1);
                lower.steps.insert(lower.steps.end(), down.rbegin(), down.rend());
                result.chain = std::move(lower);
                break;
            }
            // (S_1 - {x1}) ∪ S_2 ∪ S_3 fell out of Ψ(G) through a neighbour of
            // x2 or x3: drop some other vertex first.
            for (Vertex v : g.sorted(without_x1))
                if (in_psi(cur.without(v))) {
                    pick = v;
                    break;
                }
            check(pick.has_value(), "no vertex other than x1 is removable");
            ++result.repairs;
        } else {
            // S_1 - {x1} ∉ Ψ(G_1): drop the first v ≠ x1 with S_1 - {v} ∈ Ψ(G_1).
            for (Vertex v : g.sorted(cur1.without(x1)))
                if (is_local_max_stable_within(g, side1, cur1.without(v))) {
                    pick = v;
                    break;
                }
            check(pick.has_value(), "no removable vertex in Ψ(G_1)");
            check(in_psi(cur.without(*pick)), "(S_1 - v) ∪ S_2 ∪ S_3 is not in Ψ(G)");
            ++result.peeled;
        }
        cur.erase(*pick);
        down.push_back(cur);
    }
    check(is_valid_chain(g, result.chain, s), "chain failed validation");
    return result;
}

}  // namespace lmss
