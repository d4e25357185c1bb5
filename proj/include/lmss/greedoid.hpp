#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/limits.hpp"
#include "lmss/set_family.hpp"

namespace lmss {

// Axiom checks treat ∅ as an implicit member of every family.

struct AccessibilityCheck {
    bool holds = true;
    std::optional<VertexSet> witness;  // first member (family order) with no removable element
};

struct ExchangeCheck {
    bool holds = true;
    std::optional<std::pair<VertexSet, VertexSet>> witness;  // (X, Y), |X| = |Y| + 1
};

AccessibilityCheck check_accessibility(const SetFamily& family);
ExchangeCheck check_exchange(const SetFamily& family);

enum class Axiom { accessibility, exchange };
const char* to_string(Axiom a);

struct GreedoidCheck {
    bool is_greedoid = true;
    std::optional<Axiom> failed;
    VertexSet x;                  // failing member (accessibility) or X (exchange)
    std::optional<VertexSet> y;   // Y, exchange failures only
};

/// Accessibility first, then exchange; reports the first axiom that fails.
GreedoidCheck is_greedoid(const SetFamily& family);

/// Strictly nested members of Ψ(G) of sizes 1, 2, ..., k.
struct Chain {
    std::vector<VertexSet> steps;

    std::size_t size() const { return steps.size(); }
    VertexSet top() const { return steps.empty() ? VertexSet{} : steps.back(); }
    friend bool operator==(const Chain&, const Chain&) = default;
};

/// Sizes 1..k, each step one vertex larger than the last, every step in
/// Ψ(G), ending at `target`.
bool is_valid_chain(const Graph& g, const Chain& chain, VertexSet target);

/// Depth-first search over removal orders with memoized dead ends. Requires
/// s ∈ Ψ(G) (DomainError otherwise); guarded by limits.structural.
std::optional<Chain> find_accessibility_chain(const Graph& g, VertexSet s,
                                              const Limits& limits = {});

/// Greedy descent for forests: repeatedly drop the first vertex (canonical
/// order) whose removal stays in Ψ(G). Requires a forest and s ∈ Ψ(G);
/// InvariantViolation if the descent stalls.
Chain chain_for_forest(const Graph& g, VertexSet s, const Limits& limits = {});

/// The unique triangle x1 x2 x3 and the trees hanging from it.
struct TriangleDecomposition {
    std::array<Vertex, 3> triangle{};
    std::array<std::vector<VertexSet>, 3> attached;  // T_ij for j >= 1, per triangle vertex
    std::vector<VertexSet> remainder;                 // acyclic components away from the triangle

    /// x_i together with all of its attached trees.
    VertexSet side(std::size_t i) const;
    /// Attached trees of x_i, without x_i.
    VertexSet hanging(std::size_t i) const;
    VertexSet remainder_vertices() const;
};

/// Requires the unique cycle of g to be a triangle (CycleError / DomainError otherwise).
TriangleDecomposition decompose_triangle(const Graph& g);

struct TriangleChain {
    Chain chain;
    bool meets_triangle = false;  // s contains a triangle vertex
    std::size_t peeled = 0;       // vertices removed one at a time inside x1's side
    std::size_t repairs = 0;      // steps where a chain of G - {x1,x2,x3} left Ψ(G)
};

/// Builds an accessibility chain following the constructive argument for a
/// triangle as the unique cycle, checking each promised membership at runtime.
///
/// The argument transfers chains of the forest G - {x1,x2,x3} to G unchanged;
/// that fails when a chain member touches x2 or x3 (triangle x1x2x3, path
/// x2-a-b, S = {x1,a}: {a} is not in Ψ(G)). Such steps are replaced by a
/// removal that stays in Ψ(G) and counted in `repairs`.
///
/// Requires s ∈ Ψ(G); InvariantViolation if a promised membership fails or
/// no repair step exists.
TriangleChain chain_via_triangle(const Graph& g, VertexSet s, const Limits& limits = {});

}  // namespace lmss
