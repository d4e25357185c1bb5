#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/limits.hpp"
#include "lmss/matching.hpp"

namespace lmss {

enum class Branch { forest, k3, even_cycle, odd_cycle, brute_force };
const char* to_string(Branch b);

struct AxiomWitness {
    Axiom axiom = Axiom::accessibility;
    VertexSet x;
    std::optional<VertexSet> y;
    friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

/// Why Ψ(G) is not a greedoid: a maximum matching that is not uniquely
/// restricted (even cycle), a member of Ψ(G) whose closed neighbourhood is
/// not König-Egerváry (odd cycle), or a failing axiom (brute force).
using Witness = std::variant<std::monostate, Matching, VertexSet, AxiomWitness>;

struct Verdict {
    bool is_greedoid = true;
    Branch branch = Branch::forest;
    std::optional<std::size_t> cycle_length;
    Witness witness;
    std::optional<std::size_t> psi_size;  // set only where Ψ(G) was enumerated
};

/// Decides whether Ψ(G) is a greedoid for a forest or a graph with exactly
/// one cycle, by the cycle length:
///   3          always;
///   even >= 4  iff every maximum matching is uniquely restricted;
///   odd >= 5   iff N[S] induces a König-Egerváry graph for every S ∈ Ψ(G).
/// Never consults the brute-force path. Throws CycleError on graphs with two
/// or more cycles, SizeLimitError past limits.enumeration.
Verdict classify_unicycle(const Graph& g, const Limits& limits = {});

/// Enumerates Ψ(G) and checks both greedoid axioms directly.
Verdict brute_force_greedoid(const Graph& g, const Limits& limits = {});

/// Every induced cycle of g with at least `min_length` vertices, each listed
/// from its lowest index.
std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, std::size_t min_length);

struct PrefilterResult {
    bool passes = true;               // true is inconclusive
    std::optional<VertexSet> witness;  // S ∈ Ω(C_k) ∩ Ψ(G): Ψ(G) is not a greedoid
};

/// Searches the induced cycles of length >= 4 for a maximum stable set of
/// the cycle that is also in Ψ(G). Guarded by limits.structural.
PrefilterResult cycle_psi_prefilter(const Graph& g, const Limits& limits = {});

struct CrossValidation {
    Verdict classifier;
    Verdict oracle;
    bool agree = false;
};

CrossValidation cross_validate(const Graph& g, const Limits& limits = {});

}  // namespace lmss
