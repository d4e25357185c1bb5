#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "lmss/graph.hpp"

namespace lmss {

enum class Parity { three, even, odd, any };
const char* to_string(Parity p);

/// What to generate. cycle_length == nullopt asks for a forest.
struct GeneratorSpec {
    std::size_t vertex_count = 0;
    std::optional<std::size_t> cycle_length;
    Parity parity = Parity::any;
    std::uint64_t seed = 0;
    bool connected = true;
};

/// Throws DomainError when the spec cannot be satisfied.
void validate(const GeneratorSpec& spec);

/// Seeded random forest or unicycle graph. With a cycle length k, the cycle is
/// built first on k random labels and the remaining vertices are attached one
/// at a time to a uniformly chosen earlier vertex (or, when disconnected, may
/// start a new tree). Labels v0..v{n-1} are shuffled over positions.
/// Deterministic in the spec across standard libraries.
Graph generate_random_unicycle(const GeneratorSpec& spec);

/// Seeded arbitrary graph: each pair is an edge with probability `density`.
Graph generate_random_graph(std::size_t n, double density, std::uint64_t seed);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z);
/// Seed of instance `index` in a campaign: mix64(master + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index);

/// Uniform draw in [0, bound) by rejection, independent of the standard
/// library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace lmss
