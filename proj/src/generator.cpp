#include "lmss/generator.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lmss {

const char* to_string(Parity p) {
    switch (p) {
        case Parity::three: return "three";
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::any: return "any";
    }
    return "?";
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

void validate(const GeneratorSpec& spec) {
    if (spec.vertex_count > kMaxVertices)
        throw DomainError("vertex_count exceeds " + std::to_string(kMaxVertices));
    if (!spec.cycle_length) {
        if (spec.parity != Parity::any)
            throw DomainError("a parity constraint needs a cycle length");
        return;
    }
    const auto k = *spec.cycle_length;
    if (k < 3) throw DomainError("cycle_length must be at least 3");
    if (k > spec.vertex_count) throw DomainError("cycle_length exceeds vertex_count");
    const bool ok = spec.parity == Parity::any ||
                    (spec.parity == Parity::three && k == 3) ||
                    (spec.parity == Parity::even && k % 2 == 0) ||
                    (spec.parity == Parity::odd && k % 2 == 1 && k >= 5);
    if (!ok) throw DomainError("cycle_length inconsistent with parity constraint");
}

Graph generate_random_unicycle(const GeneratorSpec& spec) {
    validate(spec);
    const auto n = spec.vertex_count;
    std::mt19937_64 rng(spec.seed);

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i);
    for (std::size_t i = n; i > 1; --i) std::swap(labels[i - 1], labels[draw_below(rng, i)]);

    std::vector<Edge> edges;
    std::size_t placed = 0;
    if (spec.cycle_length) {
        const auto k = *spec.cycle_length;
        for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
        placed = k;
    } else if (n > 0) {
        placed = 1;
    }
    for (std::size_t v = placed; v < n; ++v) {
        // Disconnected instances start a new tree with probability 1/4.
        if (!spec.connected && draw_below(rng, 4) == 0) continue;
        edges.emplace_back(draw_below(rng, v), v);
    }
    return Graph(std::move(labels), edges);
}

Graph generate_random_graph(std::size_t n, double density, std::uint64_t seed) {
    if (n > kMaxVertices) throw DomainError("vertex_count exceeds " + std::to_string(kMaxVertices));
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(density * 1'000'000.0);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (draw_below(rng, 1'000'000) < threshold) edges.emplace_back(u, v);
    return Graph(std::move(labels), edges);
}

}  // namespace lmss
