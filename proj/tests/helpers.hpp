#pragma once

#include <string>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/graph_io.hpp"

namespace testing {

inline lmss::Graph graph(const char* edge_list) { return lmss::parse_edge_list(edge_list); }

inline lmss::VertexSet set(const lmss::Graph& g, std::vector<std::string> labels) {
    return g.set_of(labels);
}

inline std::vector<std::vector<std::string>> labels(const lmss::Graph& g,
                                                    const std::vector<lmss::VertexSet>& sets) {
    std::vector<std::vector<std::string>> out;
    for (auto s : sets) out.push_back(g.labels_of(s));
    return out;
}

// 1-2-3-...-n-1
inline lmss::Graph cycle(std::size_t n) {
    std::string text;
    for (std::size_t i = 1; i <= n; ++i)
        text += std::to_string(i) + " " + std::to_string(i % n + 1) + "\n";
    return lmss::parse_edge_list(text);
}

inline lmss::Graph path(std::size_t n) {
    std::string text;
    for (std::size_t i = 1; i < n; ++i) text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    return lmss::parse_edge_list(text);
}

}  // namespace testing
