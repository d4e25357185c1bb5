#include "lmss/corpus.hpp"

#include <utility>

#include "lmss/graph_io.hpp"

namespace lmss {

namespace {

struct Entry {
    const char* name;
    const char* edges;
};

// fig1: odd cycle, many local maximum stable sets.
// fig2_*: even cycle (not a greedoid) and triangle (greedoid).
// fig3: bipartite, Ψ not a greedoid, no induced-cycle certificate.
// fig4_*: triangle-free, non-bipartite, 5-cycles.
constexpr Entry kCorpus[] = {
    {"fig1", "a b\nb c\nc d\nd e\nb f\nc g\ng h\nh e\n"},
    {"fig2_G1", "a x\nx c\nc z\nz d\nx b\nb y\nc y\n"},
    {"fig2_G2", "p1 p2\np2 p3\np3 p4\nt1 t2\np2 t1\nt1 p3\np3 t3\n"},
    {"fig3", "a b\nb d\nd f\nc e\ne g\nd e\nf g\n"},
    {"fig4_G1", "w1 w2\nw2 v\nv w3\nw2 w4\nw4 u\nu w3\n"},
    {"fig4_G2", "b1 b2\nb2 b3\nb3 b4\nt1 t2\nt2 t3\nt3 t4\nb1 t2\nb3 t3\n"},
};

}  // namespace

const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : kCorpus) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

Graph corpus(std::string_view name) {
    for (const auto& e : kCorpus)
        if (name == e.name) return parse_edge_list(e.edges);
    throw DomainError("unknown corpus graph '" + std::string(name) + "'");
}

}  // namespace lmss
