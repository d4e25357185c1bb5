#include "lmss/set_family.hpp"

#include <algorithm>

namespace lmss {

template <class Key>
void SetFamily::build(std::vector<VertexSet> sets, Key key) {
    std::erase_if(sets, [](VertexSet s) { return s.empty(); });
    std::vector<std::pair<VertexSet, VertexSet>> keyed;
    keyed.reserve(sets.size());
    for (auto s : sets) keyed.emplace_back(key(s), s);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        auto ka = a.first, kb = b.first;
        if (ka.size() != kb.size()) return ka.size() < kb.size();
        Mask diff = ka.bits() ^ kb.bits();
        return diff != 0 && ka.contains(VertexSet(diff).front());
    });
    for (const auto& [k, s] : keyed)
        if (index_.insert(s).second) sets_.push_back(s);
}

SetFamily::SetFamily(std::vector<VertexSet> sets) {
    build(std::move(sets), [](VertexSet s) { return s; });
}

SetFamily::SetFamily(const Graph& g, std::vector<VertexSet> sets) {
    build(std::move(sets), [&](VertexSet s) { return g.rank_mask(s); });
}

}  // namespace lmss
