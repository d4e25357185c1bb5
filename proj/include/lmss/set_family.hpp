#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/vertex_set.hpp"

namespace lmss {

/// Finite family of distinct vertex sets held in a fixed scan order: by size,
/// then lexicographically. The empty set is never stored.
class SetFamily {
public:
    SetFamily() = default;
    /// Lexicographic over vertex indices.
    explicit SetFamily(std::vector<VertexSet> sets);
    /// Lexicographic over g's labels.
    SetFamily(const Graph& g, std::vector<VertexSet> sets);

    const std::vector<VertexSet>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }
    const VertexSet& operator[](std::size_t i) const { return sets_[i]; }

    bool contains(VertexSet s) const { return index_.count(s) != 0; }
    /// Membership with ∅ treated as always present.
    bool contains_or_empty(VertexSet s) const { return s.empty() || contains(s); }

    friend bool operator==(const SetFamily& a, const SetFamily& b) { return a.sets_ == b.sets_; }

private:
    template <class Key>
    void build(std::vector<VertexSet> sets, Key key);

    std::vector<VertexSet> sets_;
    std::unordered_set<VertexSet, VertexSetHash> index_;
};

}  // namespace lmss
