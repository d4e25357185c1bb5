#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace lmss {

using Mask = std::uint64_t;

/// Subset of a graph's vertices, stored as a bitmask over vertex indices.
/// Interpreting it against a graph is the caller's business; see
/// Graph::require_subset.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = std::size_t;

        iterator() = default;
        explicit iterator(Mask rest) : rest_(rest) {}
        std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<std::size_t> members) {
        for (auto v : members) insert(v);
    }

    static constexpr VertexSet single(std::size_t v) { return VertexSet(Mask{1} << v); }
    /// {0, ..., n-1}
    static constexpr VertexSet prefix(std::size_t n) {
        return VertexSet(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
    }

    constexpr Mask bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t v) const { return v < 64 && ((bits_ >> v) & 1u); }
    /// Lowest index; undefined on the empty set.
    constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr void insert(std::size_t v) { bits_ |= Mask{1} << v; }
    constexpr void erase(std::size_t v) { bits_ &= ~(Mask{1} << v); }
    constexpr VertexSet with(std::size_t v) const { return VertexSet(bits_ | (Mask{1} << v)); }
    constexpr VertexSet without(std::size_t v) const { return VertexSet(bits_ & ~(Mask{1} << v)); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    /// Bit-order comparison; only meaningful as a container key.
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    Mask bits_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept {
        Mask z = s.bits() + 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

}  // namespace lmss
