#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace iki {

using Vertex = int;

/// Fixed-universe bitset over the vertex ids {0, ..., universe-1}.
///
/// Ordering (`operator<`) compares the sorted member lists
/// lexicographically, which is the tie-break order used by every solver.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept
    {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (static_cast<std::size_t>(v) & 63)) & 1U;
    }
    void insert(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
    void erase(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }

    std::size_t size() const noexcept;
    bool empty() const noexcept;
    void clear() noexcept;

    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept = default;
    friend bool operator<(const VertexSet& a, const VertexSet& b) noexcept;

    /// Smallest member, or -1 when empty.
    Vertex first() const noexcept;
    /// Smallest member greater than `v`, or -1.
    Vertex next(Vertex v) const noexcept;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                const int b = std::countr_zero(word);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                word &= word - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;

    std::size_t hash() const noexcept;

private:
    static std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (static_cast<std::size_t>(v) & 63); }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace iki

template <>
struct std::hash<iki::VertexSet> {
    std::size_t operator()(const iki::VertexSet& s) const noexcept { return s.hash(); }
};
