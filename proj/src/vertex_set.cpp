#include "iki/vertex_set.hpp"

namespace iki {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_) {
        w = ~std::uint64_t{0};
    }
    if (const std::size_t tail = universe & 63; tail != 0) {
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    }
    return s;
}

std::size_t VertexSet::size() const noexcept
{
    std::size_t count = 0;
    for (auto w : words_) {
        count += static_cast<std::size_t>(std::popcount(w));
    }
    return count;
}

bool VertexSet::empty() const noexcept
{
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

void VertexSet::clear() noexcept
{
    for (auto& w : words_) {
        w = 0;
    }
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) noexcept
{
    // Lexicographic order of the sorted member lists. At the lowest
    // differing element d, the set holding d is smaller unless the other
    // set ends before d (then the other is a proper prefix).
    const std::size_t words = a.words_.size() < b.words_.size() ? a.words_.size() : b.words_.size();
    for (std::size_t i = 0; i < words; ++i) {
        const std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff == 0) {
            continue;
        }
        const int d = std::countr_zero(diff);
        const bool a_has = ((a.words_[i] >> d) & 1U) != 0;
        const VertexSet& other = a_has ? b : a;
        const Vertex dv = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(d));
        const bool other_continues = other.next(dv) != -1;
        return a_has ? other_continues : !other_continues;
    }
    return a.words_.size() < b.words_.size();
}

Vertex VertexSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
        }
    }
    return -1;
}

Vertex VertexSet::next(Vertex v) const noexcept
{
    std::size_t pos = static_cast<std::size_t>(v) + 1;
    if (pos >= universe_) {
        return -1;
    }
    std::size_t w = pos >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
        if (word != 0) {
            return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        }
        if (++w >= words_.size()) {
            return -1;
        }
        word = words_[w];
    }
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::size_t VertexSet::hash() const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

} // namespace iki
