#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gv::detail {

// fixed-width bitset over vertex indices
struct VertexSet {
    std::vector<std::uint64_t> bits;

    VertexSet() = default;
    explicit VertexSet(std::size_t n) : bits((n + 63) / 64, 0) {}

    void set(std::size_t i) { bits[i / 64] |= std::uint64_t(1) << (i % 64); }
    void clear(std::size_t i) { bits[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
    bool test(std::size_t i) const { return (bits[i / 64] >> (i % 64)) & 1; }

    bool empty() const {
        for (auto w : bits)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : bits) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    long first() const {
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) return static_cast<long>(i * 64 + std::countr_zero(bits[i]));
        return -1;
    }

    void and_with(const VertexSet& o) {
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] &= o.bits[i];
    }

    void and_not(const VertexSet& o) {
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] &= ~o.bits[i];
    }

    void or_with(const VertexSet& o) {
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] |= o.bits[i];
    }

    std::size_t count_and(const VertexSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(bits[i] & o.bits[i]));
        return c;
    }
};

}  // namespace gv::detail
