#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace coalition::detail {

// Fixed-width bit mask of W 64-bit words. All vertex masks in the library are
// built on this; the solver instantiates it with the smallest W that fits n.
template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> words{};

    static constexpr std::size_t capacity = 64 * W;

    static Bits prefix(std::size_t count) {
        Bits b;
        for (std::size_t i = 0; i < W; ++i) {
            if (count >= 64 * (i + 1)) {
                b.words[i] = ~std::uint64_t{0};
            } else if (count > 64 * i) {
                b.words[i] = (std::uint64_t{1} << (count - 64 * i)) - 1;
            }
        }
        return b;
    }

    bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool none() const {
        for (auto w : words) {
            if (w != 0) return false;
        }
        return true;
    }
    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Index of the lowest set bit; capacity when empty.
    std::size_t first() const {
        for (std::size_t i = 0; i < W; ++i) {
            if (words[i] != 0) return 64 * i + static_cast<std::size_t>(std::countr_zero(words[i]));
        }
        return capacity;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < W; ++i) {
            if ((words[i] & ~o.words[i]) != 0) return false;
        }
        return true;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < W; ++i) {
            if ((words[i] & o.words[i]) != 0) return true;
        }
        return false;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) words[i] |= o.words[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) words[i] &= o.words[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) words[i] &= ~o.words[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits minus(Bits a, const Bits& b) { return a.subtract(b); }
    friend bool operator==(const Bits&, const Bits&) = default;

    // Calls fn on set bits in increasing order until fn returns false.
    // Returns false iff it stopped early.
    template <class Fn>
    bool every(Fn&& fn) const {
        for (std::size_t i = 0; i < W; ++i) {
            for (std::uint64_t w = words[i]; w != 0; w &= w - 1) {
                if (!fn(64 * i + static_cast<std::size_t>(std::countr_zero(w)))) return false;
            }
        }
        return true;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < W; ++i) {
            for (std::uint64_t w = words[i]; w != 0; w &= w - 1) {
                fn(64 * i + static_cast<std::size_t>(std::countr_zero(w)));
            }
        }
    }
};

}  // namespace coalition::detail
