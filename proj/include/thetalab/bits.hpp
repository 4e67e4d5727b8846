#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace thetalab {

/// Subset of a ground set of at most 64 positions; bit i stands for position i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool contains_bit(Mask m, std::size_t i) { return ((m >> i) & 1U) != 0; }

/// Removes position `i`, shifting every higher position down by one.
constexpr Mask drop_position(Mask m, std::size_t i)
{
    const Mask low = m & low_bits(i);
    const Mask high = i + 1 >= 64 ? 0 : (m >> (i + 1)) << i;
    return low | high;
}

/// Gathers the bits of `m` selected by `keep` into the low positions (software pext).
constexpr Mask compress(Mask m, Mask keep)
{
    Mask out = 0;
    std::size_t j = 0;
    for (Mask k = keep; k != 0; k &= k - 1, ++j) {
        if (m & (k & -k))
            out |= bit(j);
    }
    return out;
}

/// Calls f(i) for every set position of m in ascending order.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f)
{
    while (m != 0) {
        f(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
}

inline std::vector<std::size_t> positions(Mask m)
{
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
    return out;
}

/// Reduces a family of sets to its inclusion-maximal members, sorted ascending.
inline std::vector<Mask> maximal_sets(std::vector<Mask> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::stable_sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    std::vector<Mask> kept;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask k : kept) {
            if (is_subset(s, k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

struct MaskVectorHash {
    std::size_t operator()(const std::vector<Mask>& v) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (Mask m : v) {
            h ^= m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

} // namespace thetalab
