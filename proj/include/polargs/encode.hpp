#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polargs/design.hpp"

namespace polargs {

// In-place polar transform x <- x * F^(x)n with F = [[1,0],[1,1]], natural
// bit order (no bit-reversal permutation). Involutive over GF(2).
inline void polar_transform(std::span<std::uint8_t> x) {
    const std::size_t n = x.size();
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t base = 0; base < n; base += 2 * h)
            for (std::size_t j = base; j < base + h; ++j)
                x[j] ^= x[j + h];
}

// Places info_bits at the information positions (ascending index), zeros at
// frozen positions, and applies the polar transform.
inline std::vector<std::uint8_t> encode(const CodeDesign& design,
                                        std::span<const std::uint8_t> info_bits) {
    if (info_bits.size() != design.dimension())
        throw std::invalid_argument("encode: info_bits length must equal design dimension");
    std::vector<std::uint8_t> x(design.block_length(), 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (design.is_info(i)) x[i] = info_bits[next++] & 1u;
    polar_transform(x);
    return x;
}

}  // namespace polargs
