#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polargs {

// Packed bit vector of fixed length. Used as the information mask of a code
// design: bit i = 1 means synthetic channel i is unfrozen.
class BitMask {
public:
    BitMask() = default;
    explicit BitMask(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value = true) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // a is a subset of b (not necessarily strict).
    static bool is_subset(const BitMask& a, const BitMask& b) {
        if (a.size_ != b.size_) return false;
        for (std::size_t j = 0; j < a.words_.size(); ++j)
            if (a.words_[j] & ~b.words_[j]) return false;
        return true;
    }

    // Order on the bit string read index 0 .. size-1 (0 sorts before 1).
    static bool lex_less(const BitMask& a, const BitMask& b) {
        for (std::size_t j = 0; j < a.words_.size(); ++j) {
            const std::uint64_t diff = a.words_[j] ^ b.words_[j];
            if (diff) {
                const int bit = std::countr_zero(diff);
                return ((a.words_[j] >> bit) & 1u) == 0;
            }
        }
        return false;
    }

    friend bool operator==(const BitMask& a, const BitMask& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    // Stable 64-bit hash (splitmix chain over the words); cache-key material.
    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
        for (std::uint64_t w : words_) h = mix(h ^ w);
        return h;
    }

    // Hex of the mask as an integer with bit i weighted 2^i,
    // zero-padded to ceil(size/4) digits, most significant nibble first.
    std::string to_hex() const {
        const std::size_t digits = (size_ + 3) / 4;
        std::string out(digits, '0');
        for (std::size_t d = 0; d < digits; ++d) {
            unsigned nib = 0;
            for (unsigned b = 0; b < 4; ++b) {
                const std::size_t i = 4 * (digits - 1 - d) + b;
                if (i < size_ && test(i)) nib |= 1u << b;
            }
            out[d] = "0123456789abcdef"[nib];
        }
        return out;
    }

    static BitMask from_hex(const std::string& hex, std::size_t size) {
        const std::size_t digits = (size + 3) / 4;
        if (hex.size() != digits)
            throw std::invalid_argument("BitMask::from_hex: expected " + std::to_string(digits) +
                                        " hex digits, got " + std::to_string(hex.size()));
        BitMask m(size);
        for (std::size_t d = 0; d < digits; ++d) {
            const char c = hex[d];
            unsigned nib;
            if (c >= '0' && c <= '9')
                nib = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                nib = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                nib = static_cast<unsigned>(c - 'A' + 10);
            else
                throw std::invalid_argument("BitMask::from_hex: bad digit");
            for (unsigned b = 0; b < 4; ++b) {
                const std::size_t i = 4 * (digits - 1 - d) + b;
                if (nib & (1u << b)) {
                    if (i >= size)
                        throw std::invalid_argument("BitMask::from_hex: bit beyond mask size");
                    m.set(i);
                }
            }
        }
        return m;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace polargs
