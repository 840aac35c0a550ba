#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polargs/bits.hpp"

namespace polargs {

// A polar code design: blocklength N = 2^n and the mask of information
// positions. Immutable value type; equality and hashing go through the mask.
class CodeDesign {
public:
    static constexpr int max_stages = 20;

    CodeDesign(int n, BitMask mask) : n_(n), mask_(std::move(mask)) {
        if (n < 1 || n > max_stages)
            throw std::invalid_argument("CodeDesign: n must be in [1, 20]");
        if (mask_.size() != (std::size_t{1} << n))
            throw std::invalid_argument("CodeDesign: mask length must equal 2^n");
        k_ = mask_.count();
    }

    static CodeDesign all_frozen(int n) { return CodeDesign(n, BitMask(std::size_t{1} << check(n))); }

    static CodeDesign all_information(int n) {
        BitMask m(std::size_t{1} << check(n));
        for (std::size_t i = 0; i < m.size(); ++i) m.set(i);
        return CodeDesign(n, std::move(m));
    }

    static CodeDesign from_info_indices(int n, std::span<const int> indices) {
        BitMask m(std::size_t{1} << check(n));
        for (int i : indices) {
            if (i < 0 || static_cast<std::size_t>(i) >= m.size())
                throw std::invalid_argument("CodeDesign: info index out of range");
            if (m.test(static_cast<std::size_t>(i)))
                throw std::invalid_argument("CodeDesign: duplicate info index");
            m.set(static_cast<std::size_t>(i));
        }
        return CodeDesign(n, std::move(m));
    }

    int stages() const { return n_; }
    std::size_t block_length() const { return mask_.size(); }
    std::size_t dimension() const { return k_; }
    double rate() const { return static_cast<double>(k_) / static_cast<double>(mask_.size()); }

    const BitMask& info_mask() const { return mask_; }
    bool is_info(std::size_t i) const { return mask_.test(i); }

    std::vector<int> info_indices() const {
        std::vector<int> out;
        out.reserve(k_);
        for (std::size_t i = 0; i < mask_.size(); ++i)
            if (mask_.test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    CodeDesign with_bit(std::size_t i, bool value) const {
        BitMask m = mask_;
        m.set(i, value);
        return CodeDesign(n_, std::move(m));
    }

    std::uint64_t hash() const { return mask_.hash(); }
    std::string mask_hex() const { return mask_.to_hex(); }

    friend bool operator==(const CodeDesign& a, const CodeDesign& b) {
        return a.mask_ == b.mask_;
    }

private:
    static int check(int n) {
        if (n < 1 || n > max_stages)
            throw std::invalid_argument("CodeDesign: n must be in [1, 20]");
        return n;
    }

    int n_;
    std::size_t k_;
    BitMask mask_;
};

struct CodeDesignHash {
    std::size_t operator()(const CodeDesign& d) const { return static_cast<std::size_t>(d.hash()); }
};

// Edge of the design graph, always oriented from dimension k to k+1:
// to.info_set = from.info_set + {label}.
struct GraphEdge {
    CodeDesign from;
    CodeDesign to;
    int label;
};

// Edges between `design` (dimension k) and its k lower neighbors; the
// lower-dimensional neighbor of each edge is `edge.from`.
inline std::vector<GraphEdge> left_neighbors(const CodeDesign& design) {
    std::vector<GraphEdge> edges;
    edges.reserve(design.dimension());
    for (std::size_t i = 0; i < design.block_length(); ++i)
        if (design.is_info(i))
            edges.push_back(GraphEdge{design.with_bit(i, false), design, static_cast<int>(i)});
    return edges;
}

// Edges between `design` (dimension k) and its N-k upper neighbors; the
// higher-dimensional neighbor of each edge is `edge.to`.
inline std::vector<GraphEdge> right_neighbors(const CodeDesign& design) {
    std::vector<GraphEdge> edges;
    edges.reserve(design.block_length() - design.dimension());
    for (std::size_t i = 0; i < design.block_length(); ++i)
        if (!design.is_info(i))
            edges.push_back(GraphEdge{design, design.with_bit(i, true), static_cast<int>(i)});
    return edges;
}

// Strict partial order: a's information set is a proper subset of b's.
inline bool precedes(const CodeDesign& a, const CodeDesign& b) {
    if (a.block_length() != b.block_length())
        throw std::invalid_argument("precedes: blocklength mismatch");
    return BitMask::is_subset(a.info_mask(), b.info_mask()) && !(a == b);
}

}  // namespace polargs
