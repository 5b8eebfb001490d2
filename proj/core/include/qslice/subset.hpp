#ifndef QSLICE_SUBSET_HPP
#define QSLICE_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qslice/errors.hpp"

namespace qslice {

// Subset-indexed containers are sparse maps; 2^12 basis elements is the
// hard cap before the component count stops being tractable.
inline constexpr std::uint32_t kMaxArity = 12;

/// Subset of {1..n} stored as a bit set (variable h <-> bit h-1).
struct SubsetIndex {
    std::uint32_t bits = 0;

    SubsetIndex() = default;
    explicit SubsetIndex(std::uint32_t b) : bits(b) {}

    static SubsetIndex empty() { return SubsetIndex(0); }
    static SubsetIndex single(std::uint32_t h) { return SubsetIndex(1u << (h - 1)); }
    static SubsetIndex of(std::initializer_list<std::uint32_t> elems) {
        SubsetIndex s;
        for (std::uint32_t h : elems) s.bits |= 1u << (h - 1);
        return s;
    }
    /// {1..n}
    static SubsetIndex full(std::uint32_t n) {
        return SubsetIndex(n == 0 ? 0u : (1u << n) - 1u);
    }

    bool contains(std::uint32_t h) const { return (bits >> (h - 1)) & 1u; }
    bool is_empty() const { return bits == 0; }
    int size() const { return std::popcount(bits); }

    SubsetIndex with(std::uint32_t h) const { return SubsetIndex(bits | (1u << (h - 1))); }
    SubsetIndex without(std::uint32_t h) const { return SubsetIndex(bits & ~(1u << (h - 1))); }

    SubsetIndex intersect(SubsetIndex o) const { return SubsetIndex(bits & o.bits); }
    SubsetIndex unite(SubsetIndex o) const { return SubsetIndex(bits | o.bits); }
    SubsetIndex sym_diff(SubsetIndex o) const { return SubsetIndex(bits ^ o.bits); }
    SubsetIndex complement(std::uint32_t n) const {
        return SubsetIndex(~bits & full(n).bits);
    }
    bool subset_of(SubsetIndex o) const { return (bits & ~o.bits) == 0; }

    /// Ascending elements, 1-based.
    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t h = 1; h <= 32; ++h)
            if (bits >> (h - 1) & 1u) out.push_back(h);
        return out;
    }

    friend bool operator==(SubsetIndex a, SubsetIndex b) { return a.bits == b.bits; }
    friend bool operator!=(SubsetIndex a, SubsetIndex b) { return a.bits != b.bits; }
    friend bool operator<(SubsetIndex a, SubsetIndex b) { return a.bits < b.bits; }
};

struct SignedSubset {
    int sign = 1;  // +1 or -1
    SubsetIndex index;
};

/// e_H (x) e_K = (-1)^|H n K| e_{H Delta K}.
inline SignedSubset delta_basis_product(SubsetIndex h, SubsetIndex k) {
    int sign = (std::popcount(h.bits & k.bits) % 2 == 0) ? 1 : -1;
    return {sign, h.sym_diff(k)};
}

/// J_h(e_K) = e_{K u {h}} if h not in K, -e_{K \ {h}} if h in K.
inline SignedSubset structure_image(std::uint32_t h, SubsetIndex k) {
    if (k.contains(h)) return {-1, k.without(h)};
    return {1, k.with(h)};
}

/// Sorted brace list, e.g. "{1,3}"; "{}" for the empty set.
inline std::string to_string(SubsetIndex s) {
    std::string out = "{";
    bool first = true;
    for (std::uint32_t h : s.elements()) {
        if (!first) out += ',';
        out += std::to_string(h);
        first = false;
    }
    out += '}';
    return out;
}

/// Order on ascending element sequences ({1,2} < {1,3} < {2}); used for
/// deterministic witness reporting.
inline bool lex_less(SubsetIndex a, SubsetIndex b) {
    auto ea = a.elements();
    auto eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

inline void check_arity_limit(std::uint32_t n) {
    if (n > kMaxArity)
        throw ArityLimitExceeded("arity " + std::to_string(n) + " exceeds the cap of " +
                                 std::to_string(kMaxArity) + " variables");
}

inline void check_variable_index(std::uint32_t h, std::uint32_t n) {
    if (h < 1 || h > n)
        throw IndexOutOfRange("variable index " + std::to_string(h) +
                              " outside 1.." + std::to_string(n));
}

inline void check_subset_range(SubsetIndex s, std::uint32_t n) {
    if (s.bits >= (1u << n) && !(n == 0 && s.bits == 0))
        throw IndexOutOfRange("subset " + to_string(s) + " outside P({1.." +
                              std::to_string(n) + "})");
}

}  // namespace qslice

#endif
