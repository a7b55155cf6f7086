#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace mcnet {

// Subsets are sorted vectors of 1-based elements.
using Subset = std::vector<int>;

// All k-subsets of [1..n] in lexicographic order.
inline std::vector<Subset> k_subsets_lex(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (k == 0) out.assign(1, Subset{});
    return out;
}

// colex: S < T iff the largest element where they differ belongs to T.
inline bool colex_less(const Subset& a, const Subset& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// All k-subsets of [1..n] in colexicographic order.
inline std::vector<Subset> k_subsets_colex(int n, int k) {
    std::vector<Subset> out = k_subsets_lex(n, k);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

// Binary vectors over {0,1}^n of a given weight, ordered by their value when
// read big-endian (v[0] is the most significant bit).
inline std::vector<std::vector<std::uint8_t>> weight_vectors(int n, int w) {
    std::vector<std::vector<std::uint8_t>> out;
    if (w < 0 || w > n) return out;
    // Iterate position subsets; sorting by big-endian value afterwards.
    std::vector<Subset> supports = k_subsets_lex(n, w);
    out.reserve(supports.size());
    for (const Subset& s : supports) {
        std::vector<std::uint8_t> v(n, 0);
        for (int pos : s) v[pos - 1] = 1;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string bits_to_string(const std::vector<std::uint8_t>& v) {
    std::string s;
    s.reserve(v.size());
    for (auto b : v) s.push_back(b ? '1' : '0');
    return s;
}

inline int hamming_distance(const std::vector<std::uint8_t>& a,
                            const std::vector<std::uint8_t>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

} // namespace mcnet
