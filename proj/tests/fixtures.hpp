#pragma once

// Hand-checked small arrays used across the test suites.

#include <vector>

#include "mcnet/constructions.hpp"
#include "mcnet/pda.hpp"

namespace fixtures {

// 0 encodes star.
inline mcnet::PdaArray grid(const std::vector<std::vector<int>>& cells) {
    mcnet::PdaArray a(static_cast<int>(cells.size()), static_cast<int>(cells[0].size()));
    for (int j = 0; j < a.rows(); ++j)
        for (int k = 0; k < a.cols(); ++k)
            if (cells[j][k] != 0) a.set(j, k, mcnet::PdaEntry::symbol(cells[j][k]));
    return a;
}

inline mcnet::ColumnLabel label(std::vector<int> relays, int i) {
    return mcnet::ColumnLabel{std::move(relays), i};
}

// The introductory (6,4,2,4) example array.
inline mcnet::PdaArray example_pda_6_4_2_4() {
    return grid({
        {0, 0, 0, 1, 2, 3},
        {0, 1, 2, 0, 0, 4},
        {1, 0, 3, 0, 4, 0},
        {2, 3, 0, 4, 0, 0},
    });
}

// The (12,6,4,8) CPDA at H=4, r=a=2, omega=lambda=1, in canonical symbols,
// columns ordered by relay set (lex) then column vector (big-endian).
inline mcnet::PdaArray cpda_12_6_4_8() {
    mcnet::PdaArray a = grid({
        {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 3, 4},
        {0, 0, 1, 5, 0, 0, 0, 0, 3, 6, 0, 0},
        {0, 0, 0, 0, 1, 7, 4, 6, 0, 0, 0, 0},
        {0, 0, 0, 0, 3, 8, 2, 5, 0, 0, 0, 0},
        {0, 0, 4, 8, 0, 0, 0, 0, 2, 7, 0, 0},
        {6, 8, 0, 0, 0, 0, 0, 0, 0, 0, 5, 7},
    });
    a.row_labels = {"0011", "0101", "0110", "1001", "1010", "1100"};
    a.col_labels = {label({1, 2}, 1), label({1, 2}, 2), label({1, 3}, 1), label({1, 3}, 2),
                    label({1, 4}, 1), label({1, 4}, 2), label({2, 3}, 1), label({2, 3}, 2),
                    label({2, 4}, 1), label({2, 4}, 2), label({3, 4}, 1), label({3, 4}, 2)};
    return a;
}

// Slot identities of cpda_12_6_4_8, indexed by canonical symbol.
inline std::vector<mcnet::SymbolLabel> cpda_12_6_4_8_labels() {
    auto lab = [](const char* bits, std::vector<int> C) {
        mcnet::SymbolLabel l;
        for (const char* p = bits; *p; ++p) l.signature.push_back(*p == '1');
        l.common_relays = std::move(C);
        return l;
    };
    return {lab("0111", {1}), lab("1011", {2}), lab("0001", {4}), lab("0010", {3}),
            lab("1101", {3}), lab("0100", {2}), lab("1110", {4}), lab("1000", {1})};
}

// The (3,3,1,3) CPDA with one user per relay pair.
inline mcnet::PdaArray cpda_3_3_1_3() {
    mcnet::PdaArray a = grid({
        {0, 1, 2},
        {1, 0, 3},
        {2, 3, 0},
    });
    a.col_labels = {label({1, 2}, 1), label({1, 3}, 1), label({2, 3}, 1)};
    return a;
}

// The (2,2,1,1) array.
inline mcnet::PdaArray pda_2_2_1_1() {
    return grid({
        {0, 1},
        {1, 0},
    });
}

// Product of the two arrays above: (6,6,4,3) with two users per relay pair.
inline mcnet::PdaArray cpda_product_6_6() {
    mcnet::PdaArray a = grid({
        {0, 0, 0, 1, 0, 2},
        {0, 0, 1, 0, 2, 0},
        {0, 1, 0, 0, 0, 3},
        {1, 0, 0, 0, 3, 0},
        {0, 2, 0, 3, 0, 0},
        {2, 0, 3, 0, 0, 0},
    });
    a.col_labels = {label({1, 2}, 1), label({1, 2}, 2), label({1, 3}, 1),
                    label({1, 3}, 2), label({2, 3}, 1), label({2, 3}, 2)};
    return a;
}

// Valid CPDA whose useless-star census differs between columns (0,0,1,1):
// the stars at (3,2) and (3,3) sit in no pattern, every other star does.
inline mcnet::PdaArray cpda_nonuniform_useless() {
    mcnet::PdaArray a = grid({
        {0, 1, 2, 0},
        {1, 0, 4, 5},
        {0, 3, 0, 2},
        {3, 0, 0, 0},
    });
    a.col_labels = {label({1}, 1), label({1}, 2), label({2}, 1), label({2}, 2)};
    return a;
}

// Valid CPDA whose slot intersections have mixed sizes (|I| = 1, 1, 2, 2):
// slots 3 and 4 occur once, so their intersection is a whole relay pair.
inline mcnet::PdaArray cpda_nonuniform() {
    mcnet::PdaArray a = grid({
        {0, 1, 2},
        {1, 0, 0},
        {2, 0, 0},
        {0, 3, 4},
    });
    a.col_labels = {label({1, 2}, 1), label({1, 3}, 1), label({2, 3}, 1)};
    return a;
}

} // namespace fixtures
