#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcnet/errors.hpp"

namespace mcnet {

// One cell of a placement delivery array: either the star symbol (a cached
// packet) or a positive integer index (a multicast time slot).
class PdaEntry {
public:
    constexpr PdaEntry() = default; // star

    static constexpr PdaEntry star() { return PdaEntry(); }

    static PdaEntry symbol(std::int32_t s) {
        if (s < 1) throw ParameterError("symbol indices are positive");
        PdaEntry e;
        e.v_ = s;
        return e;
    }

    constexpr bool is_star() const { return v_ == 0; }

    std::int32_t symbol_id() const {
        if (is_star()) throw ParameterError("star entry has no symbol id");
        return v_;
    }

    // 0 encodes star.
    constexpr std::int32_t raw() const { return v_; }

    auto operator<=>(const PdaEntry&) const = default;

private:
    std::int32_t v_ = 0;
};

// Column label (A, i): the r relays serving this user plus a per-relay-set
// user index. user_index is opaque; constructions give it meaning.
struct ColumnLabel {
    std::vector<int> relay_set; // strictly increasing, 1-based
    int user_index = 1;         // 1-based

    auto operator<=>(const ColumnLabel&) const = default;
    std::string to_string() const;
};

// F x K grid of entries plus optional row tags and column labels.
// Immutable by convention once built; all verifiers are pure functions.
// Rows and columns are 0-based in this API; symbols and relays are 1-based.
class PdaArray {
public:
    PdaArray() = default;
    PdaArray(int rows, int cols)
        : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 1 || cols < 1) throw StructuralError("array dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    PdaEntry at(int j, int k) const { return cells_[idx(j, k)]; }
    void set(int j, int k, PdaEntry e) { cells_[idx(j, k)] = e; }

    std::int32_t max_symbol() const;
    bool has_col_labels() const { return !col_labels.empty(); }

    bool operator==(const PdaArray& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_ &&
               row_labels == o.row_labels && col_labels == o.col_labels;
    }

    std::vector<std::string> row_labels; // empty or size rows()
    std::vector<ColumnLabel> col_labels; // empty or size cols()

private:
    std::size_t idx(int j, int k) const {
        if (j < 0 || j >= rows_ || k < 0 || k >= cols_)
            throw StructuralError("cell index out of range");
        return static_cast<std::size_t>(j) * cols_ + k;
    }

    int rows_ = 0, cols_ = 0;
    std::vector<PdaEntry> cells_;
};

enum class Axiom { C1, C2, C3, C4 };

std::string axiom_name(Axiom a);

// A minimal witness of an axiom violation: the axiom plus the cells
// (or column / symbol) that certify it.
struct Violation {
    Axiom axiom;
    std::string detail;
    std::vector<std::pair<int, int>> cells; // (row, col), 0-based
};

// Verification verdict. params are (K, F, Z, S) in the conventional order;
// Z is the star count of column 0 when C1 fails.
struct CpdaReport {
    bool is_pda = false;
    bool is_cpda = false;
    int K = 0, F = 0, Z = 0;
    std::int32_t S = 0;

    // symbol -> occurrence cells, row-major order. g_s = occurrences[s].size()
    // is the coded caching gain of slot s.
    std::map<std::int32_t, std::vector<std::pair<int, int>>> occurrences;
    // symbol -> I_s, the intersection of relay sets over its columns.
    std::map<std::int32_t, std::vector<int>> intersections;
    std::optional<int> mu; // |I_s| when uniform over s
    std::optional<int> nu; // #{s : h in I_s} when uniform over relays h

    std::vector<int> useless_star_count_per_column; // filled on demand
    std::vector<Violation> violations;

    int g(std::int32_t s) const {
        auto it = occurrences.find(s);
        return it == occurrences.end() ? 0 : static_cast<int>(it->second.size());
    }
    bool has_violation(Axiom a) const;
    std::string params_string() const; // "(K,F,Z,S)"
};

// Checks C1 (uniform star count), C2 (symbols cover [1..S] where S is the
// largest symbol used) and C3 (the 2x2 star-cross pattern for every repeated
// symbol). On failure the report carries at least one certificate per axiom.
CpdaReport verify_pda(const PdaArray& array);

// verify_pda plus C4: for every symbol the relay sets of its columns share a
// common relay. Requires column labels that cover every r-subset of the
// inferred relay universe exactly u times; throws StructuralError otherwise.
// An all-star array is accepted vacuously.
CpdaReport verify_cpda(const PdaArray& array);

// Star cells sitting in no C3 pattern. Such stars cost cache space without
// ever helping a multicast, and can be stripped by coded placement.
struct UselessStars {
    std::vector<std::vector<int>> rows_per_column; // useless star rows, per column
    std::vector<int> count_per_column;

    bool uniform() const;
    int uniform_count() const; // valid when uniform()
    std::int64_t total() const;
};

// Requires that `array` passes verify_pda.
UselessStars find_useless_stars(const PdaArray& array);

// Renumbers symbols densely to [1..S] in row-major first-occurrence order.
// Idempotent; axiom verdicts (modulo C2 density repairs) are invariant.
PdaArray canonicalize(const PdaArray& array);

struct CanonicalizeResult {
    PdaArray array;
    std::vector<std::int32_t> original_symbol; // original_symbol[s-1] = old id of s
};
CanonicalizeResult canonicalize_with_map(const PdaArray& array);

} // namespace mcnet
