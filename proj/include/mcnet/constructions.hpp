#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcnet/numeric.hpp"
#include "mcnet/pda.hpp"

namespace mcnet {

// Parameters of the direct combinatorial construction. omega = 0 is allowed
// and recovers the single-user-per-relay-set array.
struct DirectParams {
    int H = 0;
    int r = 0;
    int a = 0;
    int omega = 0;
    int lambda = 0;

    void validate() const; // throws ParameterError on range violations
    std::int64_t users() const; // u = C(r, omega)
};

// Identity of one multicast slot in the direct construction: the merged
// row/column bit vector plus the agreement positions of its defining cell.
// common_relays is always contained in the intersection I_s of the slot's
// receiver relay sets; equality holds unless a covering family collapses to
// a single choice (see slot_intersection in the constructions source).
struct SymbolLabel {
    std::vector<std::uint8_t> signature; // length H
    std::vector<int> common_relays;      // sorted, size lambda

    std::string to_string() const; // e.g. "1011,{2}"
    bool operator==(const SymbolLabel&) const = default;
};

struct DirectCpda {
    PdaArray array;                        // canonical symbols [1..S]
    std::vector<SymbolLabel> symbol_labels; // symbol_labels[s-1]
    DirectParams params;
};

// The canonical subset PDA for a shared broadcast link: rows are t-subsets
// of [1..K] in colex order, column k has a star exactly at the rows that
// contain k, and the slot of a non-star cell is the colex rank of the
// (t+1)-subset obtained by inserting k.
PdaArray mn_pda(int K, int t);

// Direct construction: rows are weight-a binary H-vectors (ascending as
// big-endian integers), columns are (T, b) pairs with T an r-subset of
// [1..H] in lex order and b a weight-(r-omega) r-vector (ascending
// big-endian). A cell is a slot iff f restricted to T differs from b in
// exactly r - lambda positions. Throws EmptySchemeError when no cell
// qualifies.
DirectCpda direct_cpda(const DirectParams& p);

// Product construction: substitute every cell of P by a shifted copy of A;
// star absorbs. Output rows are (j1, j2) pairs, j1-major; output columns are
// (k1, k2) pairs, k1-major, labeled (T, (i-1)*K2 + k2).
PdaArray hybrid_cpda(const PdaArray& P, const PdaArray& A);

enum class SchemeId { A, B, ZY, Repeat };

std::string scheme_name(SchemeId id);

// Closed-form performance bundle of a caching scheme. All equality-checked
// quantities are exact; only the continuous-t subpacketization of the ZY
// scheme is approximate (carried as a natural log).
struct SchemeParams {
    SchemeId id = SchemeId::A;
    int H = 0, r = 0;
    std::int64_t u = 0;
    std::int64_t K = 0;

    Rational memory_ratio; // M/N
    Rational load;         // R, per relay
    BigInt subpacketization; // F; meaningful iff !approximate

    std::optional<BigInt> Z, S, Z_prime;
    std::optional<int> mu;

    bool approximate = false;
    std::optional<Dec50> ln_subpacketization; // always set when F is known
};

// Closed-form column census of the direct construction: zbar = non-star
// rows per column, S = slot count as displayed, z_prime = far-distance
// stars per column. S_realized drops slot classes whose covering pools are
// too small to produce a cell; it equals the number of distinct slots that
// actually appear and can be strictly below S at extreme weights.
struct DirectCounts {
    BigInt zbar, Z, S, S_realized, z_prime, F1;
};
DirectCounts direct_counts(const DirectParams& p);

// Closed-form intersection of the receiver relay sets of one slot, from its
// label alone: the agreement set, plus any candidate pool that admits only a
// single covering choice. Independent of the column-intersection route taken
// by verify_cpda.
std::vector<int> slot_intersection(const DirectParams& p, const SymbolLabel& label);

SchemeParams scheme_a_params(const DirectParams& p);
SchemeParams scheme_b_params(const DirectParams& p, int K2, int t2);

enum class ZyMode { exact, continuous };

// Per-relay split scheme: an [H, r] erasure code spreads every file over the
// relays and each relay runs the subset scheme for its u*C(H-1, r-1) users.
// exact mode requires t = K~ * (M/N) to be an integer; continuous mode
// evaluates the binomial through log-gamma and flags the result approximate.
SchemeParams zy_params(int H, int r, std::int64_t u, const Rational& memory_ratio, ZyMode mode);

// The trivial u-fold repetition of a single-access scheme: K and R scale by
// u, memory ratio and subpacketization are unchanged.
SchemeParams repeat_baseline_params(const SchemeParams& base, std::int64_t u);

} // namespace mcnet
