#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcnet/constructions.hpp"
#include "mcnet/numeric.hpp"

namespace mcnet {

struct CompareConfig {
    int H = 0, r = 0, a = 0;
    std::optional<int> K2, t2; // present -> product scheme, absent -> direct scheme
};

// One comparison row: the scheme's performance against the relay-split
// scheme at the same user count and memory ratio. ratio_R is derived from
// exact rationals; only the final decimal rendering rounds.
struct ComparisonRow {
    CompareConfig config;
    std::int64_t K = 0;
    Rational memory_ratio;
    Rational ratio_R_exact; // R_scheme / R_zy
    Dec50 ratio_R;
    std::optional<Dec50> ln_F_ratio; // ln(F_zy / F_scheme)
    ZyMode zy_convention = ZyMode::continuous;
};

// The omega = lambda = 1 specialization of the direct scheme, written with
// its own closed forms; equals scheme_a_params(H, r, a, 1, 1) identically.
SchemeParams specialize_lambda_omega_1(int H, int r, int a);

// Evaluates the direct (or product, when K2/t2 are set) scheme at
// omega = lambda = 1 and compares with the relay-split scheme evaluated at
// the same memory ratio and user count.
ComparisonRow compare_row(const CompareConfig& config, ZyMode convention);

struct SweepRow {
    SchemeId scheme = SchemeId::A;
    Rational memory_ratio;
    Rational load;
    BigInt subpacketization;
};

// Memory/load/subpacketization frontier data for every scheme that exists at
// (H, r, u): all valid parameter choices, deduplicated to the smallest load
// (then smallest subpacketization) per memory ratio, sorted by scheme then
// memory ratio. Throws ParameterError when no scheme yields any point.
std::vector<SweepRow> sweep_memory(int H, int r, std::int64_t u,
                                   const std::set<SchemeId>& schemes);

std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace mcnet
