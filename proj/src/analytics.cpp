#include "mcnet/analytics.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace mcnet {

SchemeParams specialize_lambda_omega_1(int H, int r, int a) {
    if (r < 2 || r >= H) throw ParameterError("need 2 <= r < H");
    if (a < 2 || a >= H) throw ParameterError("need 2 <= a < H");

    BigInt zbar = binom(H - r, a) + (r - 1) * binom(H - r, a - 2);
    BigInt z_prime = binom(H - r, a - 1);
    BigInt den = binom(H, a) - z_prime;
    BigInt S = binom(H, a + r - 1) * (H - a - r + 1) + binom(H, a + r - 3) * (a + r - 3);
    if (zbar == 0) throw EmptySchemeError("empty scheme: no slot exists");
    if (den <= 0) throw ParameterError("degenerate denominator");

    SchemeParams sp;
    sp.id = SchemeId::A;
    sp.H = H;
    sp.r = r;
    sp.u = r; // C(r, 1)
    sp.K = sp.u * binom_i64(H, r);
    sp.memory_ratio = 1 - rational(zbar, den);
    sp.subpacketization = den;
    sp.load = rational(S, H * den);
    sp.Z = binom(H, a) - zbar;
    sp.S = S;
    sp.Z_prime = z_prime;
    sp.mu = 1;
    sp.ln_subpacketization = ln_bigint(sp.subpacketization);
    return sp;
}

ComparisonRow compare_row(const CompareConfig& config, ZyMode convention) {
    DirectParams p{config.H, config.r, config.a, 1, 1};
    if (config.K2.has_value() != config.t2.has_value())
        throw ParameterError("K2 and t2 must be given together");
    SchemeParams scheme = config.K2 ? scheme_b_params(p, *config.K2, *config.t2)
                                    : scheme_a_params(p);
    SchemeParams zy = zy_params(config.H, config.r, scheme.u, scheme.memory_ratio, convention);

    ComparisonRow row;
    row.config = config;
    row.K = scheme.K;
    row.memory_ratio = scheme.memory_ratio;
    row.ratio_R_exact = scheme.load / zy.load;
    row.ratio_R = to_dec(row.ratio_R_exact);
    row.ln_F_ratio = *zy.ln_subpacketization - *scheme.ln_subpacketization;
    row.zy_convention = convention;
    return row;
}

namespace {

void push_point(std::vector<SweepRow>& rows, SchemeId id, const SchemeParams& sp) {
    rows.push_back(SweepRow{id, sp.memory_ratio, sp.load, sp.subpacketization});
}

std::string dec_str(const Dec50& d) {
    std::ostringstream os;
    os << std::setprecision(10) << d;
    return os.str();
}

std::string rat_dec_str(const Rational& r) { return dec_str(to_dec(r)); }

} // namespace

std::vector<SweepRow> sweep_memory(int H, int r, std::int64_t u,
                                   const std::set<SchemeId>& schemes) {
    if (H < 2 || r < 1 || r >= H) throw ParameterError("need 1 <= r < H");
    if (u < 1) throw ParameterError("need u >= 1");
    std::vector<SweepRow> rows;

    auto try_direct_grid = [&](auto&& emit) {
        for (int omega = 0; omega <= r; ++omega)
            for (int lambda = 1; lambda <= r; ++lambda)
                for (int a = 1; a < H; ++a) {
                    try {
                        emit(DirectParams{H, r, a, omega, lambda});
                    } catch (const ParameterError&) {
                        // degenerate corner of the grid; skip
                    }
                }
    };

    if (schemes.count(SchemeId::A)) {
        try_direct_grid([&](const DirectParams& p) {
            if (p.users() != u) return;
            push_point(rows, SchemeId::A, scheme_a_params(p));
        });
    }
    if (schemes.count(SchemeId::B)) {
        try_direct_grid([&](const DirectParams& p) {
            if (u % p.users() != 0) return;
            std::int64_t K2 = u / p.users();
            if (K2 < 2) return;
            for (int t2 = 1; t2 < K2; ++t2)
                push_point(rows, SchemeId::B,
                           scheme_b_params(p, static_cast<int>(K2), t2));
        });
    }
    if (schemes.count(SchemeId::ZY)) {
        BigInt ktilde = u * binom(H - 1, r - 1);
        if (ktilde >= 2) {
            BigInt c = ktilde; // C(K~, 1)
            for (BigInt t = 1; t < ktilde; ++t) {
                SweepRow row;
                row.scheme = SchemeId::ZY;
                row.memory_ratio = rational(t, ktilde);
                row.load = rational(ktilde - t, r * (t + 1));
                row.subpacketization = r * c;
                rows.push_back(std::move(row));
                c = c * (ktilde - t) / (t + 1);
            }
        }
    }
    if (schemes.count(SchemeId::Repeat)) {
        for (int lambda = 1; lambda <= r; ++lambda)
            for (int a = 1; a < H; ++a) {
                try {
                    DirectParams base{H, r, a, 0, lambda};
                    push_point(rows, SchemeId::Repeat,
                               repeat_baseline_params(scheme_a_params(base), u));
                } catch (const ParameterError&) {
                }
            }
    }
    if (rows.empty()) throw ParameterError("empty sweep grid");

    // Frontier per scheme: keep the best (load, subpacketization) at each
    // memory ratio.
    std::map<std::pair<SchemeId, Rational>, SweepRow> best;
    for (SweepRow& row : rows) {
        auto key = std::make_pair(row.scheme, row.memory_ratio);
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(std::move(key), std::move(row));
        } else if (row.load < it->second.load ||
                   (row.load == it->second.load &&
                    row.subpacketization < it->second.subpacketization)) {
            it->second = std::move(row);
        }
    }
    std::vector<SweepRow> out;
    out.reserve(best.size());
    for (auto& [key, row] : best) out.push_back(std::move(row));
    return out;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    os << "H,r,a,K2,t2,K,M_over_N,ratio_R,ln_F_ratio,convention\n";
    for (const ComparisonRow& row : rows) {
        os << row.config.H << "," << row.config.r << "," << row.config.a << ",";
        if (row.config.K2) os << *row.config.K2;
        os << ",";
        if (row.config.t2) os << *row.config.t2;
        os << "," << row.K << "," << rat_dec_str(row.memory_ratio) << ","
           << dec_str(row.ratio_R) << ",";
        if (row.ln_F_ratio) os << dec_str(*row.ln_F_ratio);
        os << "," << (row.zy_convention == ZyMode::exact ? "exact" : "continuous") << "\n";
    }
    return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "scheme,M_over_N,load,subpacketization\n";
    for (const SweepRow& row : rows)
        os << scheme_name(row.scheme) << "," << rat_dec_str(row.memory_ratio) << ","
           << rat_dec_str(row.load) << "," << row.subpacketization << "\n";
    return os.str();
}

} // namespace mcnet
