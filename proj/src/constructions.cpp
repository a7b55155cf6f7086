#include "mcnet/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "mcnet/combinatorics.hpp"

namespace mcnet {

void DirectParams::validate() const {
    if (H < 2 || r < 1 || r >= H) throw ParameterError("need 1 <= r < H");
    if (a < 1 || a >= H) throw ParameterError("need 1 <= a < H");
    if (omega < 0 || omega > r) throw ParameterError("need 0 <= omega <= r");
    if (lambda < 1 || lambda > r) throw ParameterError("need 1 <= lambda <= r");
}

std::int64_t DirectParams::users() const { return binom_i64(r, omega); }

std::string SymbolLabel::to_string() const {
    std::ostringstream os;
    os << bits_to_string(signature) << ",{";
    for (std::size_t i = 0; i < common_relays.size(); ++i) {
        if (i) os << ",";
        os << common_relays[i];
    }
    os << "}";
    return os.str();
}

std::string scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::A: return "A";
        case SchemeId::B: return "B";
        case SchemeId::ZY: return "ZY";
        case SchemeId::Repeat: return "repeat";
    }
    return "?";
}

PdaArray mn_pda(int K, int t) {
    if (K < 2 || t < 1 || t >= K) throw ParameterError("mn_pda needs 0 < t < K");
    std::vector<Subset> rows = k_subsets_colex(K, t);
    std::vector<Subset> slots = k_subsets_colex(K, t + 1);
    std::map<Subset, std::int32_t> slot_rank;
    for (std::size_t i = 0; i < slots.size(); ++i)
        slot_rank[slots[i]] = static_cast<std::int32_t>(i) + 1;

    PdaArray a(static_cast<int>(rows.size()), K);
    for (int j = 0; j < a.rows(); ++j) {
        const Subset& T = rows[j];
        for (int k = 1; k <= K; ++k) {
            if (std::binary_search(T.begin(), T.end(), k)) continue; // cached: star
            Subset merged = T;
            merged.insert(std::lower_bound(merged.begin(), merged.end(), k), k);
            a.set(j, k - 1, PdaEntry::symbol(slot_rank.at(merged)));
        }
        a.row_labels.push_back([&] {
            std::ostringstream os;
            os << "{";
            for (std::size_t i = 0; i < T.size(); ++i) os << (i ? "," : "") << T[i];
            os << "}";
            return os.str();
        }());
    }
    return a;
}

namespace {

// Loop bounds for the closed forms: lam1 counts the agreement positions
// falling on zero coordinates of b.
struct Lam1Range {
    int lo, hi;
};
Lam1Range lam1_range(int r, int omega, int lam) {
    return {std::max(0, lam - r + omega), std::min(omega, lam)};
}

} // namespace

DirectCounts direct_counts(const DirectParams& p) {
    p.validate();
    DirectCounts c;
    c.F1 = binom(p.H, p.a);
    c.zbar = 0;
    c.S = 0;
    c.S_realized = 0;
    auto [x, y] = lam1_range(p.r, p.omega, p.lambda);
    for (int l1 = x; l1 <= y; ++l1) {
        c.zbar += binom(p.omega, l1) * binom(p.r - p.omega, p.lambda - l1) *
                  binom(p.H - p.r, p.a - p.omega + 2 * l1 - p.lambda);
        long long w = p.a + p.r - 2 * p.omega + 2 * l1 - p.lambda;
        BigInt slots = binom(p.H, w) * binom(p.H - w, l1) * binom(w, p.lambda - l1);
        c.S += slots;
        // A slot of this class occurs in the array iff its zero pool can
        // supply omega - l1 positions and its one pool r - omega -
        // (lambda - l1) positions.
        BigInt occurrences = binom(p.H - w - l1, p.omega - l1) *
                             binom(w - (p.lambda - l1), p.r - p.omega - (p.lambda - l1));
        if (occurrences > 0) c.S_realized += slots;
    }
    c.Z = c.F1 - c.zbar;
    c.z_prime = 0;
    for (int lp = 0; lp < p.lambda; ++lp) {
        auto [xp, yp] = lam1_range(p.r, p.omega, lp);
        for (int l1 = xp; l1 <= yp; ++l1)
            c.z_prime += binom(p.omega, l1) * binom(p.r - p.omega, lp - l1) *
                         binom(p.H - p.r, p.a - p.omega + 2 * l1 - lp);
    }
    return c;
}

std::vector<int> slot_intersection(const DirectParams& p, const SymbolLabel& label) {
    // A column (T, b) carries this slot iff T = C u T1 u T2 with T1 drawn
    // from the zero positions of the signature outside C and T2 from the one
    // positions outside C. The intersection over all such T is C, plus a
    // pool whenever it offers exactly one choice.
    std::vector<int> zeros_pool, ones_pool;
    int lam1 = 0;
    for (int i = 1; i <= p.H; ++i) {
        bool in_c = std::binary_search(label.common_relays.begin(),
                                       label.common_relays.end(), i);
        if (in_c) {
            lam1 += label.signature[i - 1] == 0;
            continue;
        }
        (label.signature[i - 1] ? ones_pool : zeros_pool).push_back(i);
    }
    const int need_zeros = p.omega - lam1;
    const int need_ones = p.r - p.omega - (p.lambda - lam1);
    std::vector<int> inter = label.common_relays;
    if (need_zeros > 0 && static_cast<int>(zeros_pool.size()) == need_zeros)
        inter.insert(inter.end(), zeros_pool.begin(), zeros_pool.end());
    if (need_ones > 0 && static_cast<int>(ones_pool.size()) == need_ones)
        inter.insert(inter.end(), ones_pool.begin(), ones_pool.end());
    std::sort(inter.begin(), inter.end());
    return inter;
}

DirectCpda direct_cpda(const DirectParams& p) {
    p.validate();

    std::vector<std::vector<std::uint8_t>> row_tags = weight_vectors(p.H, p.a);
    std::vector<Subset> relay_sets = k_subsets_lex(p.H, p.r);
    std::vector<std::vector<std::uint8_t>> b_vectors = weight_vectors(p.r, p.r - p.omega);

    DirectCpda out;
    out.params = p;
    const int F = static_cast<int>(row_tags.size());
    const int K = static_cast<int>(relay_sets.size() * b_vectors.size());
    out.array = PdaArray(F, K);
    for (const auto& f : row_tags) out.array.row_labels.push_back(bits_to_string(f));
    for (const Subset& T : relay_sets)
        for (std::size_t bi = 0; bi < b_vectors.size(); ++bi)
            out.array.col_labels.push_back(ColumnLabel{T, static_cast<int>(bi) + 1});

    // Row-major scan; slots are interned on first sight, which makes the
    // output canonical by construction.
    std::map<std::pair<std::vector<std::uint8_t>, std::vector<int>>, std::int32_t> intern;
    for (int j = 0; j < F; ++j) {
        const auto& f = row_tags[j];
        for (int k = 0; k < K; ++k) {
            const Subset& T = relay_sets[k / b_vectors.size()];
            const auto& b = b_vectors[k % b_vectors.size()];

            int agreements = 0;
            for (int v = 0; v < p.r; ++v)
                if (f[T[v] - 1] == b[v]) ++agreements;
            if (p.r - agreements != p.r - p.lambda) continue; // star

            SymbolLabel lab;
            lab.signature = f;
            for (int v = 0; v < p.r; ++v) {
                lab.signature[T[v] - 1] = b[v];
                if (f[T[v] - 1] == b[v]) lab.common_relays.push_back(T[v]);
            }
            auto key = std::make_pair(lab.signature, lab.common_relays);
            auto [it, fresh] =
                intern.emplace(key, static_cast<std::int32_t>(intern.size()) + 1);
            if (fresh) out.symbol_labels.push_back(lab);
            out.array.set(j, k, PdaEntry::symbol(it->second));
        }
    }
    if (intern.empty())
        throw EmptySchemeError("no cell satisfies the distance condition (empty scheme)");
    return out;
}

PdaArray hybrid_cpda(const PdaArray& P, const PdaArray& A) {
    if (!P.has_col_labels())
        throw StructuralError("hybrid construction needs a labeled first factor");
    CpdaReport rp = verify_cpda(P);
    if (!rp.is_cpda) throw ParameterError("first factor fails verification");
    CpdaReport ra = verify_pda(A);
    if (!ra.is_pda) throw ParameterError("second factor fails verification");

    const int F1 = P.rows(), F2 = A.rows(), K1 = P.cols(), K2 = A.cols();
    const std::int32_t S2 = ra.S;
    PdaArray L(F1 * F2, K1 * K2);
    for (int k1 = 0; k1 < K1; ++k1) {
        const ColumnLabel& c1 = P.col_labels[k1];
        for (int k2 = 0; k2 < K2; ++k2)
            L.col_labels.push_back(
                ColumnLabel{c1.relay_set, (c1.user_index - 1) * K2 + k2 + 1});
    }
    for (int j1 = 0; j1 < F1; ++j1)
        for (int k1 = 0; k1 < K1; ++k1) {
            PdaEntry p = P.at(j1, k1);
            if (p.is_star()) continue; // whole block stays star
            const std::int32_t base = (p.symbol_id() - 1) * S2;
            for (int j2 = 0; j2 < F2; ++j2)
                for (int k2 = 0; k2 < K2; ++k2) {
                    PdaEntry a = A.at(j2, k2);
                    if (a.is_star()) continue;
                    L.set(j1 * F2 + j2, k1 * K2 + k2,
                          PdaEntry::symbol(base + a.symbol_id()));
                }
        }
    return L;
}

namespace {

SchemeParams finish_params(SchemeParams sp) {
    if (!(sp.memory_ratio > 0 && sp.memory_ratio < 1))
        throw ParameterError("memory ratio must lie strictly between 0 and 1");
    if (sp.load < 0) throw ParameterError("negative load");
    if (!sp.approximate) sp.ln_subpacketization = ln_bigint(sp.subpacketization);
    return sp;
}

} // namespace

SchemeParams scheme_a_params(const DirectParams& p) {
    DirectCounts c = direct_counts(p);
    if (c.zbar == 0) throw EmptySchemeError("empty scheme: no slot exists");
    BigInt den = c.F1 - c.z_prime;
    if (den <= 0) throw ParameterError("degenerate denominator F1 - Z' <= 0");

    SchemeParams sp;
    sp.id = SchemeId::A;
    sp.H = p.H;
    sp.r = p.r;
    sp.u = p.users();
    sp.K = sp.u * binom_i64(p.H, p.r);
    sp.memory_ratio = 1 - rational(c.zbar, den);
    sp.subpacketization = p.lambda * den;
    sp.load = rational(c.S, p.H * den);
    sp.Z = c.Z;
    sp.S = c.S;
    sp.Z_prime = c.z_prime;
    sp.mu = p.lambda;
    return finish_params(sp);
}

SchemeParams scheme_b_params(const DirectParams& p, int K2, int t2) {
    if (K2 < 2 || t2 < 1 || t2 >= K2) throw ParameterError("need 0 < t2 < K2");
    DirectCounts c = direct_counts(p);
    if (c.zbar == 0) throw EmptySchemeError("empty scheme: no slot exists");
    BigInt den = c.F1 - c.z_prime;
    if (den <= 0) throw ParameterError("degenerate denominator F1 - Z' <= 0");

    SchemeParams sp;
    sp.id = SchemeId::B;
    sp.H = p.H;
    sp.r = p.r;
    sp.u = p.users() * K2;
    sp.K = sp.u * binom_i64(p.H, p.r);
    sp.memory_ratio = 1 - Rational(K2 - t2, K2) * rational(c.zbar, den);
    sp.subpacketization = p.lambda * binom(K2, t2) * den;
    sp.load = Rational(K2 - t2, t2 + 1) * rational(c.S, p.H * den);
    // Composite array quantities (second factor is the (K2, t2) subset PDA):
    BigInt F2 = binom(K2, t2);
    BigInt Z2 = binom(K2 - 1, t2 - 1);
    sp.Z = c.Z * F2 + (c.F1 - c.Z) * Z2;
    sp.S = c.S * binom(K2, t2 + 1);
    sp.Z_prime = c.z_prime * F2;
    sp.mu = p.lambda;
    return finish_params(sp);
}

SchemeParams zy_params(int H, int r, std::int64_t u, const Rational& memory_ratio,
                       ZyMode mode) {
    if (H < 2 || r < 1 || r >= H) throw ParameterError("need 1 <= r < H");
    if (u < 1) throw ParameterError("need u >= 1");
    if (!(memory_ratio > 0 && memory_ratio < 1))
        throw ParameterError("memory ratio must lie strictly between 0 and 1");

    const BigInt ktilde = u * binom(H - 1, r - 1);
    Rational t = Rational(ktilde) * memory_ratio;

    SchemeParams sp;
    sp.id = SchemeId::ZY;
    sp.H = H;
    sp.r = r;
    sp.u = u;
    sp.K = u * binom_i64(H, r);
    sp.memory_ratio = memory_ratio;
    sp.load = Rational(ktilde) * (1 - memory_ratio) / (r * (t + 1));

    if (denominator(t) == 1) {
        BigInt ti = numerator(t);
        if (ti < 1 || ti >= ktilde) throw ParameterError("need 0 < t < K~");
        sp.subpacketization = r * binom(static_cast<long long>(ktilde),
                                        static_cast<long long>(ti));
        return finish_params(sp);
    }
    if (mode == ZyMode::exact)
        throw ConventionError("t = K~ * M/N is not an integer; exact mode refuses");

    // Continuous convention: C(K~, t) through log-gamma at real t.
    Dec50 n(ktilde), td = to_dec(t);
    if (!(td > 0 && td < n)) throw ParameterError("need 0 < t < K~");
    using boost::math::lgamma;
    Dec50 ln_binom = lgamma(n + 1) - lgamma(td + 1) - lgamma(n - td + 1);
    sp.approximate = true;
    sp.ln_subpacketization = log(Dec50(r)) + ln_binom;
    return finish_params(sp);
}

SchemeParams repeat_baseline_params(const SchemeParams& base, std::int64_t u) {
    if (base.u != 1) throw ParameterError("baseline repeats a u = 1 scheme");
    if (u < 1) throw ParameterError("need u >= 1");
    SchemeParams sp = base;
    sp.id = SchemeId::Repeat;
    sp.u = u;
    sp.K = base.K * u;
    sp.load = base.load * u;
    return sp;
}

} // namespace mcnet
