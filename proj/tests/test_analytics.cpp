#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "mcnet/analytics.hpp"

using namespace mcnet;

namespace {

double dd(const Dec50& d) { return static_cast<double>(d); }

} // namespace

TEST_CASE("specialized closed forms at sample points") {
    SchemeParams row = specialize_lambda_omega_1(15, 2, 4);
    CHECK(row.K == 210);
    CHECK(row.memory_ratio == Rational(286, 1079));

    SchemeParams small = specialize_lambda_omega_1(4, 2, 2);
    CHECK(small.memory_ratio == Rational(1, 2));
    CHECK(small.subpacketization == 4);

    CHECK_THROWS_AS(specialize_lambda_omega_1(4, 1, 2), ParameterError);
}

TEST_CASE("specialization equals the general closed forms") {
    for (int H = 4; H <= 10; ++H)
        for (int r = 2; r <= 4 && r < H; ++r)
            for (int a = 2; a <= 6 && a < H; ++a) {
                INFO("H=" << H << " r=" << r << " a=" << a);
                bool spec_empty = false, gen_empty = false;
                SchemeParams spec, gen;
                try {
                    spec = specialize_lambda_omega_1(H, r, a);
                } catch (const EmptySchemeError&) {
                    spec_empty = true;
                }
                try {
                    gen = scheme_a_params({H, r, a, 1, 1});
                } catch (const EmptySchemeError&) {
                    gen_empty = true;
                }
                CHECK(spec_empty == gen_empty);
                if (spec_empty) continue;
                CHECK(spec.memory_ratio == gen.memory_ratio);
                CHECK(spec.subpacketization == gen.subpacketization);
                CHECK(spec.load == gen.load);
                CHECK(*spec.Z == *gen.Z);
                CHECK(*spec.S == *gen.S);
                CHECK(*spec.Z_prime == *gen.Z_prime);
            }
}

TEST_CASE("comparison rows reproduce the published ratios") {
    ComparisonRow r1 = compare_row({15, 2, 4, {}, {}}, ZyMode::continuous);
    CHECK(dd(r1.ratio_R) == doctest::Approx(1.59).epsilon(0.01));
    CHECK(r1.K == 210);

    ComparisonRow r2 = compare_row({16, 3, 4, {}, {}}, ZyMode::continuous);
    CHECK(dd(r2.ratio_R) == doctest::Approx(8.19).epsilon(0.01));
    CHECK(r2.K == 1680);
}

TEST_CASE("exact convention works when t is integral and refuses otherwise") {
    ComparisonRow r = compare_row({4, 2, 2, {}, {}}, ZyMode::exact);
    CHECK(r.ratio_R_exact == Rational(4, 3));
    CHECK_THROWS_AS(compare_row({15, 2, 4, {}, {}}, ZyMode::exact), ConventionError);
}

TEST_CASE("published ratio bound holds where the relay count dominates") {
    // ratio < (r*M/(H*N) + 1/K) * H(H-1)...(H-r+1) / ((a+r-1)...(a+1)).
    // The bound drops lower-order terms and needs H large relative to a.
    struct Cfg {
        int H, r, a;
        bool holds;
    };
    for (Cfg c : {Cfg{15, 2, 4, true}, Cfg{16, 3, 4, true}, Cfg{18, 3, 6, true},
                  Cfg{20, 3, 6, true}, Cfg{20, 2, 8, true}, Cfg{24, 4, 6, true},
                  Cfg{25, 3, 10, true}, Cfg{30, 3, 8, true}, Cfg{40, 4, 10, true},
                  // negative control: a + r close to H breaks the bound
                  Cfg{20, 3, 12, false}}) {
        INFO("H=" << c.H << " r=" << c.r << " a=" << c.a);
        ComparisonRow row = compare_row({c.H, c.r, c.a, {}, {}}, ZyMode::continuous);
        Rational lead = Rational(c.r) * row.memory_ratio / c.H + Rational(1, row.K);
        Rational falling = 1, rising = 1;
        for (int i = 0; i < c.r; ++i) falling *= c.H - i;
        for (int i = 1; i <= c.r - 1; ++i) rising *= c.a + i;
        CHECK((row.ratio_R_exact < lead * falling / rising) == c.holds);
    }
}

TEST_CASE("comparison CSV format is stable") {
    std::vector<ComparisonRow> rows = {compare_row({4, 2, 2, {}, {}}, ZyMode::exact),
                                       compare_row({4, 2, 2, 2, 1}, ZyMode::continuous)};
    std::string csv = comparison_csv(rows);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "H,r,a,K2,t2,K,M_over_N,ratio_R,ln_F_ratio,convention");
    std::getline(in, line);
    CHECK(line.substr(0, 9) == "4,2,2,,,1"); // K = 12
    CHECK(line.find("exact") != std::string::npos);
    std::getline(in, line);
    CHECK(line.substr(0, 9) == "4,2,2,2,1");
    CHECK(line.find("continuous") != std::string::npos);
}

TEST_CASE("sweep covers every requested scheme and dedups to the frontier") {
    std::vector<SweepRow> rows =
        sweep_memory(6, 2, 2, {SchemeId::A, SchemeId::B, SchemeId::ZY, SchemeId::Repeat});
    std::map<SchemeId, int> count;
    for (const SweepRow& row : rows) {
        ++count[row.scheme];
        CHECK(row.memory_ratio > 0);
        CHECK(row.memory_ratio < 1);
        CHECK(row.load > 0);
    }
    CHECK(count[SchemeId::A] > 0);
    CHECK(count[SchemeId::B] > 0);
    CHECK(count[SchemeId::ZY] == 9); // K~ = 10, t in [1..9]
    CHECK(count[SchemeId::Repeat] > 0);

    // Unique memory ratios per scheme, sorted output.
    std::map<SchemeId, std::map<Rational, Rational>> seen;
    for (const SweepRow& row : rows) {
        auto [it, fresh] = seen[row.scheme].emplace(row.memory_ratio, row.load);
        CHECK(fresh);
    }

    CHECK_THROWS_AS(sweep_memory(6, 2, 2, {}), ParameterError);
}

TEST_CASE("relay-split loads decrease strictly in t") {
    std::vector<SweepRow> rows = sweep_memory(4, 2, 2, {SchemeId::ZY});
    REQUIRE(rows.size() == 5); // K~ = 6
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].memory_ratio > rows[i - 1].memory_ratio);
        CHECK(rows[i].load < rows[i - 1].load);
    }
}

TEST_CASE("repeat series is the u-scaled single-access series") {
    std::vector<SweepRow> once = sweep_memory(6, 2, 1, {SchemeId::Repeat});
    std::vector<SweepRow> thrice = sweep_memory(6, 2, 3, {SchemeId::Repeat});
    REQUIRE(once.size() == thrice.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
        CHECK(once[i].memory_ratio == thrice[i].memory_ratio);
        CHECK(once[i].load * 3 == thrice[i].load);
        CHECK(once[i].subpacketization == thrice[i].subpacketization);
    }
}

TEST_CASE("scheme ordering at exactly matched memory ratios, small case") {
    std::vector<SweepRow> rows = sweep_memory(
        6, 2, 2, {SchemeId::A, SchemeId::B, SchemeId::ZY, SchemeId::Repeat});
    std::map<SchemeId, std::map<Rational, Rational>> series;
    for (const SweepRow& row : rows) series[row.scheme][row.memory_ratio] = row.load;
    auto check_pair = [&](SchemeId lo, SchemeId hi) {
        for (const auto& [m, load_lo] : series[lo]) {
            auto it = series[hi].find(m);
            if (it != series[hi].end()) CHECK(load_lo <= it->second);
        }
    };
    check_pair(SchemeId::ZY, SchemeId::B);
    check_pair(SchemeId::B, SchemeId::A);
    check_pair(SchemeId::A, SchemeId::Repeat);
}
