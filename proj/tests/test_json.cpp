#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "mcnet/constructions.hpp"
#include "mcnet/pda_json.hpp"

using namespace mcnet;
using nlohmann::json;

TEST_CASE("documents survive a serialization round trip") {
    DirectCpda built = direct_cpda({4, 2, 2, 1, 1});
    ArrayDocument doc{built.array, built.symbol_labels};
    ArrayDocument back = array_from_json(array_to_json(doc));
    CHECK(back.array == doc.array);
    CHECK(back.symbol_labels == doc.symbol_labels);

    ArrayDocument bare{fixtures::example_pda_6_4_2_4(), {}};
    ArrayDocument bare_back = array_from_json(array_to_json(bare));
    CHECK(bare_back.array == bare.array);
    CHECK(bare_back.symbol_labels.empty());
}

TEST_CASE("malformed documents are structural errors") {
    json ragged = {{"F", 2}, {"K", 2}, {"entries", {{1, nullptr}, {1}}}};
    CHECK_THROWS_AS(array_from_json(ragged), StructuralError);

    json wrong_rows = {{"F", 3}, {"K", 2}, {"entries", {{1, nullptr}, {nullptr, 1}}}};
    CHECK_THROWS_AS(array_from_json(wrong_rows), StructuralError);

    json zero_symbol = {{"F", 1}, {"K", 2}, {"entries", {{0, 1}}}};
    CHECK_THROWS_AS(array_from_json(zero_symbol), StructuralError);

    json missing = {{"F", 1}, {"K", 1}};
    CHECK_THROWS_AS(array_from_json(missing), StructuralError);

    json bad_labels = {{"F", 1},
                       {"K", 2},
                       {"entries", {{nullptr, 1}}},
                       {"col_labels", {{{"T", {1}}, {"i", 1}}}}};
    CHECK_THROWS_AS(array_from_json(bad_labels), StructuralError);
}

TEST_CASE("simulation reports use rational strings") {
    SimulationResult r;
    r.scheme = "cpda-uncoded";
    r.measured_load = Rational(1, 3);
    r.theory_load = Rational(1, 3);
    r.memory_ratio = Rational(2, 3);
    r.relay_bits = {10, 10};
    r.all_correct = true;
    r.subpacketization = 6;
    r.seed = 7;
    std::string s = simulation_report_json(r);
    CHECK(s.find("\"measured_load\": \"1/3\"") != std::string::npos);
    CHECK(s.find("\"memory_ratio\": \"2/3\"") != std::string::npos);
    CHECK(s.find("\"all_correct\": true") != std::string::npos);
}
