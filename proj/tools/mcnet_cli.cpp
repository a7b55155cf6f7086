// Command-line front end: construct arrays, verify them, run bit-exact
// placement/delivery simulations, and export comparison/sweep CSV data.
//
// Exit codes: 0 success, 1 axiom or assertion failure, 2 usage error,
// 3 I/O or file-content error.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mcnet/analytics.hpp"
#include "mcnet/constructions.hpp"
#include "mcnet/pda.hpp"
#include "mcnet/pda_json.hpp"
#include "mcnet/simulator.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFail = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    out << text;
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

void print_report_line(const mcnet::CpdaReport& rep, bool labeled) {
    std::cout << rep.params_string() << " "
              << (labeled ? (rep.is_cpda ? "CPDA" : "not a CPDA")
                          : (rep.is_pda ? "PDA" : "not a PDA"))
              << "\n";
}

void print_report(const mcnet::CpdaReport& rep, bool labeled) {
    print_report_line(rep, labeled);
    if (labeled && rep.is_cpda) {
        if (rep.mu) std::cout << "uniform |I_s| = " << *rep.mu << "\n";
        if (rep.nu) std::cout << "uniform per-relay slot count = " << *rep.nu << "\n";
    }
    for (const mcnet::Violation& v : rep.violations) {
        std::cout << "violation " << mcnet::axiom_name(v.axiom) << ": " << v.detail;
        if (!v.cells.empty()) {
            std::cout << " [cells";
            for (auto [j, k] : v.cells) std::cout << " (" << j << "," << k << ")";
            std::cout << "]";
        }
        std::cout << "\n";
    }
}

mcnet::DemandVector make_demand(const std::string& spec, int N, std::int64_t K,
                                std::uint64_t seed) {
    if (spec == "random") return mcnet::random_demand(N, K, seed);
    if (spec == "worst") return mcnet::worst_demand(N, K);
    std::ifstream in(spec);
    if (!in) throw std::ios_base::failure("cannot read demand file " + spec);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw mcnet::StructuralError(std::string("bad demand file: ") + e.what());
    }
    mcnet::DemandVector d;
    d.d = j.get<std::vector<int>>();
    return d;
}

struct SimulateOptions {
    std::string array_path;
    std::string mode = "uncoded";
    bool zy = false, scheme_b = false;
    int H = 0, r = 0, a = 0, omega = 1, lambda = 1, K2 = 0, t2 = 0, t = 0;
    std::int64_t u = 1;
    int files = 1;
    std::int64_t bytes = 0;
    std::uint64_t seed = 1;
    std::string demand = "random";
    std::string out_path;
};

int run_simulate(const SimulateOptions& opt) {
    using namespace mcnet;
    SimulationResult result;
    if (opt.zy) {
        NetworkInstance net =
            NetworkInstance::make(opt.H, opt.r, opt.u, opt.files, opt.bytes, opt.seed);
        result = run_zy(opt.t, net,
                        make_demand(opt.demand, net.N, net.user_count(), opt.seed));
    } else if (opt.scheme_b) {
        DirectParams p{opt.H, opt.r, opt.a, opt.omega, opt.lambda};
        SchemeParams sp = scheme_b_params(p, opt.K2, opt.t2);
        NetworkInstance net =
            NetworkInstance::make(opt.H, opt.r, sp.u, opt.files, opt.bytes, opt.seed);
        result = run_scheme_b(p, opt.K2, opt.t2, net,
                              make_demand(opt.demand, net.N, net.user_count(), opt.seed));
    } else {
        if (opt.array_path.empty())
            throw ParameterError("simulate needs --array, --zy or --scheme-b");
        ArrayDocument doc = load_array(opt.array_path);
        CpdaReport rep = verify_cpda(doc.array);
        if (!rep.is_cpda) {
            std::cout << "input array fails verification\n";
            return kVerdictFail;
        }
        // Infer the network shape from the labels.
        int H = 0;
        for (const ColumnLabel& c : doc.array.col_labels)
            H = std::max(H, c.relay_set.back());
        int r = static_cast<int>(doc.array.col_labels.front().relay_set.size());
        std::int64_t u = doc.array.cols() / binom_i64(H, r);
        PlacementMode mode;
        if (opt.mode == "uncoded")
            mode = PlacementMode::uncoded;
        else if (opt.mode == "mds")
            mode = PlacementMode::mds_coded;
        else
            throw ParameterError("--mode must be uncoded or mds");
        NetworkInstance net = NetworkInstance::make(H, r, u, opt.files, opt.bytes, opt.seed);
        CacheContents caches = place(doc.array, net, mode);
        result = deliver(doc.array, net, caches,
                         make_demand(opt.demand, net.N, net.user_count(), opt.seed), mode);
    }
    std::string report = simulation_report_json(result);
    if (!opt.out_path.empty()) write_text(opt.out_path, report);
    std::cout << report;
    if (!result.all_correct) return kVerdictFail;
    if (result.regular && result.measured_load != result.theory_load) return kVerdictFail;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coded caching toolkit for multiaccess combination networks"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build an array and write it as JSON");
    construct->require_subcommand(1);
    int mn_K = 0, mn_t = 0;
    std::string out_path;
    auto* c_mn = construct->add_subcommand("mn", "subset PDA for a shared link");
    c_mn->add_option("--K", mn_K, "number of users")->required();
    c_mn->add_option("--t", mn_t, "cache parameter")->required();
    c_mn->add_option("--out", out_path, "output path");

    mcnet::DirectParams dp;
    auto* c_direct = construct->add_subcommand("direct", "direct combinatorial CPDA");
    c_direct->add_option("--H", dp.H, "relay count")->required();
    c_direct->add_option("--r", dp.r, "relays per user")->required();
    c_direct->add_option("--a", dp.a, "row weight")->required();
    c_direct->add_option("--omega", dp.omega, "column zero weight")->required();
    c_direct->add_option("--lambda", dp.lambda, "agreement count")->required();
    c_direct->add_option("--out", out_path, "output path");

    std::string p_path, a_path;
    auto* c_hybrid = construct->add_subcommand("hybrid", "product of a CPDA and a PDA");
    c_hybrid->add_option("--P", p_path, "labeled first factor (JSON)")->required();
    c_hybrid->add_option("--A", a_path, "second factor (JSON)")->required();
    c_hybrid->add_option("--out", out_path, "output path");

    // verify
    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "check the axioms of an array file");
    verify->add_option("path", verify_path, "array JSON")->required();

    // simulate
    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "bit-exact placement/delivery run");
    simulate->add_option("--array", sim.array_path, "CPDA JSON to simulate");
    simulate->add_option("--mode", sim.mode, "uncoded|mds (with --array)");
    simulate->add_flag("--zy", sim.zy, "run the relay-split scheme");
    simulate->add_flag("--scheme-b", sim.scheme_b, "run the product scheme");
    simulate->add_option("--H", sim.H, "relay count");
    simulate->add_option("--r", sim.r, "relays per user");
    simulate->add_option("--u", sim.u, "users per relay set");
    simulate->add_option("--a", sim.a, "row weight (scheme-b)");
    simulate->add_option("--omega", sim.omega, "column zero weight (scheme-b)");
    simulate->add_option("--lambda", sim.lambda, "agreement count (scheme-b)");
    simulate->add_option("--K2", sim.K2, "second factor users (scheme-b)");
    simulate->add_option("--t2", sim.t2, "second factor cache parameter (scheme-b)");
    simulate->add_option("--t", sim.t, "cache parameter (zy)");
    simulate->add_option("--files", sim.files, "library size N")->required();
    simulate->add_option("--bytes", sim.bytes, "file size in bytes")->required();
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--demand", sim.demand, "random|worst|<json file>");
    simulate->add_option("--out", sim.out_path, "write the report JSON here");

    // compare
    mcnet::CompareConfig cmp;
    int cmp_K2 = 0, cmp_t2 = 0;
    std::string convention = "continuous";
    std::string cmp_out;
    auto* compare = app.add_subcommand("compare", "scheme vs relay-split scheme row");
    compare->add_option("--H", cmp.H, "relay count")->required();
    compare->add_option("--r", cmp.r, "relays per user")->required();
    compare->add_option("--a", cmp.a, "row weight")->required();
    compare->add_option("--K2", cmp_K2, "second factor users");
    compare->add_option("--t2", cmp_t2, "second factor cache parameter");
    compare->add_option("--convention", convention, "continuous|exact");
    compare->add_option("--out", cmp_out, "write CSV here");

    // sweep
    int sw_H = 0, sw_r = 0;
    std::int64_t sw_u = 0;
    std::string sw_out, sw_schemes = "a,b,zy,repeat";
    auto* sweep = app.add_subcommand("sweep", "memory/load/subpacketization frontier CSV");
    sweep->add_option("--H", sw_H, "relay count")->required();
    sweep->add_option("--r", sw_r, "relays per user")->required();
    sweep->add_option("--u", sw_u, "users per relay set")->required();
    sweep->add_option("--schemes", sw_schemes, "comma list of a,b,zy,repeat");
    sweep->add_option("--out", sw_out, "write CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        using namespace mcnet;
        if (construct->parsed()) {
            ArrayDocument doc;
            bool labeled = false;
            if (c_mn->parsed()) {
                doc.array = mn_pda(mn_K, mn_t);
            } else if (c_direct->parsed()) {
                DirectCpda built = direct_cpda(dp);
                doc.array = built.array;
                doc.symbol_labels = built.symbol_labels;
                labeled = true;
            } else {
                doc.array = hybrid_cpda(load_array(p_path).array, load_array(a_path).array);
                labeled = true;
            }
            CpdaReport rep = labeled ? verify_cpda(doc.array) : verify_pda(doc.array);
            print_report_line(rep, labeled);
            if (!out_path.empty()) save_array(out_path, doc);
            return (labeled ? rep.is_cpda : rep.is_pda) ? kOk : kVerdictFail;
        }
        if (verify->parsed()) {
            ArrayDocument doc = load_array(verify_path);
            bool labeled = doc.array.has_col_labels();
            CpdaReport rep = labeled ? verify_cpda(doc.array) : verify_pda(doc.array);
            print_report(rep, labeled);
            return (labeled ? rep.is_cpda : rep.is_pda) ? kOk : kVerdictFail;
        }
        if (simulate->parsed()) return run_simulate(sim);
        if (compare->parsed()) {
            if (cmp_K2 > 0) cmp.K2 = cmp_K2;
            if (cmp_t2 > 0) cmp.t2 = cmp_t2;
            ZyMode mode;
            if (convention == "continuous")
                mode = ZyMode::continuous;
            else if (convention == "exact")
                mode = ZyMode::exact;
            else
                throw ParameterError("--convention must be continuous or exact");
            std::string csv = comparison_csv({compare_row(cmp, mode)});
            if (!cmp_out.empty()) write_text(cmp_out, csv);
            std::cout << csv;
            return kOk;
        }
        if (sweep->parsed()) {
            std::set<SchemeId> ids;
            std::stringstream ss(sw_schemes);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "a") ids.insert(SchemeId::A);
                else if (item == "b") ids.insert(SchemeId::B);
                else if (item == "zy") ids.insert(SchemeId::ZY);
                else if (item == "repeat") ids.insert(SchemeId::Repeat);
                else throw ParameterError("unknown scheme " + item);
            }
            std::vector<SweepRow> rows = sweep_memory(sw_H, sw_r, sw_u, ids);
            std::string csv = sweep_csv(rows);
            if (!sw_out.empty()) write_text(sw_out, csv);
            std::cout << "H=" << sw_H << " r=" << sw_r << " u=" << sw_u
                      << " K=" << sw_u * binom_i64(sw_H, sw_r) << " rows=" << rows.size()
                      << "\n";
            if (sw_out.empty()) std::cout << csv;
            return kOk;
        }
    } catch (const mcnet::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const mcnet::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}
