#include "mcnet/simulator.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "mcnet/combinatorics.hpp"
#include "mcnet/mds.hpp"

namespace mcnet {

namespace {

using Packet = std::vector<std::uint8_t>;

void xor_into(Packet& acc, const Packet& x) {
    if (acc.size() != x.size()) throw StructuralError("XOR of unequal packet sizes");
    for (std::size_t i = 0; i < x.size(); ++i) acc[i] ^= x[i];
}

std::vector<Packet> split_blob(const Packet& blob, int parts) {
    if (parts < 1 || blob.size() % parts != 0)
        throw ParameterError("blob does not split evenly");
    const std::size_t len = blob.size() / parts;
    std::vector<Packet> out(parts);
    for (int i = 0; i < parts; ++i)
        out[i].assign(blob.begin() + i * len, blob.begin() + (i + 1) * len);
    return out;
}

Packet concat(const std::vector<Packet>& parts) {
    Packet out;
    for (const Packet& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Library seen by the delivery phase: original packets (uncoded) or coded
// packets (mds mode). library[n-1][j] is packet j of file n.
struct PacketLibrary {
    std::vector<std::vector<Packet>> packets;
    int packets_cached = 0; // indices a user may cache from
};

PacketLibrary build_library(const PdaArray& array, const NetworkInstance& net,
                            PlacementMode mode, int z_prime) {
    PacketLibrary lib;
    const int F1 = array.rows();
    if (mode == PlacementMode::uncoded) {
        if (net.file_bytes % F1 != 0)
            throw ParameterError("file size must be divisible by the packet count");
        for (const auto& f : net.files) lib.packets.push_back(split_blob(f, F1));
    } else {
        const int data_packets = F1 - z_prime;
        if (data_packets < 1) throw ParameterError("no data packets left after star removal");
        if (net.file_bytes % data_packets != 0)
            throw ParameterError("file size must be divisible by the data packet count");
        MdsCode code(F1, data_packets);
        if ((net.file_bytes / data_packets) % code.element_bytes() != 0)
            throw ParameterError("packet size must be a multiple of the field element size");
        for (const auto& f : net.files)
            lib.packets.push_back(code.encode(split_blob(f, data_packets)));
    }
    lib.packets_cached = F1;
    return lib;
}

} // namespace

NetworkInstance NetworkInstance::make(int H, int r, std::int64_t u, int N,
                                      std::int64_t file_bytes, std::uint64_t seed) {
    if (H < 2 || r < 1 || r >= H) throw ParameterError("need 1 <= r < H");
    if (u < 1 || N < 1 || file_bytes < 1) throw ParameterError("bad network size");
    NetworkInstance net;
    net.H = H;
    net.r = r;
    net.u = u;
    net.N = N;
    net.file_bytes = file_bytes;
    net.seed = seed;
    std::mt19937_64 rng(seed);
    net.files.assign(N, std::vector<std::uint8_t>(file_bytes));
    for (auto& f : net.files)
        for (auto& b : f) b = static_cast<std::uint8_t>(rng());
    return net;
}

std::int64_t NetworkInstance::user_count() const { return u * binom_i64(H, r); }

std::int64_t CacheContents::user_bytes(int k) const {
    std::int64_t total = 0;
    for (const auto& [key, payload] : per_user.at(k)) total += payload.size();
    return total;
}

std::int64_t SimulationResult::total_sent_bits() const {
    return std::accumulate(relay_bits.begin(), relay_bits.end(), std::int64_t{0});
}

CacheContents place(const PdaArray& array, const NetworkInstance& net, PlacementMode mode) {
    CpdaReport rep = verify_cpda(array);
    if (!rep.is_cpda) throw ParameterError("placement requires a verified array");
    if (rep.S < 1) throw ParameterError("all-star array: nothing to deliver");
    if (net.user_count() != array.cols())
        throw ParameterError("network user count differs from column count");

    int z_prime = 0;
    UselessStars useless;
    if (mode == PlacementMode::mds_coded) {
        useless = find_useless_stars(array);
        if (!useless.uniform())
            throw ParameterError("coded placement needs a uniform useless-star count");
        z_prime = useless.uniform_count();
    }
    PacketLibrary lib = build_library(array, net, mode, z_prime);

    CacheContents caches;
    caches.mode = mode;
    caches.per_user.resize(array.cols());
    for (int k = 0; k < array.cols(); ++k) {
        std::set<int> skip; // useless star rows are not cached in coded mode
        if (mode == PlacementMode::mds_coded)
            skip.insert(useless.rows_per_column[k].begin(), useless.rows_per_column[k].end());
        for (int j = 0; j < array.rows(); ++j) {
            if (!array.at(j, k).is_star() || skip.count(j)) continue;
            for (int n = 1; n <= net.N; ++n)
                caches.per_user[k][{n, j}] = lib.packets[n - 1][j];
        }
    }
    return caches;
}

SimulationResult deliver(const PdaArray& array, const NetworkInstance& net,
                         const CacheContents& caches, const DemandVector& demand,
                         PlacementMode mode) {
    if (mode != caches.mode) throw ParameterError("placement/delivery mode mismatch");
    CpdaReport rep = verify_cpda(array);
    if (!rep.is_cpda) throw ParameterError("delivery requires a verified array");
    const int F1 = array.rows(), K = array.cols();
    if (net.user_count() != K)
        throw ParameterError("network user count differs from column count");
    for (const ColumnLabel& c : array.col_labels)
        if (c.relay_set.back() > net.H)
            throw ParameterError("label references a relay outside the network");
    if (static_cast<int>(demand.d.size()) != K)
        throw ParameterError("demand vector length differs from user count");
    for (int d : demand.d)
        if (d < 1 || d > net.N) throw ParameterError("demanded file id out of range");

    int z_prime = 0;
    UselessStars useless;
    if (mode == PlacementMode::mds_coded) {
        useless = find_useless_stars(array);
        z_prime = useless.uniform_count();
    }
    const int packets = F1 - z_prime;
    PacketLibrary lib = build_library(array, net, mode, z_prime);

    std::int64_t split_lcm = 1;
    for (const auto& [s, inter] : rep.intersections)
        split_lcm = std::lcm(split_lcm, static_cast<std::int64_t>(inter.size()));
    if (net.file_bytes % (static_cast<std::int64_t>(packets) * split_lcm) != 0)
        throw ParameterError("file size must be divisible by packets * lcm(|I_s|)");
    const std::int64_t packet_bytes = net.file_bytes / packets;

    // Server side: one XOR signal per slot, split across the relays of I_s.
    // parts[s] holds the sub-packets in relay order; every sub-packet is sent
    // exactly once.
    SimulationResult res;
    res.scheme = mode == PlacementMode::uncoded ? "cpda-uncoded" : "cpda-mds";
    res.seed = net.seed;
    res.relay_bits.assign(net.H, 0);
    std::map<std::int32_t, std::vector<Packet>> parts;
    for (const auto& [s, cells] : rep.occurrences) {
        Packet signal(packet_bytes, 0);
        for (const auto& [j, k] : cells) xor_into(signal, lib.packets[demand.d[k] - 1][j]);
        const std::vector<int>& inter = rep.intersections.at(s);
        parts[s] = split_blob(signal, static_cast<int>(inter.size()));
        for (std::size_t l = 0; l < inter.size(); ++l)
            res.relay_bits[inter[l] - 1] += static_cast<std::int64_t>(parts[s][l].size()) * 8;
    }

    // User side: assemble each needed signal from the sub-packets heard via
    // the user's own relays, then cancel the cached packets.
    std::optional<MdsCode> code;
    if (mode == PlacementMode::mds_coded) code.emplace(F1, packets);
    res.decoded.resize(K);
    bool all_ok = true;
    for (int k = 0; k < K; ++k) {
        const std::vector<int>& my_relays = array.col_labels[k].relay_set;
        const int want = demand.d[k];
        std::map<int, Packet> recovered; // packet index -> payload
        for (int j = 0; j < F1; ++j) {
            PdaEntry e = array.at(j, k);
            if (e.is_star()) continue;
            const std::int32_t s = e.symbol_id();
            const std::vector<int>& inter = rep.intersections.at(s);
            if (!is_subset(inter, my_relays))
                throw StructuralError("delivery routed a needed signal away from its user");
            Packet signal;
            for (std::size_t l = 0; l < inter.size(); ++l) {
                // heard because relay inter[l] is one of the user's relays
                signal.insert(signal.end(), parts.at(s)[l].begin(), parts.at(s)[l].end());
            }
            for (const auto& [j2, k2] : rep.occurrences.at(s)) {
                if (k2 == k) continue;
                xor_into(signal, caches.per_user[k].at({demand.d[k2], j2}));
            }
            recovered[j] = std::move(signal);
        }
        for (const auto& [key, payload] : caches.per_user[k])
            if (key.first == want && !recovered.count(key.second)) recovered[key.second] = payload;

        if (mode == PlacementMode::uncoded) {
            std::vector<Packet> ordered(F1);
            for (auto& [j, p] : recovered) ordered[j] = std::move(p);
            res.decoded[k] = concat(ordered);
        } else {
            // Exactly F1 - Z' distinct coded packets: the delivered ones
            // plus the cached non-useless stars. decode() rejects any other
            // count.
            std::vector<std::pair<int, Packet>> have;
            for (auto& [j, p] : recovered) have.emplace_back(j, std::move(p));
            res.decoded[k] = concat(code->decode(have));
        }
        all_ok = all_ok && res.decoded[k] == net.files[want - 1];
    }
    res.all_correct = all_ok;

    // Closed-form reference load; exact equality is only promised when the
    // intersections are uniform in both senses.
    res.regular = rep.mu.has_value() && rep.nu.has_value();
    res.theory_load = rational(rep.S, static_cast<std::int64_t>(net.H) * packets);
    std::int64_t max_bits = *std::max_element(res.relay_bits.begin(), res.relay_bits.end());
    res.measured_load = rational(max_bits, net.file_bits());
    res.memory_ratio =
        rational(caches.user_bytes(0), net.file_bytes * net.N);
    for (int k = 0; k < K; ++k)
        if (caches.user_bytes(k) != caches.user_bytes(0))
            throw StructuralError("cache sizes differ between users");
    res.subpacketization =
        static_cast<std::int64_t>(packets) * (rep.mu ? *rep.mu : split_lcm);
    return res;
}

SimulationResult run_zy(int t, const NetworkInstance& net, const DemandVector& demand) {
    const std::int64_t ktilde64 = net.u * binom_i64(net.H - 1, net.r - 1);
    if (ktilde64 < 2 || ktilde64 > 1 << 20) throw ParameterError("K~ out of simulation range");
    const int ktilde = static_cast<int>(ktilde64);
    if (t < 1 || t >= ktilde) throw ParameterError("need 0 < t < K~");
    const std::int64_t K = net.user_count();
    if (static_cast<std::int64_t>(demand.d.size()) != K)
        throw ParameterError("demand vector length differs from user count");
    for (int d : demand.d)
        if (d < 1 || d > net.N) throw ParameterError("demanded file id out of range");

    PdaArray mn = mn_pda(ktilde, t);
    const int F_mn = mn.rows();
    MdsCode relay_code(net.H, net.r);
    if (net.file_bytes % (static_cast<std::int64_t>(net.r) * F_mn) != 0)
        throw ParameterError("file size must be divisible by r * C(K~, t)");
    if ((net.file_bytes / net.r) % relay_code.element_bytes() != 0)
        throw ParameterError("coded piece must be a multiple of the field element size");

    // Users ordered by (relay set lex, index); users_of[h] lists, in that
    // global order, the users a relay serves, which fixes their column in
    // the relay's subset array.
    std::vector<Subset> relay_sets = k_subsets_lex(net.H, net.r);
    struct User {
        Subset relays;
        int index;
    };
    std::vector<User> users;
    for (const Subset& T : relay_sets)
        for (int i = 1; i <= net.u; ++i) users.push_back({T, i});
    std::vector<std::vector<int>> users_of(net.H + 1);
    for (std::size_t g = 0; g < users.size(); ++g)
        for (int h : users[g].relays) users_of[h].push_back(static_cast<int>(g));
    for (int h = 1; h <= net.H; ++h)
        if (static_cast<int>(users_of[h].size()) != ktilde)
            throw StructuralError("relay user count mismatch");

    // Spread each file over the relays: piece h of file n.
    std::vector<std::vector<Packet>> spread(net.N); // [n-1][h-1]
    for (int n = 1; n <= net.N; ++n)
        spread[n - 1] = relay_code.encode(split_blob(net.files[n - 1], net.r));

    // Placement: for each of its relays, a user caches the starred rows of
    // its column, for every file.
    const std::int64_t sub_bytes = net.file_bytes / net.r / F_mn;
    std::vector<std::map<std::pair<int, std::pair<int, int>>, Packet>> cache(users.size());
    for (int h = 1; h <= net.H; ++h)
        for (int c = 0; c < ktilde; ++c) {
            int g = users_of[h][c];
            for (int j = 0; j < F_mn; ++j) {
                if (!mn.at(j, c).is_star()) continue;
                for (int n = 1; n <= net.N; ++n) {
                    auto pieces = split_blob(spread[n - 1][h - 1], F_mn);
                    cache[g][{n, {h, j}}] = pieces[j];
                }
            }
        }

    SimulationResult res;
    res.scheme = "zy";
    res.seed = net.seed;
    res.relay_bits.assign(net.H, 0);

    // Delivery: each relay runs its own subset-scheme broadcast; signals are
    // not split further.
    CpdaReport mn_rep = verify_pda(mn);
    std::vector<std::map<std::int32_t, Packet>> signals(net.H + 1);
    for (int h = 1; h <= net.H; ++h) {
        for (const auto& [s, cells] : mn_rep.occurrences) {
            Packet x(sub_bytes, 0);
            for (const auto& [j, c] : cells) {
                int g = users_of[h][c];
                auto pieces = split_blob(spread[demand.d[g] - 1][h - 1], F_mn);
                xor_into(x, pieces[j]);
            }
            res.relay_bits[h - 1] += static_cast<std::int64_t>(x.size()) * 8;
            signals[h][s] = std::move(x);
        }
    }

    // Decode: per relay, recover the missing rows of the demanded coded
    // piece; then erasure-decode the file from the r pieces.
    res.decoded.resize(users.size());
    bool all_ok = true;
    for (std::size_t g = 0; g < users.size(); ++g) {
        const int want = demand.d[g];
        std::vector<std::pair<int, Packet>> pieces;
        for (int h : users[g].relays) {
            int c = static_cast<int>(
                std::find(users_of[h].begin(), users_of[h].end(), static_cast<int>(g)) -
                users_of[h].begin());
            std::vector<Packet> rows(F_mn);
            for (int j = 0; j < F_mn; ++j) {
                if (mn.at(j, c).is_star()) {
                    rows[j] = cache[g].at({want, {h, j}});
                    continue;
                }
                Packet x = signals[h].at(mn.at(j, c).symbol_id());
                for (const auto& [j2, c2] : mn_rep.occurrences.at(mn.at(j, c).symbol_id())) {
                    if (c2 == c) continue;
                    int g2 = users_of[h][c2];
                    xor_into(x, cache[g].at({demand.d[g2], {h, j2}}));
                }
                rows[j] = std::move(x);
            }
            pieces.emplace_back(h - 1, concat(rows));
        }
        res.decoded[g] = concat(relay_code.decode(pieces));
        all_ok = all_ok && res.decoded[g] == net.files[want - 1];
    }
    res.all_correct = all_ok;
    res.regular = true;
    res.theory_load = Rational(ktilde - t, net.r * (t + 1));
    std::int64_t max_bits = *std::max_element(res.relay_bits.begin(), res.relay_bits.end());
    res.measured_load = rational(max_bits, net.file_bits());
    std::int64_t bytes0 = 0;
    for (const auto& [key, p] : cache[0]) bytes0 += p.size();
    for (std::size_t g = 0; g < users.size(); ++g) {
        std::int64_t b = 0;
        for (const auto& [key, p] : cache[g]) b += p.size();
        if (b != bytes0) throw StructuralError("cache sizes differ between users");
    }
    res.memory_ratio = rational(bytes0, net.file_bytes * net.N);
    res.subpacketization = static_cast<std::int64_t>(net.r) * F_mn;
    return res;
}

SimulationResult run_scheme_b(const DirectParams& p, int K2, int t2,
                              const NetworkInstance& net, const DemandVector& demand) {
    SchemeParams theory = scheme_b_params(p, K2, t2);
    PdaArray L = hybrid_cpda(direct_cpda(p).array, mn_pda(K2, t2));
    CacheContents caches = place(L, net, PlacementMode::mds_coded);
    SimulationResult res = deliver(L, net, caches, demand, PlacementMode::mds_coded);
    res.scheme = "scheme-b";
    if (res.theory_load != theory.load)
        throw StructuralError("composite load formula disagrees with the array");
    if (res.memory_ratio != theory.memory_ratio)
        throw StructuralError("composite memory formula disagrees with the array");
    return res;
}

DemandVector random_demand(int N, std::int64_t K, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, N);
    DemandVector d;
    d.d.resize(K);
    for (auto& v : d.d) v = pick(rng);
    return d;
}

DemandVector worst_demand(int N, std::int64_t K) {
    // Delivery sends every slot's signal regardless of the demand values, so
    // the worst-case load is attained by any demand; this round-robin
    // assignment maximizes distinct files as a convention.
    DemandVector d;
    d.d.resize(K);
    for (std::int64_t k = 0; k < K; ++k) d.d[k] = static_cast<int>(k % N) + 1;
    return d;
}

} // namespace mcnet
