#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcnet/constructions.hpp"
#include "mcnet/numeric.hpp"
#include "mcnet/pda.hpp"

namespace mcnet {

// A concrete (H, r, u, M, N) network: the file library is deterministic
// pseudo-random bytes from the recorded seed. Sizes are kept in bytes; all
// loads are reported normalized to the file size in bits.
struct NetworkInstance {
    int H = 0, r = 0;
    std::int64_t u = 0;
    int N = 0;                  // number of files
    std::int64_t file_bytes = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::uint8_t>> files; // N x file_bytes

    static NetworkInstance make(int H, int r, std::int64_t u, int N,
                                std::int64_t file_bytes, std::uint64_t seed);
    std::int64_t file_bits() const { return file_bytes * 8; }
    std::int64_t user_count() const;
};

enum class PlacementMode { uncoded, mds_coded };

// Per-user cache: (file id 1-based, packet index 0-based) -> payload bytes.
// In coded mode the packet index refers to the coded packet.
struct CacheContents {
    PlacementMode mode = PlacementMode::uncoded;
    std::vector<std::map<std::pair<int, int>, std::vector<std::uint8_t>>> per_user;

    std::int64_t user_bytes(int k) const;
};

struct DemandVector {
    std::vector<int> d; // 1-based file ids, one per user/column
};

struct SimulationResult {
    std::string scheme;
    std::vector<std::vector<std::uint8_t>> decoded; // per user
    std::vector<std::int64_t> relay_bits;           // bits sent server -> relay h
    Rational measured_load;  // max_h relay_bits[h] / B
    Rational theory_load;    // closed form for the scheme
    Rational memory_ratio;   // measured cache bytes / (N * B)
    std::int64_t subpacketization = 0;
    bool all_correct = false;
    bool regular = true; // measured == theory is only promised when regular
    std::uint64_t seed = 0;

    std::int64_t total_sent_bits() const;
};

// Placement phase on a verified combinatorial array. In uncoded mode user k
// caches packet j of every file iff cell (j, k) is a star. In coded mode the
// files are first expanded with a systematic [F1, F1-Z'] erasure code and
// only the non-useless stars are cached; Z' must be uniform per column.
CacheContents place(const PdaArray& array, const NetworkInstance& net, PlacementMode mode);

// Delivery phase: one multicast signal per slot, split across the relays in
// I_s; receivers combine the signal with cached packets and, in coded mode,
// erasure-decode the file. Bit-exact: decoded blobs are compared with the
// demanded files.
SimulationResult deliver(const PdaArray& array, const NetworkInstance& net,
                         const CacheContents& caches, const DemandVector& demand,
                         PlacementMode mode);

// Relay-split scheme: every file is spread over the H relays with an [H, r]
// erasure code and each relay serves its u*C(H-1, r-1) users with the subset
// scheme at cache parameter t. Users are ordered by (relay set, index).
SimulationResult run_zy(int t, const NetworkInstance& net, const DemandVector& demand);

// Product scheme: direct construction composed with the (K2, t2) subset PDA,
// simulated with coded placement.
SimulationResult run_scheme_b(const DirectParams& p, int K2, int t2,
                              const NetworkInstance& net, const DemandVector& demand);

DemandVector random_demand(int N, std::int64_t K, std::uint64_t seed);
DemandVector worst_demand(int N, std::int64_t K); // round-robin distinct demands

} // namespace mcnet
