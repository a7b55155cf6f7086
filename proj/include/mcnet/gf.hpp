#pragma once

#include <cstdint>
#include <vector>

#include "mcnet/errors.hpp"

namespace mcnet {

// GF(2^m) for m in {8, 16}, with exp/log tables over a primitive polynomial.
// Addition is bitwise XOR, so the delivery phase's XOR semantics carry over
// unchanged to coded packets.
class GaloisField {
public:
    explicit GaloisField(int bits);

    int bits() const { return bits_; }
    std::uint32_t order() const { return order_; } // q = 2^m

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    // Smallest supported field with at least n distinct elements.
    static const GaloisField& for_symbols(std::uint32_t n);
    static const GaloisField& gf256();
    static const GaloisField& gf65536();

private:
    int bits_;
    std::uint32_t order_;
    std::vector<std::uint32_t> exp_; // exp_[i] = alpha^i, doubled for wraparound
    std::vector<std::uint32_t> log_; // log_[x] for x != 0
};

} // namespace mcnet
