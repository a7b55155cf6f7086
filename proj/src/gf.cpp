#include "mcnet/gf.hpp"

namespace mcnet {

namespace {
// x^8 + x^4 + x^3 + x^2 + 1 and x^16 + x^12 + x^3 + x + 1, both primitive.
constexpr std::uint32_t kPoly8 = 0x11D;
constexpr std::uint32_t kPoly16 = 0x1100B;
} // namespace

GaloisField::GaloisField(int bits) : bits_(bits) {
    std::uint32_t poly;
    switch (bits) {
        case 8: poly = kPoly8; break;
        case 16: poly = kPoly16; break;
        default: throw ParameterError("supported field sizes are 2^8 and 2^16");
    }
    order_ = 1u << bits;
    exp_.assign(2 * (order_ - 1), 0);
    log_.assign(order_, 0);

    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order_ - 1; ++i) {
        if (x == 1 && i > 0)
            throw StructuralError("polynomial is not primitive: short period");
        exp_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x & order_) x ^= poly;
    }
    if (x != 1) throw StructuralError("polynomial is not primitive: open cycle");
    for (std::uint32_t i = 0; i < order_ - 1; ++i) exp_[order_ - 1 + i] = exp_[i];
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) throw ParameterError("zero has no inverse");
    return exp_[order_ - 1 - log_[a]];
}

const GaloisField& GaloisField::gf256() {
    static const GaloisField f(8);
    return f;
}

const GaloisField& GaloisField::gf65536() {
    static const GaloisField f(16);
    return f;
}

const GaloisField& GaloisField::for_symbols(std::uint32_t n) {
    if (n <= 256) return gf256();
    if (n <= 65536) return gf65536();
    throw ParameterError("codes longer than 2^16 symbols are unsupported");
}

} // namespace mcnet
