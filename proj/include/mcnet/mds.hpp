#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcnet/gf.hpp"

namespace mcnet {

// Packets are byte blobs; field elements occupy bits()/8 consecutive bytes.
using Packet = std::vector<std::uint8_t>;

// Systematic [n, k] erasure code: generator [I | C] with C a Cauchy block,
// so every k x k column submatrix is invertible and any k of the n output
// symbols reconstruct the input. Reproducible from (n, k, field) alone.
class MdsCode {
public:
    MdsCode(int n, int k); // picks the smallest supported field with q >= n

    int n() const { return n_; }
    int k() const { return k_; }
    const GaloisField& field() const { return *field_; }
    int element_bytes() const { return field_->bits() / 8; }

    std::uint32_t generator(int row, int col) const; // k x n

    // Exactly k equal-length packets in, n packets out; the first k outputs
    // equal the inputs.
    std::vector<Packet> encode(const std::vector<Packet>& data) const;

    // Any k distinct coded packets (with their 0-based indices) back to the
    // k data packets. Throws InsufficientDataError / StructuralError.
    std::vector<Packet> decode(const std::vector<std::pair<int, Packet>>& received) const;

private:
    int n_, k_;
    const GaloisField* field_;
    std::vector<std::uint32_t> gen_; // row-major k x n

    std::uint32_t read_elem(const Packet& p, std::size_t i) const;
    void write_elem(Packet& p, std::size_t i, std::uint32_t v) const;
};

} // namespace mcnet
