#include "mcnet/mds.hpp"

#include <set>

namespace mcnet {

MdsCode::MdsCode(int n, int k) : n_(n), k_(k) {
    if (k < 1 || n < k) throw ParameterError("need 1 <= k <= n");
    field_ = &GaloisField::for_symbols(static_cast<std::uint32_t>(n));
    gen_.assign(static_cast<std::size_t>(k) * n, 0);

    // Systematic part.
    for (int i = 0; i < k; ++i) gen_[static_cast<std::size_t>(i) * n + i] = 1;
    // Cauchy part over disjoint evaluation points x_i = i, y_j = k + j:
    // every minor of a Cauchy matrix is nonzero, which gives the MDS
    // property of [I | C].
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n - k; ++j) {
            std::uint32_t xi = static_cast<std::uint32_t>(i);
            std::uint32_t yj = static_cast<std::uint32_t>(k + j);
            gen_[static_cast<std::size_t>(i) * n + k + j] =
                field_->inv(GaloisField::add(xi, yj));
        }
}

std::uint32_t MdsCode::generator(int row, int col) const {
    if (row < 0 || row >= k_ || col < 0 || col >= n_)
        throw ParameterError("generator index out of range");
    return gen_[static_cast<std::size_t>(row) * n_ + col];
}

std::uint32_t MdsCode::read_elem(const Packet& p, std::size_t i) const {
    if (element_bytes() == 1) return p[i];
    return (static_cast<std::uint32_t>(p[2 * i]) << 8) | p[2 * i + 1];
}

void MdsCode::write_elem(Packet& p, std::size_t i, std::uint32_t v) const {
    if (element_bytes() == 1) {
        p[i] = static_cast<std::uint8_t>(v);
    } else {
        p[2 * i] = static_cast<std::uint8_t>(v >> 8);
        p[2 * i + 1] = static_cast<std::uint8_t>(v & 0xFF);
    }
}

std::vector<Packet> MdsCode::encode(const std::vector<Packet>& data) const {
    if (static_cast<int>(data.size()) != k_)
        throw ParameterError("encoder expects exactly k packets");
    const std::size_t len = data.front().size();
    for (const Packet& p : data)
        if (p.size() != len) throw ParameterError("packet lengths differ");
    if (len % element_bytes() != 0)
        throw ParameterError("packet length must be a multiple of the element size");

    const std::size_t elems = len / element_bytes();
    std::vector<Packet> out(n_, Packet(len, 0));
    for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < k_; ++i) {
            std::uint32_t g = gen_[static_cast<std::size_t>(i) * n_ + j];
            if (g == 0) continue;
            for (std::size_t e = 0; e < elems; ++e) {
                std::uint32_t v = field_->mul(g, read_elem(data[i], e));
                write_elem(out[j], e, GaloisField::add(read_elem(out[j], e), v));
            }
        }
    }
    return out;
}

std::vector<Packet> MdsCode::decode(
    const std::vector<std::pair<int, Packet>>& received) const {
    if (static_cast<int>(received.size()) < k_)
        throw InsufficientDataError("erasure decoding needs k symbols");
    if (static_cast<int>(received.size()) > k_)
        throw StructuralError("pass exactly k symbols to decode");
    std::set<int> seen;
    for (const auto& [idx, p] : received) {
        if (idx < 0 || idx >= n_) throw StructuralError("symbol index out of range");
        if (!seen.insert(idx).second) throw StructuralError("repeated symbol index");
    }
    const std::size_t len = received.front().second.size();
    for (const auto& [idx, p] : received)
        if (p.size() != len) throw ParameterError("packet lengths differ");

    // Solve d * M = recv where M is the k x k generator submatrix of the
    // received columns. Gauss-Jordan on M^T alongside the received packets.
    std::vector<std::uint32_t> m(static_cast<std::size_t>(k_) * k_);
    for (int c = 0; c < k_; ++c)
        for (int i = 0; i < k_; ++i)
            m[static_cast<std::size_t>(c) * k_ + i] =
                gen_[static_cast<std::size_t>(i) * n_ + received[c].first];
    std::vector<Packet> rhs(k_);
    for (int c = 0; c < k_; ++c) rhs[c] = received[c].second;

    const std::size_t elems = len / element_bytes();
    auto row_scale = [&](int row, std::uint32_t f) {
        for (int i = 0; i < k_; ++i)
            m[static_cast<std::size_t>(row) * k_ + i] =
                field_->mul(m[static_cast<std::size_t>(row) * k_ + i], f);
        for (std::size_t e = 0; e < elems; ++e)
            write_elem(rhs[row], e, field_->mul(f, read_elem(rhs[row], e)));
    };
    auto row_addmul = [&](int dst, int src, std::uint32_t f) {
        if (f == 0) return;
        for (int i = 0; i < k_; ++i)
            m[static_cast<std::size_t>(dst) * k_ + i] = GaloisField::add(
                m[static_cast<std::size_t>(dst) * k_ + i],
                field_->mul(f, m[static_cast<std::size_t>(src) * k_ + i]));
        for (std::size_t e = 0; e < elems; ++e)
            write_elem(rhs[dst], e,
                       GaloisField::add(read_elem(rhs[dst], e),
                                        field_->mul(f, read_elem(rhs[src], e))));
    };

    for (int col = 0; col < k_; ++col) {
        int pivot = -1;
        for (int row = col; row < k_; ++row)
            if (m[static_cast<std::size_t>(row) * k_ + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw StructuralError("singular decode matrix");
        if (pivot != col) {
            for (int i = 0; i < k_; ++i)
                std::swap(m[static_cast<std::size_t>(pivot) * k_ + i],
                          m[static_cast<std::size_t>(col) * k_ + i]);
            std::swap(rhs[pivot], rhs[col]);
        }
        row_scale(col, field_->inv(m[static_cast<std::size_t>(col) * k_ + col]));
        for (int row = 0; row < k_; ++row)
            if (row != col) row_addmul(row, col, m[static_cast<std::size_t>(row) * k_ + col]);
    }
    return rhs;
}

} // namespace mcnet
