#include "wiremodel/ostbc.hpp"

#include <cmath>

#include "wiremodel/errors.hpp"

namespace wiremodel {

const OstbcScheme& ostbc_for(int n_tx) {
    static const OstbcScheme kSiso{1, 1, 1, 1.0, 1.0};
    static const OstbcScheme kAlamouti{2, 2, 2, 1.0, 1.0 / std::sqrt(2.0)};
    static const OstbcScheme kTx3{3, 3, 4, 0.75, std::sqrt(4.0 / 9.0)};
    static const OstbcScheme kTx4{4, 3, 4, 0.75, std::sqrt(4.0 / 12.0)};
    switch (n_tx) {
    case 1: return kSiso;
    case 2: return kAlamouti;
    case 3: return kTx3;
    case 4: return kTx4;
    default:
        throw ConfigError("no space-time block code for " + std::to_string(n_tx) +
                          " transmit antennas (supported: 1-4)");
    }
}

void ostbc_encode_block(const OstbcScheme& scheme, const std::complex<double>* s,
                        std::complex<double>* out) {
    using C = std::complex<double>;
    const double a = scheme.amp_scale;
    auto cj = [](C z) { return std::conj(z); };
    switch (scheme.n_tx) {
    case 1:
        out[0] = a * s[0];
        return;
    case 2:
        out[0] = a * s[0];
        out[1] = a * s[1];
        out[2] = a * -cj(s[1]);
        out[3] = a * cj(s[0]);
        return;
    case 3:
        out[0] = a * s[0];
        out[1] = a * s[1];
        out[2] = a * s[2];
        out[3] = a * -cj(s[1]);
        out[4] = a * cj(s[0]);
        out[5] = a * C{0.0, 0.0};
        out[6] = a * -cj(s[2]);
        out[7] = a * C{0.0, 0.0};
        out[8] = a * cj(s[0]);
        out[9] = a * C{0.0, 0.0};
        out[10] = a * -cj(s[2]);
        out[11] = a * cj(s[1]);
        return;
    case 4:
        out[0] = a * s[0];
        out[1] = a * s[1];
        out[2] = a * s[2];
        out[3] = a * C{0.0, 0.0};
        out[4] = a * -cj(s[1]);
        out[5] = a * cj(s[0]);
        out[6] = a * C{0.0, 0.0};
        out[7] = a * s[2];
        out[8] = a * -cj(s[2]);
        out[9] = a * C{0.0, 0.0};
        out[10] = a * cj(s[0]);
        out[11] = a * -s[1];
        out[12] = a * C{0.0, 0.0};
        out[13] = a * -cj(s[2]);
        out[14] = a * cj(s[1]);
        out[15] = a * s[0];
        return;
    default:
        throw InternalError("unhandled OSTBC scheme");
    }
}

std::vector<std::complex<double>> ostbc_encode(const OstbcScheme& scheme,
                                               const std::vector<std::complex<double>>& symbols,
                                               int* pad_symbols) {
    const int k = scheme.symbols_per_block;
    std::size_t n_blocks = (symbols.size() + static_cast<std::size_t>(k) - 1) / k;
    if (n_blocks == 0)
        n_blocks = 0;
    if (pad_symbols)
        *pad_symbols = static_cast<int>(n_blocks * k - symbols.size());
    std::vector<std::complex<double>> out(n_blocks * static_cast<std::size_t>(scheme.time_slots) *
                                          scheme.n_tx);
    std::complex<double> block_in[4] = {};
    for (std::size_t blk = 0; blk < n_blocks; ++blk) {
        for (int j = 0; j < k; ++j) {
            std::size_t idx = blk * k + j;
            block_in[j] = idx < symbols.size() ? symbols[idx] : std::complex<double>{0.0, 0.0};
        }
        ostbc_encode_block(scheme, block_in,
                           out.data() + blk * static_cast<std::size_t>(scheme.time_slots) *
                                            scheme.n_tx);
    }
    return out;
}

OstbcDecoder::OstbcDecoder(const OstbcScheme& scheme, const std::vector<std::complex<double>>& h,
                           int m_rx)
    : scheme_(scheme), m_rx_(m_rx) {
    if (m_rx < 1)
        throw ConfigError("OSTBC decoder needs at least one receive antenna");
    if (h.size() != static_cast<std::size_t>(m_rx) * scheme.n_tx)
        throw ConfigError("channel matrix size does not match antenna set");
    const int k = scheme.symbols_per_block;
    const int t_slots = scheme.time_slots;
    const int n_tx = scheme.n_tx;
    const std::size_t col_len = static_cast<std::size_t>(t_slots) * m_rx_;
    combiner_.assign(col_len * static_cast<std::size_t>(2 * k), {0.0, 0.0});
    gain_.assign(static_cast<std::size_t>(2 * k), 0.0);

    std::complex<double> basis[4];
    std::complex<double> x[16];
    for (int j = 0; j < 2 * k; ++j) {
        for (int i = 0; i < k; ++i)
            basis[i] = {0.0, 0.0};
        basis[j / 2] = (j % 2 == 0) ? std::complex<double>{1.0, 0.0}
                                    : std::complex<double>{0.0, 1.0};
        ostbc_encode_block(scheme, basis, x);
        std::complex<double>* col = combiner_.data() + static_cast<std::size_t>(j) * col_len;
        double g = 0.0;
        for (int t = 0; t < t_slots; ++t) {
            for (int r = 0; r < m_rx_; ++r) {
                std::complex<double> v{0.0, 0.0};
                for (int i = 0; i < n_tx; ++i)
                    v += x[t * n_tx + i] * h[static_cast<std::size_t>(r) * n_tx + i];
                col[t * m_rx_ + r] = v;
                g += std::norm(v);
            }
        }
        gain_[j] = g;
    }
}

void OstbcDecoder::decode_block(const std::complex<double>* y, std::complex<double>* s_hat) const {
    const int k = scheme_.symbols_per_block;
    const std::size_t col_len = static_cast<std::size_t>(scheme_.time_slots) * m_rx_;
    for (int sym = 0; sym < k; ++sym) {
        double comp[2];
        for (int part = 0; part < 2; ++part) {
            int j = 2 * sym + part;
            const std::complex<double>* col = combiner_.data() + static_cast<std::size_t>(j) * col_len;
            double acc = 0.0;
            for (std::size_t n = 0; n < col_len; ++n)
                acc += col[n].real() * y[n].real() + col[n].imag() * y[n].imag();
            // Degenerate all-zero channel: emit 0 rather than divide by zero.
            comp[part] = gain_[j] > 0.0 ? acc / gain_[j] : 0.0;
        }
        s_hat[sym] = {comp[0], comp[1]};
    }
}

} // namespace wiremodel
