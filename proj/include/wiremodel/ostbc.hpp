#pragma once

#include <complex>
#include <vector>

namespace wiremodel {

// Orthogonal space-time block codes over 1-4 transmit antennas:
//   1 tx  : passthrough, rate 1
//   2 tx  : Alamouti [[s1, s2], [-s2*, s1*]], rate 1
//   3/4 tx: standard rate-3/4 complex orthogonal designs (3 symbols across
//           4 time slots; the 3-tx code is the first three columns of the
//           4-tx generator)
// amp_scale = sqrt(T / (K * n_tx)) keeps per-antenna average power at 1/n_tx
// and total transmitted power per channel use at exactly 1 even for the
// rate-3/4 designs, whose generators contain idle slots. For SISO and
// Alamouti this reduces to the usual 1/sqrt(n_tx).
struct OstbcScheme {
    int n_tx = 1;
    int symbols_per_block = 1; // K
    int time_slots = 1;        // T
    double code_rate = 1.0;    // K / T
    double amp_scale = 1.0;
};

const OstbcScheme& ostbc_for(int n_tx); // throws ConfigError unless n_tx in 1..4

// Encode one block of K symbols into the T x n_tx transmit matrix (row-major,
// rows = time slots), already amplitude-scaled.
void ostbc_encode_block(const OstbcScheme& scheme, const std::complex<double>* symbols,
                        std::complex<double>* out);

// Encode a whole symbol stream; pads the tail with zero symbols to a block
// boundary (*pad_symbols records how many were added).
std::vector<std::complex<double>> ostbc_encode(const OstbcScheme& scheme,
                                               const std::vector<std::complex<double>>& symbols,
                                               int* pad_symbols = nullptr);

// Maximum-ratio combining decoder for one channel realization (perfect CSI at
// the receiver). The space-time matrix is R-linear in (Re s_k, Im s_k), so the
// decoder builds the effective T*m_rx x 2K combining matrix by pushing basis
// symbols through the encoder and the given channel; design orthogonality
// makes its Gram matrix diagonal, so per-symbol matched filtering is exact ML.
class OstbcDecoder {
public:
    // h: m_rx x n_tx row-major channel matrix.
    OstbcDecoder(const OstbcScheme& scheme, const std::vector<std::complex<double>>& h, int m_rx);

    // y: T x m_rx row-major received block; s_hat: K symbol estimates.
    void decode_block(const std::complex<double>* y, std::complex<double>* s_hat) const;

    const OstbcScheme& scheme() const { return scheme_; }

private:
    OstbcScheme scheme_;
    int m_rx_;
    // 2K columns of length T*m_rx, plus each column's squared norm.
    std::vector<std::complex<double>> combiner_;
    std::vector<double> gain_;
};

} // namespace wiremodel
