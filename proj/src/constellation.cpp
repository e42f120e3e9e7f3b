#include "wiremodel/constellation.hpp"

#include <cmath>

#include "wiremodel/errors.hpp"

namespace wiremodel {

namespace {

unsigned gray_to_bin(unsigned g) {
    unsigned b = 0;
    for (; g; g >>= 1)
        b ^= g;
    return b;
}

// Axis coordinate for a Gray label: level 0 sits at +(L-1) and descends in
// steps of 2, so the all-zero label lands in the first quadrant (BPSK bit 0
// maps to +1, QPSK 00 to (1+j)/sqrt(2)).
double axis_coord(unsigned gray_label, unsigned levels) {
    return static_cast<double>(levels - 1) - 2.0 * static_cast<double>(gray_to_bin(gray_label));
}

std::vector<std::complex<double>> square_points(int bits) {
    int i_bits = bits / 2 + bits % 2; // BPSK: 1 I bit, 0 Q bits
    int q_bits = bits / 2;
    unsigned i_levels = 1u << i_bits;
    unsigned q_levels = 1u << q_bits;
    std::vector<std::complex<double>> pts(1u << bits);
    for (unsigned label = 0; label < pts.size(); ++label) {
        unsigned gi = label >> q_bits;
        unsigned gq = label & (q_levels - 1);
        double i = axis_coord(gi, i_levels);
        double q = q_bits == 0 ? 0.0 : axis_coord(gq, q_levels);
        pts[label] = {i, q};
    }
    return pts;
}

// Cross-32: start from the Gray-labeled 8x4 rectangle and fold the outer
// (|I| = 7) columns onto the |Q| = 5 arms. The fold keeps the Q-axis Gray
// transitions inside each arm; arm/body seams cost extra bit flips, which is
// the unavoidable quasi-Gray compromise ("cross32-v1").
std::vector<std::complex<double>> cross32_points() {
    std::vector<std::complex<double>> pts(32);
    for (unsigned label = 0; label < 32; ++label) {
        unsigned gi = label >> 2;
        unsigned gq = label & 3;
        double i = axis_coord(gi, 8); // {+-1, +-3, +-5, +-7}
        double q = axis_coord(gq, 4); // {+-1, +-3}
        if (std::abs(i) > 5.0) {
            double si = i > 0 ? 1.0 : -1.0;
            double sq = q > 0 ? 1.0 : -1.0;
            i = si * (4.0 - std::abs(q));
            q = sq * 5.0;
        }
        pts[label] = {i, q};
    }
    return pts;
}

} // namespace

Constellation::Constellation(ModulationScheme scheme,
                             std::vector<std::complex<double>> raw_points, const char* labeling)
    : scheme_(scheme), bits_(wiremodel::bits_per_symbol(scheme)), points_(std::move(raw_points)),
      labeling_(labeling) {
    if (points_.size() != (1u << bits_))
        throw InternalError("constellation size mismatch");
    double energy = 0.0;
    for (const auto& p : points_)
        energy += std::norm(p);
    double scale = 1.0 / std::sqrt(energy / static_cast<double>(points_.size()));
    for (auto& p : points_)
        p *= scale;
}

const Constellation& Constellation::get(ModulationScheme scheme) {
    static const Constellation kBpsk{ModulationScheme::BPSK, square_points(1), "gray"};
    static const Constellation kQpsk{ModulationScheme::QPSK, square_points(2), "gray"};
    static const Constellation kQam16{ModulationScheme::QAM16, square_points(4), "gray"};
    static const Constellation kQam32{ModulationScheme::QAM32, cross32_points(), "cross32-v1"};
    static const Constellation kQam64{ModulationScheme::QAM64, square_points(6), "gray"};
    static const Constellation kQam256{ModulationScheme::QAM256, square_points(8), "gray"};
    switch (scheme) {
    case ModulationScheme::BPSK: return kBpsk;
    case ModulationScheme::QPSK: return kQpsk;
    case ModulationScheme::QAM16: return kQam16;
    case ModulationScheme::QAM32: return kQam32;
    case ModulationScheme::QAM64: return kQam64;
    case ModulationScheme::QAM256: return kQam256;
    }
    throw InternalError("unhandled modulation scheme");
}

unsigned Constellation::slice(std::complex<double> received) const {
    unsigned best = 0;
    double best_d = std::norm(received - points_[0]);
    for (unsigned label = 1; label < points_.size(); ++label) {
        double d = std::norm(received - points_[label]);
        if (d < best_d) {
            best_d = d;
            best = label;
        }
    }
    return best;
}

std::vector<std::complex<double>> modulate(ModulationScheme scheme,
                                           const std::vector<std::uint8_t>& bits, int* pad_bits) {
    const Constellation& c = Constellation::get(scheme);
    int k = c.bits_per_symbol();
    std::size_t n_sym = (bits.size() + static_cast<std::size_t>(k) - 1) / k;
    if (pad_bits)
        *pad_bits = static_cast<int>(n_sym * k - bits.size());
    std::vector<std::complex<double>> symbols;
    symbols.reserve(n_sym);
    for (std::size_t s = 0; s < n_sym; ++s) {
        unsigned label = 0;
        for (int j = 0; j < k; ++j) {
            std::size_t idx = s * k + j;
            std::uint8_t bit = idx < bits.size() ? bits[idx] : 0;
            if (bit > 1)
                throw ConfigError("modulate: input must be 0/1 bits");
            label = (label << 1) | bit;
        }
        symbols.push_back(c.map(label));
    }
    return symbols;
}

std::vector<std::uint8_t> demodulate(ModulationScheme scheme,
                                     const std::vector<std::complex<double>>& symbols) {
    const Constellation& c = Constellation::get(scheme);
    int k = c.bits_per_symbol();
    std::vector<std::uint8_t> bits;
    bits.reserve(symbols.size() * static_cast<std::size_t>(k));
    for (const auto& y : symbols) {
        unsigned label = c.slice(y);
        for (int j = k - 1; j >= 0; --j)
            bits.push_back(static_cast<std::uint8_t>((label >> j) & 1u));
    }
    return bits;
}

} // namespace wiremodel
