#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wiremodel/ppl_model.hpp"

namespace wiremodel {

// Unit-average-energy symbol maps. Square constellations (BPSK, QPSK, QAM-16/
// 64/256) use per-axis Gray labeling, so every nearest-neighbor pair differs
// in exactly one bit. QAM-32 is the 6x6-minus-corners cross, which admits no
// perfect Gray labeling; its quasi-Gray bit map ("cross32-v1", an 8x4
// rectangle with the outer columns folded onto the cross arms) is fixed so
// results stay reproducible across versions.
class Constellation {
public:
    static const Constellation& get(ModulationScheme scheme);

    ModulationScheme scheme() const { return scheme_; }
    int bits_per_symbol() const { return bits_; }
    const std::vector<std::complex<double>>& points() const { return points_; }
    const char* labeling_version() const { return labeling_; }

    std::complex<double> map(unsigned label) const { return points_[label]; }

    // Hard minimum-Euclidean-distance decision; ties break to the lowest
    // label, which keeps the decision deterministic.
    unsigned slice(std::complex<double> received) const;

private:
    Constellation(ModulationScheme scheme, std::vector<std::complex<double>> raw_points,
                  const char* labeling);

    ModulationScheme scheme_;
    int bits_;
    std::vector<std::complex<double>> points_;
    const char* labeling_;
};

// Pack bits into symbols, first bit = label MSB. Bit counts that do not fill
// the last symbol are padded with zero bits; *pad_bits records how many.
std::vector<std::complex<double>> modulate(ModulationScheme scheme,
                                           const std::vector<std::uint8_t>& bits,
                                           int* pad_bits = nullptr);

std::vector<std::uint8_t> demodulate(ModulationScheme scheme,
                                     const std::vector<std::complex<double>>& symbols);

} // namespace wiremodel
