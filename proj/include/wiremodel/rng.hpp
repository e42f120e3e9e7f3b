#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace wiremodel {

// Philox4x32-10 counter-based generator.
//
// Every (grid point, frame) pair gets its own stream, identified purely by
// numbers: key = 64-bit master seed, counter words c1/c2 = 64-bit stream id,
// c0 = block index within the stream. Output therefore depends only on
// (seed, stream, draw index) — never on thread count or scheduling order —
// which is what makes parallel sweeps bit-reproducible.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          ctr1_(static_cast<std::uint32_t>(stream)),
          ctr2_(static_cast<std::uint32_t>(stream >> 32)) {}

    // Stream id for a sweep frame. Grid points and frame counts both fit
    // comfortably in 32 bits; the split keeps streams collision-free by
    // construction.
    static std::uint64_t stream_id(std::uint32_t point_index, std::uint32_t frame_index) {
        return (static_cast<std::uint64_t>(point_index) << 32) | frame_index;
    }

    std::uint32_t next_u32() {
        if (avail_ == 0)
            refill();
        return out_[--avail_];
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform on (0, 1]; never zero, so it is safe under log().
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    int next_bit() {
        if (bit_avail_ == 0) {
            bit_word_ = next_u32();
            bit_avail_ = 32;
        }
        int b = static_cast<int>(bit_word_ & 1u);
        bit_word_ >>= 1;
        --bit_avail_;
        return b;
    }

    // Box-Muller pair of independent N(0,1) draws.
    void normal_pair(double& z0, double& z1) {
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        z0 = r * std::cos(t);
        z1 = r * std::sin(t);
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double z0, z1;
        normal_pair(z0, z1);
        spare_ = z1;
        have_spare_ = true;
        return z0;
    }

    // Circularly-symmetric complex Gaussian, E|z|^2 = 1.
    std::complex<double> complex_normal() {
        double z0, z1;
        normal_pair(z0, z1);
        return {z0 * 0.70710678118654752440, z1 * 0.70710678118654752440};
    }

private:
    static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) >> 32);
    }

    void refill() {
        // Philox4x32-10 round constants.
        constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
        constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
        std::uint32_t c0 = block_, c1 = ctr1_, c2 = ctr2_, c3 = 0;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0 = mulhi(kM0, c0), lo0 = kM0 * c0;
            std::uint32_t hi1 = mulhi(kM1, c2), lo1 = kM1 * c2;
            std::uint32_t n0 = hi1 ^ c1 ^ k0;
            std::uint32_t n1 = lo1;
            std::uint32_t n2 = hi0 ^ c3 ^ k1;
            std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += kW0;
            k1 += kW1;
        }
        out_[0] = c3;
        out_[1] = c2;
        out_[2] = c1;
        out_[3] = c0;
        avail_ = 4;
        ++block_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t ctr1_, ctr2_;
    std::uint32_t block_ = 0;
    std::uint32_t out_[4] = {0, 0, 0, 0};
    int avail_ = 0;
    std::uint32_t bit_word_ = 0;
    int bit_avail_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace wiremodel
