#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "wiremodel/rng.hpp"

using wiremodel::CounterRng;

namespace {

// Independent Philox4x32-10 oracle, written against the published algorithm
// description (multipliers 0xD2511F53/0xCD9E8D57, Weyl constants
// 0x9E3779B9/0xBB67AE85, key bumped between rounds). Kept deliberately
// array-shaped so it shares no code with the production generator.
void philox_ref(std::uint32_t ctr[4], std::uint32_t key[2], std::uint32_t out[4]) {
    std::uint32_t v[4] = {ctr[0], ctr[1], ctr[2], ctr[3]};
    std::uint32_t k[2] = {key[0], key[1]};
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += 0x9E3779B9u;
            k[1] += 0xBB67AE85u;
        }
        std::uint64_t p0 = static_cast<std::uint64_t>(0xD2511F53u) * v[0];
        std::uint64_t p1 = static_cast<std::uint64_t>(0xCD9E8D57u) * v[2];
        std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        std::uint32_t n[4];
        n[0] = hi1 ^ v[1] ^ k[0];
        n[1] = lo1;
        n[2] = hi0 ^ v[3] ^ k[1];
        n[3] = lo0;
        v[0] = n[0];
        v[1] = n[1];
        v[2] = n[2];
        v[3] = n[3];
    }
    out[0] = v[0];
    out[1] = v[1];
    out[2] = v[2];
    out[3] = v[3];
}

} // namespace

TEST_CASE("oracle reproduces the published zero-input test vector") {
    std::uint32_t ctr[4] = {0, 0, 0, 0};
    std::uint32_t key[2] = {0, 0};
    std::uint32_t out[4];
    philox_ref(ctr, key, out);
    CHECK(out[0] == 0x6627e8d5u);
    CHECK(out[1] == 0xe169c58du);
    CHECK(out[2] == 0xbc57ac4cu);
    CHECK(out[3] == 0x9b00dbd8u);
}

TEST_CASE("generator matches the zero-input vector through the public API") {
    CounterRng rng(0, 0);
    CHECK(rng.next_u32() == 0x6627e8d5u);
    CHECK(rng.next_u32() == 0xe169c58du);
    CHECK(rng.next_u32() == 0xbc57ac4cu);
    CHECK(rng.next_u32() == 0x9b00dbd8u);
}

TEST_CASE("generator matches the oracle across seeds, streams and blocks") {
    const std::uint64_t seeds[] = {1, 0xDEADBEEFCAFEF00Dull, 0xFFFFFFFFFFFFFFFFull};
    const std::uint64_t streams[] = {0, 7, CounterRng::stream_id(123, 456),
                                     0xFFFFFFFFFFFFFFFFull};
    for (std::uint64_t seed : seeds) {
        for (std::uint64_t stream : streams) {
            CounterRng rng(seed, stream);
            for (std::uint32_t block = 0; block < 5; ++block) {
                std::uint32_t ctr[4] = {block, static_cast<std::uint32_t>(stream),
                                        static_cast<std::uint32_t>(stream >> 32), 0};
                std::uint32_t key[2] = {static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
                std::uint32_t expected[4];
                philox_ref(ctr, key, expected);
                for (int i = 0; i < 4; ++i)
                    CHECK(rng.next_u32() == expected[i]);
            }
        }
    }
}

TEST_CASE("identical construction replays the identical sequence") {
    CounterRng a(42, 99), b(42, 99);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams and seeds diverge") {
    CounterRng base(42, 99), other_stream(42, 100), other_seed(43, 99);
    int same_stream = 0, same_seed = 0;
    for (int i = 0; i < 64; ++i) {
        std::uint32_t r = base.next_u32();
        same_stream += (r == other_stream.next_u32());
        same_seed += (r == other_seed.next_u32());
    }
    CHECK(same_stream < 4);
    CHECK(same_seed < 4);
}

TEST_CASE("stream id packs point and frame indices without collision") {
    CHECK(CounterRng::stream_id(0, 0) == 0);
    CHECK(CounterRng::stream_id(0, 1) == 1);
    CHECK(CounterRng::stream_id(1, 0) == (1ull << 32));
    CHECK(CounterRng::stream_id(2, 3) != CounterRng::stream_id(3, 2));
}

TEST_CASE("uniform ranges and moments") {
    CounterRng rng(7, 0);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    double mean = sum / n;
    double var = sumsq / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.02));

    for (int i = 0; i < 100000; ++i) {
        double u = rng.uniform_pos();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
    }
}

TEST_CASE("bit draws are balanced") {
    CounterRng rng(11, 3);
    const int n = 200000;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
        int b = rng.next_bit();
        REQUIRE((b == 0 || b == 1));
        ones += b;
    }
    // 5 sigma band around n/2 with sigma = sqrt(n)/2.
    CHECK(std::abs(ones - n / 2) < 5 * std::sqrt(n) / 2);
}

TEST_CASE("normal draws have unit variance and zero mean") {
    CounterRng rng(13, 5);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        double z = rng.normal();
        sum += z;
        sumsq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("complex normal has unit mean square magnitude and balanced parts") {
    CounterRng rng(17, 9);
    const int n = 100000;
    double power = 0.0, re = 0.0, im = 0.0;
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = rng.complex_normal();
        power += std::norm(z);
        re += z.real();
        im += z.imag();
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(re / n) < 0.02);
    CHECK(std::abs(im / n) < 0.02);
}
