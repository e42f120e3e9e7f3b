#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wiremodel/constellation.hpp"
#include "wiremodel/rng.hpp"

using namespace wiremodel;

namespace {

int popcount_diff(unsigned a, unsigned b) {
    unsigned x = a ^ b;
    int n = 0;
    while (x) {
        n += static_cast<int>(x & 1u);
        x >>= 1;
    }
    return n;
}

// Nearest-neighbor pairs = pairs at the constellation's minimum distance.
double min_distance(const std::vector<std::complex<double>>& pts) {
    double best = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, std::abs(pts[i] - pts[j]));
    return best;
}

std::vector<std::uint8_t> random_bits(std::size_t n, CounterRng& rng) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits)
        b = static_cast<std::uint8_t>(rng.next_bit());
    return bits;
}

} // namespace

TEST_CASE("every constellation has unit average energy and a bijective bit map") {
    for (ModulationScheme scheme : all_modulations()) {
        const Constellation& c = Constellation::get(scheme);
        CAPTURE(modulation_name(scheme));
        REQUIRE(static_cast<int>(c.points().size()) == 1 << c.bits_per_symbol());
        CHECK(c.bits_per_symbol() == bits_per_symbol(scheme));

        double energy = 0.0;
        std::set<std::pair<double, double>> distinct;
        for (const auto& p : c.points()) {
            energy += std::norm(p);
            distinct.insert({p.real(), p.imag()});
        }
        energy /= static_cast<double>(c.points().size());
        CHECK(energy == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(distinct.size() == c.points().size()); // geometric bijection
    }
}

TEST_CASE("declared anchor points: BPSK signs and QPSK first quadrant") {
    const Constellation& bpsk = Constellation::get(ModulationScheme::BPSK);
    CHECK(bpsk.map(0).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bpsk.map(0).imag() == 0.0);
    CHECK(bpsk.map(1).real() == doctest::Approx(-1.0).epsilon(1e-15));

    const Constellation& qpsk = Constellation::get(ModulationScheme::QPSK);
    double s = 1.0 / std::sqrt(2.0);
    CHECK(qpsk.map(0).real() == doctest::Approx(s).epsilon(1e-15));
    CHECK(qpsk.map(0).imag() == doctest::Approx(s).epsilon(1e-15));
    // All four QPSK points sit on the unit circle.
    for (unsigned label = 0; label < 4; ++label)
        CHECK(std::abs(qpsk.map(label)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("square constellations are strictly Gray labeled") {
    for (ModulationScheme scheme : {ModulationScheme::BPSK, ModulationScheme::QPSK,
                                    ModulationScheme::QAM16, ModulationScheme::QAM64,
                                    ModulationScheme::QAM256}) {
        const Constellation& c = Constellation::get(scheme);
        CAPTURE(modulation_name(scheme));
        double dmin = min_distance(c.points());
        for (std::size_t i = 0; i < c.points().size(); ++i) {
            for (std::size_t j = i + 1; j < c.points().size(); ++j) {
                double d = std::abs(c.points()[i] - c.points()[j]);
                if (d < dmin * 1.000001)
                    CHECK(popcount_diff(static_cast<unsigned>(i),
                                        static_cast<unsigned>(j)) == 1);
            }
        }
    }
}

TEST_CASE("cross constellation: 32 points, no corners, quasi-Gray quality") {
    const Constellation& c = Constellation::get(ModulationScheme::QAM32);
    REQUIRE(c.points().size() == 32);
    CHECK(std::string(c.labeling_version()) == "cross32-v1");

    // Geometry: odd-integer lattice coordinates (after de-normalization by the
    // 6x6-minus-corners average energy of 20), |I| and |Q| at most 5, and the
    // four |I|=|Q|=5 corners absent.
    double scale = std::sqrt(20.0);
    int on_arm = 0;
    for (const auto& p : c.points()) {
        double i = p.real() * scale, q = p.imag() * scale;
        CHECK(std::abs(i - std::round(i)) < 1e-9);
        CHECK(std::abs(q - std::round(q)) < 1e-9);
        long ii = std::lround(std::abs(i)), qq = std::lround(std::abs(q));
        CHECK(ii % 2 == 1);
        CHECK(qq % 2 == 1);
        CHECK(ii <= 5);
        CHECK(qq <= 5);
        CHECK_FALSE((ii == 5 && qq == 5));
        if (ii == 5 || qq == 5)
            ++on_arm;
    }
    CHECK(on_arm == 16); // the 16 non-corner perimeter cells of the cross

    // Quasi-Gray: average bit distance over nearest-neighbor pairs must stay
    // close to 1 (strict Gray is impossible for the cross).
    double dmin = min_distance(c.points());
    int pairs = 0, bit_flips = 0;
    for (std::size_t i = 0; i < 32; ++i) {
        for (std::size_t j = i + 1; j < 32; ++j) {
            if (std::abs(c.points()[i] - c.points()[j]) < dmin * 1.000001) {
                ++pairs;
                bit_flips += popcount_diff(static_cast<unsigned>(i),
                                           static_cast<unsigned>(j));
            }
        }
    }
    CHECK(pairs > 40); // cross lattice adjacency count sanity
    CHECK(static_cast<double>(bit_flips) / pairs < 1.5);
}

TEST_CASE("noiseless modulate/demodulate round trip over random bits") {
    CounterRng rng(77, 0);
    for (ModulationScheme scheme : all_modulations()) {
        CAPTURE(modulation_name(scheme));
        std::vector<std::uint8_t> bits = random_bits(10000, rng);
        int pad = -1;
        std::vector<std::complex<double>> symbols = modulate(scheme, bits, &pad);
        REQUIRE(pad >= 0);
        REQUIRE((bits.size() + pad) % bits_per_symbol(scheme) == 0);
        std::vector<std::uint8_t> back = demodulate(scheme, symbols);
        REQUIRE(back.size() == bits.size() + static_cast<std::size_t>(pad));
        for (std::size_t i = 0; i < bits.size(); ++i)
            REQUIRE(back[i] == bits[i]);
        for (std::size_t i = bits.size(); i < back.size(); ++i)
            REQUIRE(back[i] == 0); // declared zero padding
    }
}

TEST_CASE("slicer makes nearest-point decisions under small perturbations") {
    const Constellation& bpsk = Constellation::get(ModulationScheme::BPSK);
    CHECK(bpsk.slice({0.9, 0.1}) == 0);
    CHECK(bpsk.slice({-0.1, 2.0}) == 1);

    CounterRng rng(78, 1);
    for (ModulationScheme scheme : all_modulations()) {
        const Constellation& c = Constellation::get(scheme);
        double dmin = min_distance(c.points());
        for (unsigned label = 0; label < c.points().size(); ++label) {
            std::complex<double> jitter(rng.uniform() - 0.5, rng.uniform() - 0.5);
            jitter *= 0.8 * dmin / std::abs(jitter) * rng.uniform() * 0.5;
            CHECK(c.slice(c.map(label) + jitter) == label);
        }
    }
}

TEST_CASE("modulate rejects non-binary input") {
    std::vector<std::uint8_t> bad = {0, 1, 2};
    CHECK_THROWS(modulate(ModulationScheme::QPSK, bad));
}
