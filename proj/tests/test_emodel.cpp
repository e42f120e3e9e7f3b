#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "wiremodel/codec_registry.hpp"
#include "wiremodel/emodel.hpp"
#include "wiremodel/errors.hpp"

using namespace wiremodel;

namespace {

CodecProfile nb_profile(double ie, double bpl, double burst_r = 1.0) {
    return {"test-nb", Band::NB, ie, bpl, burst_r};
}

CodecProfile wb_profile(double ie, double bpl) {
    return {"test-wb", Band::WB, ie, bpl, 1.0};
}

// Independent cubic evaluation, shaped differently from the implementation.
double mos_cubic(double r) {
    return 1.0 + 0.035 * r + 7e-6 * (r * (r - 60.0) * (100.0 - r));
}

} // namespace

TEST_CASE("narrowband impairment reproduces hand-computed values") {
    // Zero loss collapses to ie.
    CHECK(effective_impairment_nb(nb_profile(10, 5), 0.0, 1.0) == 10.0);
    // 10 + 85 * 5 / (5 + 5) = 52.5.
    CHECK(effective_impairment_nb(nb_profile(10, 5), 5.0, 1.0) == doctest::Approx(52.5).epsilon(1e-12));
    // 0 + 95 * 100 / (100 + 4.3) = 9500 / 104.3.
    CHECK(effective_impairment_nb(nb_profile(0, 4.3), 100.0, 1.0) ==
          doctest::Approx(9500.0 / 104.3).epsilon(1e-12));
    // Burst ratio 2 halves the loss term in the denominator:
    // 10 + 85 * 10 / (10/2 + 5) = 95.
    CHECK(effective_impairment_nb(nb_profile(10, 5), 10.0, 2.0) == doctest::Approx(95.0));
}

TEST_CASE("wideband impairment reproduces hand-computed values") {
    CHECK(effective_impairment_wb(wb_profile(10, 10), 0.0) == 10.0);
    // 10 + 85 * 10 / 20 = 52.5.
    CHECK(effective_impairment_wb(wb_profile(10, 10), 10.0) == doctest::Approx(52.5).epsilon(1e-12));
    // 95 * 20 / 40 = 47.5.
    CHECK(effective_impairment_wb(wb_profile(0, 20), 20.0) == doctest::Approx(47.5).epsilon(1e-12));
}

TEST_CASE("impairment bounds and argument validation") {
    CHECK_THROWS_AS(effective_impairment_nb(wb_profile(10, 10), 5.0, 1.0), ConfigError);
    CHECK_THROWS_AS(effective_impairment_wb(nb_profile(10, 10), 5.0), ConfigError);
    CHECK_THROWS_AS(effective_impairment_nb(nb_profile(10, 10), -1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(effective_impairment_nb(nb_profile(10, 10), 101.0, 1.0), ConfigError);
    CHECK_THROWS_AS(effective_impairment_nb(nb_profile(10, 10), 5.0, 0.5), ConfigError);
    CHECK_THROWS_AS(effective_impairment_wb(wb_profile(10, 10), 200.0), ConfigError);
}

TEST_CASE("impairment is monotone in loss; random loss stays within [ie, 95]") {
    // The [ie, 95] ceiling holds only for burst_r = 1: bursty loss divides
    // ppl by burst_r in the denominator, so the fraction may exceed 1 at
    // extreme loss. Monotonicity and the lower bound hold regardless.
    CodecProfile nb1 = nb_profile(7, 8.5, 1.0);
    CodecProfile nbb = nb_profile(7, 8.5, 1.3);
    CodecProfile wb = wb_profile(12, 19);
    double prev_nb1 = -1.0, prev_nbb = -1.0, prev_wb = -1.0;
    for (double ppl = 0.0; ppl <= 100.0; ppl += 0.25) {
        double inb1 = effective_impairment_nb(nb1, ppl, nb1.default_burst_r);
        double inbb = effective_impairment_nb(nbb, ppl, nbb.default_burst_r);
        double iwb = effective_impairment_wb(wb, ppl);
        CHECK(inb1 >= prev_nb1 - 1e-12);
        CHECK(inbb >= prev_nbb - 1e-12);
        CHECK(iwb >= prev_wb - 1e-12);
        CHECK(inb1 >= nb1.ie);
        CHECK(inb1 <= 95.0);
        CHECK(inbb >= nbb.ie);
        CHECK(iwb >= wb.ie);
        CHECK(iwb <= 95.0);
        prev_nb1 = inb1;
        prev_nbb = inbb;
        prev_wb = iwb;
    }
}

TEST_CASE("narrowband formula at burst ratio 1 coincides with the wideband formula") {
    for (double ie : {0.0, 5.0, 26.0}) {
        for (double bpl : {4.3, 10.0, 33.0}) {
            for (double ppl = 0.0; ppl <= 100.0; ppl += 2.5) {
                double nb = effective_impairment_nb(nb_profile(ie, bpl), ppl, 1.0);
                double wb = effective_impairment_wb(wb_profile(ie, bpl), ppl);
                CHECK(nb == doctest::Approx(wb).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("rating combination and clamping") {
    RScore nb_clean = r_score(TransmissionParams::nb_defaults(), 0.0);
    CHECK(nb_clean.value == doctest::Approx(93.2));
    CHECK(nb_clean.band == Band::NB);

    RScore wb = r_score(TransmissionParams::wb_defaults(), 52.5);
    CHECK(wb.value == doctest::Approx(76.5));
    CHECK(wb.band == Band::WB);

    // Floor clamp: 93.2 - 95 < 0.
    CHECK(r_score(TransmissionParams::nb_defaults(), 95.0).value == 0.0);

    // Ceiling clamp via advantage.
    TransmissionParams boosted = TransmissionParams::nb_defaults();
    boosted.advantage = 20.0;
    CHECK(r_score(boosted, 0.0).value == 100.0);

    TransmissionParams nan_params = TransmissionParams::nb_defaults();
    nan_params.id = std::nan("");
    CHECK_THROWS_AS(r_score(nan_params, 0.0), ConfigError);
}

TEST_CASE("wideband ratings rescale linearly onto the narrowband scale") {
    CHECK(wb_to_nb({129.0, Band::WB}).value == doctest::Approx(100.0).epsilon(1e-15));
    CHECK(wb_to_nb({0.0, Band::WB}).value == 0.0);
    CHECK(wb_to_nb({64.5, Band::WB}).value == doctest::Approx(50.0).epsilon(1e-15));
    CHECK(wb_to_nb({129.0, Band::WB}).band == Band::NB);
    CHECK_THROWS_AS(wb_to_nb({50.0, Band::NB}), ConfigError);
}

TEST_CASE("MOS conversion hits the declared boundary values exactly") {
    CHECK(r_to_mos({-5.0, Band::NB}).value == 1.0);
    CHECK(r_to_mos({120.0, Band::NB}).value == 4.5);
    CHECK(r_to_mos({0.0, Band::NB}).value == 1.0);
    CHECK(r_to_mos({100.0, Band::NB}).value == 4.5);
    CHECK_THROWS_AS(r_to_mos({50.0, Band::WB}), ConfigError);
}

TEST_CASE("MOS conversion matches direct cubic evaluation") {
    // 1 + 1.75 - 0.175 = 2.575.
    CHECK(r_to_mos({50.0, Band::NB}).value == doctest::Approx(2.575).epsilon(1e-12));
    CHECK(r_to_mos({93.2, Band::NB}).value == doctest::Approx(mos_cubic(93.2)).epsilon(1e-12));
    CHECK(mos_cubic(93.2) == doctest::Approx(4.409285824).epsilon(1e-9));
    // The raw cubic is below 1 for 0 < R < 80 - sqrt(5400) ~ 6.5153, where the
    // floor takes over; compare against the cubic only above that crossing.
    for (double r = 6.52; r <= 100.0; r += 0.37)
        CHECK(r_to_mos({r, Band::NB}).value == doctest::Approx(mos_cubic(r)).epsilon(1e-12));
}

TEST_CASE("MOS never leaves [1, 4.5] even where the raw cubic dips below 1") {
    // The cubic is slightly below 1 for small positive R (minimum near R = 5).
    CHECK(mos_cubic(5.0) < 1.0);
    for (double r = -20.0; r <= 120.0; r += 0.1) {
        double mos = r_to_mos({r, Band::NB}).value;
        CHECK(mos >= 1.0);
        CHECK(mos <= 4.5);
    }
}

TEST_CASE("MOS is monotone non-decreasing across the clamped rating scale") {
    double prev = 0.0;
    bool first = true;
    for (double r = 0.0; r <= 100.0 + 1e-9; r += 0.01) {
        double mos = r_to_mos({r, Band::NB}).value;
        if (!first)
            CHECK(mos >= prev - 1e-12);
        prev = mos;
        first = false;
    }
}

TEST_CASE("increasing loss never improves the end-to-end MOS") {
    CodecProfile prof = nb_profile(11, 19);
    double prev = 10.0;
    for (double ppl = 0.0; ppl <= 100.0; ppl += 1.0) {
        double ie_eff = effective_impairment_nb(prof, ppl, 1.0);
        double mos = r_to_mos(r_score(TransmissionParams::nb_defaults(), ie_eff)).value;
        CHECK(mos <= prev + 1e-12);
        prev = mos;
    }
}

TEST_CASE("profile validation enforces declared ranges") {
    CHECK_NOTHROW(validate_profile(nb_profile(0, 0.1)));
    CHECK_NOTHROW(validate_profile(wb_profile(95, 50)));
    CHECK_THROWS_AS(validate_profile(nb_profile(-1, 5)), ConfigError);
    CHECK_THROWS_AS(validate_profile(nb_profile(96, 5)), ConfigError);
    CHECK_THROWS_AS(validate_profile(nb_profile(10, 0)), ConfigError);
    CHECK_THROWS_AS(validate_profile(nb_profile(10, 5, 0.9)), ConfigError);
    CodecProfile unnamed = nb_profile(10, 5);
    unnamed.name.clear();
    CHECK_THROWS_AS(validate_profile(unnamed), ConfigError);
    CodecProfile wb_burst = wb_profile(10, 5);
    wb_burst.default_burst_r = 2.0;
    CHECK_THROWS_AS(validate_profile(wb_burst), ConfigError);
}

TEST_CASE("band names round-trip") {
    CHECK(band_name(Band::NB) == std::string("nb"));
    CHECK(band_name(Band::WB) == std::string("wb"));
    CHECK(band_from_name("nb") == Band::NB);
    CHECK(band_from_name("wb") == Band::WB);
    CHECK_THROWS_AS(band_from_name("fb"), ConfigError);
}

TEST_CASE("codec registry round-trips profiles through JSON exactly") {
    CodecRegistry reg;
    reg.add({"amr-4", Band::NB, 14.0, 25.75, 1.0});
    reg.add({"amr-wb-8", Band::WB, 1.5, 9.125, 1.0});
    CHECK(reg.contains("amr-4"));
    CHECK_FALSE(reg.contains("amr-5"));
    CHECK_THROWS_AS(reg.add({"amr-4", Band::NB, 10.0, 5.0, 1.0}), ConfigError);
    CHECK_THROWS_AS(reg.get("missing"), ConfigError);

    std::string path = "registry_roundtrip_test.json";
    reg.save(path);
    CodecRegistry loaded = CodecRegistry::load(path);
    std::remove(path.c_str());

    REQUIRE(loaded.profiles().size() == 2);
    const CodecProfile& a = loaded.get("amr-4");
    CHECK(a.band == Band::NB);
    CHECK(a.ie == 14.0);
    CHECK(a.bpl == 25.75);
    CHECK(a.default_burst_r == 1.0);
    const CodecProfile& b = loaded.get("amr-wb-8");
    CHECK(b.band == Band::WB);
    CHECK(b.ie == 1.5);
    CHECK(b.bpl == 9.125);
}

TEST_CASE("registry load failures map to I/O or config errors") {
    CHECK_THROWS_AS(CodecRegistry::load("/nonexistent/registry.json"), IoError);
}
