#pragma once

#include <string>

namespace wiremodel {

enum class Band { NB, WB };

const char* band_name(Band band);
Band band_from_name(const std::string& name); // "nb" | "wb", throws ConfigError

// Codec equipment-impairment profile. ie/bpl are planning inputs taken from
// impairment tables (config data), not derived here. For WB codecs ie/bpl are
// the wideband-scale values and burst_r is fixed at 1 (the wideband loss model
// has no burstiness term).
struct CodecProfile {
    std::string name;
    Band band = Band::NB;
    double ie = 0.0;             // equipment impairment at zero loss, [0, 95]
    double bpl = 1.0;            // packet-loss robustness, > 0
    double default_burst_r = 1.0; // NB only; >= 1 (1 = random loss)
};

void validate_profile(const CodecProfile& profile); // throws ConfigError

// Non-impairment terms of the rating model. r0 defaults to the band's
// conventional maximum (93.2 narrowband, 129 wideband); is/id/advantage
// default to 0 so R is driven by the loss-dependent impairment alone.
struct TransmissionParams {
    Band band = Band::NB;
    double r0 = 93.2;
    double is = 0.0;
    double id = 0.0;
    double advantage = 0.0;

    static TransmissionParams nb_defaults() { return {Band::NB, 93.2, 0.0, 0.0, 0.0}; }
    static TransmissionParams wb_defaults() { return {Band::WB, 129.0, 0.0, 0.0, 0.0}; }
};

// Transmission rating, clamped to the band's scale: [0,100] NB, [0,129] WB.
struct RScore {
    double value = 0.0;
    Band band = Band::NB;
};

struct MosScore {
    double value = 1.0; // [1, 4.5]
};

// Narrowband effective equipment impairment:
//   ie + (95 - ie) * ppl / (ppl / burst_r + bpl)
// ppl_pct is a percentage in [0, 100]; burst_r >= 1 (1 = random loss).
double effective_impairment_nb(const CodecProfile& profile, double ppl_pct, double burst_r);
double effective_impairment_nb(const CodecProfile& profile, double ppl_pct);

// Wideband variant (no burstiness term):
//   ie + (95 - ie) * ppl / (ppl + bpl)
// Coincides with the NB formula at burst_r = 1.
double effective_impairment_wb(const CodecProfile& profile, double ppl_pct);

// R = r0 - is - id - ie_eff + advantage, clamped to the band's scale.
RScore r_score(const TransmissionParams& params, double ie_eff);

// Rescale a wideband rating onto the narrowband 0-100 scale (linear, x100/129).
RScore wb_to_nb(const RScore& wb);

// Narrowband R to MOS via the standard cubic, floored/capped to [1, 4.5].
// Accepts raw (even negative) narrowband R values.
MosScore r_to_mos(const RScore& nb);

} // namespace wiremodel
