#include "wiremodel/emodel.hpp"

#include <algorithm>
#include <cmath>

#include "wiremodel/errors.hpp"

namespace wiremodel {

const char* band_name(Band band) {
    return band == Band::NB ? "nb" : "wb";
}

Band band_from_name(const std::string& name) {
    if (name == "nb" || name == "NB")
        return Band::NB;
    if (name == "wb" || name == "WB")
        return Band::WB;
    throw ConfigError("unknown band '" + name + "' (expected nb or wb)");
}

void validate_profile(const CodecProfile& profile) {
    if (profile.name.empty())
        throw ConfigError("codec profile must have a name");
    if (!(profile.ie >= 0.0 && profile.ie <= 95.0))
        throw ConfigError("codec '" + profile.name + "': ie must be in [0, 95]");
    if (!(profile.bpl > 0.0))
        throw ConfigError("codec '" + profile.name + "': bpl must be > 0");
    if (!(profile.default_burst_r >= 1.0))
        throw ConfigError("codec '" + profile.name + "': burst_r must be >= 1");
    if (profile.band == Band::WB && profile.default_burst_r != 1.0)
        throw ConfigError("codec '" + profile.name +
                          "': wideband profiles have no burstiness term (burst_r must be 1)");
}

static void check_ppl(double ppl_pct) {
    if (!(ppl_pct >= 0.0 && ppl_pct <= 100.0))
        throw ConfigError("ppl must be a percentage in [0, 100]");
}

double effective_impairment_nb(const CodecProfile& profile, double ppl_pct, double burst_r) {
    validate_profile(profile);
    check_ppl(ppl_pct);
    if (profile.band != Band::NB)
        throw ConfigError("codec '" + profile.name + "' is not narrowband");
    if (!(burst_r >= 1.0))
        throw ConfigError("burst_r must be >= 1");
    if (ppl_pct == 0.0)
        return profile.ie;
    return profile.ie + (95.0 - profile.ie) * ppl_pct / (ppl_pct / burst_r + profile.bpl);
}

double effective_impairment_nb(const CodecProfile& profile, double ppl_pct) {
    return effective_impairment_nb(profile, ppl_pct, profile.default_burst_r);
}

double effective_impairment_wb(const CodecProfile& profile, double ppl_pct) {
    validate_profile(profile);
    check_ppl(ppl_pct);
    if (profile.band != Band::WB)
        throw ConfigError("codec '" + profile.name + "' is not wideband");
    return profile.ie + (95.0 - profile.ie) * ppl_pct / (ppl_pct + profile.bpl);
}

RScore r_score(const TransmissionParams& params, double ie_eff) {
    if (!std::isfinite(params.r0) || !std::isfinite(params.is) || !std::isfinite(params.id) ||
        !std::isfinite(params.advantage))
        throw ConfigError("transmission parameters must be finite");
    if (!std::isfinite(ie_eff))
        throw ConfigError("ie_eff must be finite");
    double raw = params.r0 - params.is - params.id - ie_eff + params.advantage;
    double hi = params.band == Band::NB ? 100.0 : 129.0;
    return {std::clamp(raw, 0.0, hi), params.band};
}

RScore wb_to_nb(const RScore& wb) {
    if (wb.band != Band::WB)
        throw ConfigError("wb_to_nb expects a wideband rating");
    return {wb.value * 100.0 / 129.0, Band::NB};
}

MosScore r_to_mos(const RScore& nb) {
    if (nb.band != Band::NB)
        throw ConfigError("r_to_mos expects a narrowband rating (use wb_to_nb first)");
    double r = nb.value;
    if (!std::isfinite(r))
        throw ConfigError("R must be finite");
    if (r < 0.0)
        return {1.0};
    if (r > 100.0)
        return {4.5};
    double mos = 1.0 + 0.035 * r + r * (r - 60.0) * (100.0 - r) * 7.0e-6;
    // The raw cubic dips slightly below 1 for R < ~6.56; MOS is defined on
    // [1, 4.5], so floor it (keeps the mapping monotone non-decreasing).
    return {std::clamp(mos, 1.0, 4.5)};
}

} // namespace wiremodel
