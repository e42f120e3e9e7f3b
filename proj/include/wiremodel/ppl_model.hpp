#pragma once

#include <string>
#include <vector>

#include "wiremodel/emodel.hpp"

namespace wiremodel {

enum class ModulationScheme { BPSK, QPSK, QAM16, QAM32, QAM64, QAM256 };

const char* modulation_name(ModulationScheme scheme);
ModulationScheme modulation_from_name(const std::string& name); // throws ConfigError
int bits_per_symbol(ModulationScheme scheme);
const std::vector<ModulationScheme>& all_modulations();

struct AntennaSet {
    int n_tx = 1;
    int m_rx = 1;

    bool operator==(const AntennaSet&) const = default;
};

// One operating point of the radio link. snr_db is the per-receive-antenna
// average symbol SNR (Es/N0) in dB; the calibrated planning range is 0-30 dB,
// values outside it are allowed but flagged.
struct WirelessConfig {
    ModulationScheme modulation = ModulationScheme::QPSK;
    AntennaSet antennas;
    double snr_db = 0.0;
};

// Ppl' = a * snr_db^b + c, snr_db taken as the raw dB value. a > 0 and b < 0
// are the expected shape for a loss-vs-SNR curve; violations are flagged by
// callers, not rejected, so user-fitted tables stay loadable.
struct PowerLawCoefficients {
    double a = 1.0;
    double b = -1.0;
    double c = 0.0;
};

enum class Provenance { Builtin, Fitted, User };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name); // throws ConfigError

struct CoefficientRow {
    ModulationScheme modulation = ModulationScheme::QPSK;
    AntennaSet antennas;
    PowerLawCoefficients coeffs;
    Provenance provenance = Provenance::User;
    // Set when the stored value is a reconstruction of a defective source
    // print (or is kept verbatim despite looking wrong); `note` says which.
    bool transcription_flag = false;
    std::string note;
};

// Keyed by (modulation, n_tx, m_rx). JSON form: array of
// {modulation, n_tx, m_rx, a, b, c, provenance} (+ optional note).
class CoefficientTable {
public:
    void upsert(const CoefficientRow& row);
    bool contains(ModulationScheme scheme, AntennaSet antennas) const;
    const CoefficientRow& get(ModulationScheme scheme, AntennaSet antennas) const; // ConfigError
    const std::vector<CoefficientRow>& rows() const { return rows_; }

    std::string to_json() const;
    static CoefficientTable from_json(const std::string& text); // throws ConfigError
    static CoefficientTable load(const std::string& path);      // IoError / ConfigError
    void save(const std::string& path) const;                   // IoError

private:
    std::vector<CoefficientRow> rows_;
};

// The 24 published rows (6 modulations x 4 symmetric antenna sets), values
// exactly as printed; the three defective prints carry transcription flags.
const CoefficientTable& builtin_table();

struct PplEstimate {
    double ppl_pct = 0.0;            // clamped to [0, 100]
    double raw_pct = 0.0;            // a*snr^b + c before clamping
    bool clamped_low = false;
    bool clamped_high = false;
    bool above_random_loss_limit = false; // raw > 20%: outside the random-loss planning range
    bool outside_design_snr = false;      // snr_db > 30: beyond the calibrated sweep
};

// Evaluate the power law for a config. Throws ConfigError when no coefficient
// row exists or snr_db <= 0 (the power law is undefined there; planning
// callers should treat Ppl' as 100%).
PplEstimate estimate_ppl_detail(const WirelessConfig& config, const CoefficientTable& table);
double estimate_ppl(const WirelessConfig& config, const CoefficientTable& table);

// Composition: predicted Ppl' -> effective equipment impairment.
double predicted_ie_eff_nb(const CodecProfile& profile, const WirelessConfig& config,
                           const CoefficientTable& table, double burst_r);
double predicted_ie_eff_wb(const CodecProfile& profile, const WirelessConfig& config,
                           const CoefficientTable& table);

} // namespace wiremodel
