#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wiremodel/framing.hpp"
#include "wiremodel/ppl_model.hpp"
#include "wiremodel/rng.hpp"

namespace wiremodel {

enum class ChannelKind { IdentityAwgn, RayleighBlockFading };

const char* channel_name(ChannelKind kind);
ChannelKind channel_from_name(const std::string& name); // "identity" | "rayleigh"

// snr_db is per-receive-antenna average symbol SNR (Es/N0) referenced to unit
// total transmit power and unit-gain channel statistics: noise variance per
// receive sample is N0 = 10^(-snr_db/10). +infinity disables noise entirely.
double noise_variance(double snr_db);

// One frame through modulate -> space-time encode -> channel -> combine ->
// demodulate -> CRC loss decision. The rng stream supplies, in fixed order,
// the fading realization (Rayleigh only; m_rx x n_tx, row-major) and then the
// per-sample noise, so a (seed, stream) pair fully determines the outcome.
FrameVerdict run_frame(const FrameBits& sent, const WirelessConfig& config, ChannelKind channel,
                       CounterRng& rng);

// Random payload for one frame, drawn from the same stream discipline.
std::vector<std::uint8_t> random_payload(int n_bits, CounterRng& rng);

struct SweepGrid {
    std::vector<ModulationScheme> modulations;
    std::vector<AntennaSet> antenna_sets;
    std::vector<double> snr_db;

    std::size_t points() const {
        return modulations.size() * antenna_sets.size() * snr_db.size();
    }
};

struct SweepOptions {
    CodecKind codec = CodecKind::AmrWb;
    int mode = 2;
    ChannelKind channel = ChannelKind::RayleighBlockFading;
    int frames_per_point = 500;
    std::uint64_t seed = 1;
    int max_threads = 0; // worker cap; 0 = runtime default. Never affects results.
};

struct PplMeasurement {
    WirelessConfig config;
    ChannelKind channel = ChannelKind::RayleighBlockFading;
    long frames = 0;
    long lost = 0;
    double ppl_pct = 0.0;
    double ci95_pct = 0.0; // Wilson 95% half-width, percentage points
    std::uint64_t seed = 0;
};

// Wilson score interval half-width (95%), in percentage points.
double wilson_ci95_pct(long losses, long trials);

// Monte-Carlo Ppl over the grid, one row per (modulation, antennas, snr) in
// grid order. Every frame draws from its own counter-based stream keyed by
// (grid point index, frame index), so the OpenMP version is bit-identical to
// the serial reference for any worker count.
std::vector<PplMeasurement> measure_ppl_sweep(const SweepGrid& grid, const SweepOptions& options);
std::vector<PplMeasurement> measure_ppl_sweep_serial(const SweepGrid& grid,
                                                     const SweepOptions& options);

struct BerMeasurement {
    long bits = 0;
    long bit_errors = 0;
    double ber = 0.0;
};

// Raw (uncoded, frameless) bit error rate of the modem + space-time path.
// The channel is redrawn every `symbols_per_draw` symbols to average over
// fading. Deterministic in (seed); parallelized over chunks.
BerMeasurement measure_ber(ModulationScheme scheme, AntennaSet antennas, ChannelKind channel,
                           double snr_db, long min_bits, std::uint64_t seed,
                           int symbols_per_draw = 120);

// Sweep CSV, exact header:
//   modulation,n_tx,m_rx,snr_db,channel,frames,lost,ppl_pct,ci95_pct,seed
// Doubles are written in shortest round-trip form, so rewriting a parsed file
// reproduces it byte for byte.
extern const char* const kSweepCsvHeader;
std::string sweep_to_csv(const std::vector<PplMeasurement>& rows);
std::vector<PplMeasurement> sweep_from_csv(const std::string& text); // ConfigError
void save_sweep_csv(const std::vector<PplMeasurement>& rows, const std::string& path); // IoError
std::vector<PplMeasurement> load_sweep_csv(const std::string& path); // IoError / ConfigError

} // namespace wiremodel
