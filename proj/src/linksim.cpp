#include "wiremodel/linksim.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <complex>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wiremodel/constellation.hpp"
#include "wiremodel/errors.hpp"
#include "wiremodel/ostbc.hpp"

namespace wiremodel {

const char* channel_name(ChannelKind kind) {
    return kind == ChannelKind::IdentityAwgn ? "identity" : "rayleigh";
}

ChannelKind channel_from_name(const std::string& name) {
    if (name == "identity")
        return ChannelKind::IdentityAwgn;
    if (name == "rayleigh")
        return ChannelKind::RayleighBlockFading;
    throw ConfigError("unknown channel '" + name + "' (expected identity or rayleigh)");
}

double noise_variance(double snr_db) {
    if (std::isnan(snr_db) || snr_db == -std::numeric_limits<double>::infinity())
        throw ConfigError("snr_db must be finite or +infinity");
    if (std::isinf(snr_db))
        return 0.0;
    return std::pow(10.0, -snr_db / 10.0);
}

std::vector<std::uint8_t> random_payload(int n_bits, CounterRng& rng) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_bits));
    for (auto& b : bits)
        b = static_cast<std::uint8_t>(rng.next_bit());
    return bits;
}

namespace {

void check_antennas(AntennaSet ant, ChannelKind channel) {
    ostbc_for(ant.n_tx); // throws for unsupported counts
    if (ant.m_rx < 1 || ant.m_rx > 4)
        throw ConfigError("receive antenna count must be in 1..4");
    if (channel == ChannelKind::IdentityAwgn && ant.m_rx != ant.n_tx)
        throw ConfigError("identity channel requires a square antenna set (m_rx == n_tx)");
}

// Modulated symbols -> space-time encode -> channel + noise -> MRC combine.
// Returns per-symbol estimates (pad symbols stripped). Draw order per call:
// fading matrix first (Rayleigh only), then one complex Gaussian per received
// sample in time-major order.
std::vector<std::complex<double>> pass_through_channel(
    const std::vector<std::complex<double>>& symbols, AntennaSet ant, ChannelKind channel,
    double snr_db, CounterRng& rng) {
    check_antennas(ant, channel);
    const OstbcScheme& scheme = ostbc_for(ant.n_tx);
    const int n_tx = ant.n_tx;
    const int m_rx = ant.m_rx;
    const double n0 = noise_variance(snr_db);

    int pad = 0;
    std::vector<std::complex<double>> tx = ostbc_encode(scheme, symbols, &pad);
    const std::size_t n_slots = n_tx > 0 ? tx.size() / static_cast<std::size_t>(n_tx) : 0;

    std::vector<std::complex<double>> h(static_cast<std::size_t>(m_rx) * n_tx, {0.0, 0.0});
    if (channel == ChannelKind::RayleighBlockFading) {
        for (auto& entry : h)
            entry = rng.complex_normal();
    } else {
        for (int r = 0; r < m_rx; ++r)
            h[static_cast<std::size_t>(r) * n_tx + r] = {1.0, 0.0};
    }

    std::vector<std::complex<double>> y(n_slots * static_cast<std::size_t>(m_rx));
    const double sigma = std::sqrt(n0 / 2.0);
    for (std::size_t t = 0; t < n_slots; ++t) {
        for (int r = 0; r < m_rx; ++r) {
            std::complex<double> v{0.0, 0.0};
            for (int i = 0; i < n_tx; ++i)
                v += h[static_cast<std::size_t>(r) * n_tx + i] * tx[t * n_tx + i];
            if (n0 > 0.0) {
                double g0, g1;
                rng.normal_pair(g0, g1);
                v += std::complex<double>{sigma * g0, sigma * g1};
            }
            y[t * static_cast<std::size_t>(m_rx) + r] = v;
        }
    }

    OstbcDecoder decoder(scheme, h, m_rx);
    const int k = scheme.symbols_per_block;
    const int t_slots = scheme.time_slots;
    const std::size_t n_blocks = t_slots > 0 ? n_slots / static_cast<std::size_t>(t_slots) : 0;
    std::vector<std::complex<double>> estimates(n_blocks * static_cast<std::size_t>(k));
    std::complex<double> s_hat[4];
    for (std::size_t blk = 0; blk < n_blocks; ++blk) {
        decoder.decode_block(y.data() + blk * static_cast<std::size_t>(t_slots) * m_rx, s_hat);
        for (int j = 0; j < k; ++j)
            estimates[blk * static_cast<std::size_t>(k) + j] = s_hat[j];
    }
    estimates.resize(symbols.size());
    return estimates;
}

} // namespace

FrameVerdict run_frame(const FrameBits& sent, const WirelessConfig& config, ChannelKind channel,
                       CounterRng& rng) {
    std::vector<std::uint8_t> tx_bits = frame_to_bits(sent);
    std::vector<std::complex<double>> symbols = modulate(config.modulation, tx_bits);
    std::vector<std::complex<double>> estimates =
        pass_through_channel(symbols, config.antennas, channel, config.snr_db, rng);
    std::vector<std::uint8_t> rx_bits = demodulate(config.modulation, estimates);
    rx_bits.resize(tx_bits.size());
    FrameBits received = frame_from_bits(sent.layout, rx_bits);
    return frame_loss_decision(sent, received);
}

double wilson_ci95_pct(long losses, long trials) {
    if (trials <= 0)
        throw ConfigError("confidence interval needs at least one trial");
    if (losses < 0 || losses > trials)
        throw ConfigError("loss count must lie in [0, trials]");
    const double z = 1.959963984540054; // 97.5th percentile of N(0,1)
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(losses) / n;
    const double z2 = z * z;
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
    return 100.0 * half;
}

namespace {

std::vector<PplMeasurement> prepare_rows(const SweepGrid& grid, const SweepOptions& options) {
    if (options.frames_per_point < 1)
        throw ConfigError("frames_per_point must be >= 1");
    if (grid.points() == 0)
        throw ConfigError("sweep grid is empty");
    layout_for(options.codec, options.mode); // validates codec/mode
    for (const auto& ant : grid.antenna_sets)
        check_antennas(ant, options.channel);
    for (double snr : grid.snr_db)
        noise_variance(snr); // validates
    std::vector<PplMeasurement> rows;
    rows.reserve(grid.points());
    for (ModulationScheme m : grid.modulations) {
        for (const AntennaSet& ant : grid.antenna_sets) {
            for (double snr : grid.snr_db) {
                PplMeasurement row;
                row.config = {m, ant, snr};
                row.channel = options.channel;
                row.frames = options.frames_per_point;
                row.seed = options.seed;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

void finish_rows(std::vector<PplMeasurement>& rows, const std::vector<long>& lost) {
    for (std::size_t p = 0; p < rows.size(); ++p) {
        rows[p].lost = lost[p];
        rows[p].ppl_pct = 100.0 * static_cast<double>(lost[p]) / static_cast<double>(rows[p].frames);
        rows[p].ci95_pct = wilson_ci95_pct(lost[p], rows[p].frames);
    }
}

bool sweep_frame_lost(const PplMeasurement& row, const CodecFrameLayout& layout,
                      ChannelKind channel, std::uint64_t seed, std::uint32_t point,
                      std::uint32_t frame) {
    CounterRng rng(seed, CounterRng::stream_id(point, frame));
    FrameBits sent = make_frame(layout, random_payload(layout.total, rng));
    return run_frame(sent, row.config, channel, rng).lost;
}

} // namespace

std::vector<PplMeasurement> measure_ppl_sweep_serial(const SweepGrid& grid,
                                                     const SweepOptions& options) {
    std::vector<PplMeasurement> rows = prepare_rows(grid, options);
    const CodecFrameLayout& layout = layout_for(options.codec, options.mode);
    std::vector<long> lost(rows.size(), 0);
    const long n_points = static_cast<long>(rows.size());
    const long frames = options.frames_per_point;
    for (long p = 0; p < n_points; ++p) {
        for (long f = 0; f < frames; ++f) {
            if (sweep_frame_lost(rows[static_cast<std::size_t>(p)], layout, options.channel,
                                 options.seed, static_cast<std::uint32_t>(p),
                                 static_cast<std::uint32_t>(f)))
                ++lost[static_cast<std::size_t>(p)];
        }
    }
    finish_rows(rows, lost);
    return rows;
}

std::vector<PplMeasurement> measure_ppl_sweep(const SweepGrid& grid, const SweepOptions& options) {
    std::vector<PplMeasurement> rows = prepare_rows(grid, options);
    const CodecFrameLayout& layout = layout_for(options.codec, options.mode);
    std::vector<long> lost(rows.size(), 0);
    const long n_points = static_cast<long>(rows.size());
    const long frames = options.frames_per_point;
#ifdef _OPENMP
    int n_threads = options.max_threads > 0 ? options.max_threads : omp_get_max_threads();
#pragma omp parallel for collapse(2) schedule(static) num_threads(n_threads)
#endif
    for (long p = 0; p < n_points; ++p) {
        for (long f = 0; f < frames; ++f) {
            if (sweep_frame_lost(rows[static_cast<std::size_t>(p)], layout, options.channel,
                                 options.seed, static_cast<std::uint32_t>(p),
                                 static_cast<std::uint32_t>(f))) {
#ifdef _OPENMP
#pragma omp atomic
#endif
                ++lost[static_cast<std::size_t>(p)];
            }
        }
    }
    finish_rows(rows, lost);
    return rows;
}

BerMeasurement measure_ber(ModulationScheme scheme, AntennaSet antennas, ChannelKind channel,
                           double snr_db, long min_bits, std::uint64_t seed,
                           int symbols_per_draw) {
    if (min_bits < 1)
        throw ConfigError("measure_ber needs min_bits >= 1");
    if (symbols_per_draw < 1)
        throw ConfigError("measure_ber needs symbols_per_draw >= 1");
    check_antennas(antennas, channel);
    const OstbcScheme& code = ostbc_for(antennas.n_tx);
    // Round the chunk up to a whole number of space-time blocks so no pad
    // symbols are ever transmitted.
    const int k = code.symbols_per_block;
    const int chunk_symbols = ((symbols_per_draw + k - 1) / k) * k;
    const int bps = bits_per_symbol(scheme);
    const long chunk_bits = static_cast<long>(chunk_symbols) * bps;
    const long n_chunks = (min_bits + chunk_bits - 1) / chunk_bits;

    long errors = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : errors)
#endif
    for (long chunk = 0; chunk < n_chunks; ++chunk) {
        CounterRng rng(seed, static_cast<std::uint64_t>(chunk));
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(chunk_bits));
        for (auto& b : bits)
            b = static_cast<std::uint8_t>(rng.next_bit());
        std::vector<std::complex<double>> symbols = modulate(scheme, bits);
        std::vector<std::complex<double>> estimates =
            pass_through_channel(symbols, antennas, channel, snr_db, rng);
        std::vector<std::uint8_t> rx_bits = demodulate(scheme, estimates);
        long e = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            e += bits[i] != rx_bits[i];
        errors += e;
    }

    BerMeasurement result;
    result.bits = n_chunks * chunk_bits;
    result.bit_errors = errors;
    result.ber = static_cast<double>(errors) / static_cast<double>(result.bits);
    return result;
}

// --- CSV ---------------------------------------------------------------

const char* const kSweepCsvHeader =
    "modulation,n_tx,m_rx,snr_db,channel,frames,lost,ppl_pct,ci95_pct,seed";

namespace {

std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc())
        throw InternalError("double formatting failed");
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_double(const std::string& s, const char* what) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(std::string("malformed ") + what + " value '" + s + "' in sweep CSV");
    return v;
}

long parse_long(const std::string& s, const char* what) {
    long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(std::string("malformed ") + what + " value '" + s + "' in sweep CSV");
    return v;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(std::string("malformed ") + what + " value '" + s + "' in sweep CSV");
    return v;
}

} // namespace

std::string sweep_to_csv(const std::vector<PplMeasurement>& rows) {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << modulation_name(r.config.modulation) << ',' << r.config.antennas.n_tx << ','
            << r.config.antennas.m_rx << ',' << fmt_double(r.config.snr_db) << ','
            << channel_name(r.channel) << ',' << r.frames << ',' << r.lost << ','
            << fmt_double(r.ppl_pct) << ',' << fmt_double(r.ci95_pct) << ',' << r.seed << '\n';
    }
    return out.str();
}

std::vector<PplMeasurement> sweep_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("sweep CSV is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kSweepCsvHeader)
        throw ConfigError(std::string("sweep CSV header mismatch (expected '") + kSweepCsvHeader +
                          "')");
    std::vector<PplMeasurement> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> f = split_fields(line);
        if (f.size() != 10)
            throw ConfigError("sweep CSV row has " + std::to_string(f.size()) +
                              " fields, expected 10: '" + line + "'");
        PplMeasurement r;
        r.config.modulation = modulation_from_name(f[0]);
        r.config.antennas.n_tx = static_cast<int>(parse_long(f[1], "n_tx"));
        r.config.antennas.m_rx = static_cast<int>(parse_long(f[2], "m_rx"));
        r.config.snr_db = parse_double(f[3], "snr_db");
        r.channel = channel_from_name(f[4]);
        r.frames = parse_long(f[5], "frames");
        r.lost = parse_long(f[6], "lost");
        r.ppl_pct = parse_double(f[7], "ppl_pct");
        r.ci95_pct = parse_double(f[8], "ci95_pct");
        r.seed = parse_u64(f[9], "seed");
        if (r.frames < 0 || r.lost < 0 || r.lost > r.frames)
            throw ConfigError("sweep CSV row has inconsistent frames/lost: '" + line + "'");
        rows.push_back(std::move(r));
    }
    return rows;
}

void save_sweep_csv(const std::vector<PplMeasurement>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write sweep CSV '" + path + "'");
    out << sweep_to_csv(rows);
    if (!out)
        throw IoError("failed writing sweep CSV '" + path + "'");
}

std::vector<PplMeasurement> load_sweep_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open sweep CSV '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("failed reading sweep CSV '" + path + "'");
    return sweep_from_csv(buf.str());
}

} // namespace wiremodel
