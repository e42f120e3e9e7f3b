#include "wiremodel/ppl_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wiremodel/errors.hpp"

namespace wiremodel {

using nlohmann::json;

const char* modulation_name(ModulationScheme scheme) {
    switch (scheme) {
    case ModulationScheme::BPSK: return "BPSK";
    case ModulationScheme::QPSK: return "QPSK";
    case ModulationScheme::QAM16: return "QAM16";
    case ModulationScheme::QAM32: return "QAM32";
    case ModulationScheme::QAM64: return "QAM64";
    case ModulationScheme::QAM256: return "QAM256";
    }
    throw InternalError("unhandled modulation scheme");
}

ModulationScheme modulation_from_name(const std::string& name) {
    for (ModulationScheme m : all_modulations())
        if (name == modulation_name(m))
            return m;
    throw ConfigError("unknown modulation '" + name +
                      "' (expected BPSK, QPSK, QAM16, QAM32, QAM64 or QAM256)");
}

int bits_per_symbol(ModulationScheme scheme) {
    switch (scheme) {
    case ModulationScheme::BPSK: return 1;
    case ModulationScheme::QPSK: return 2;
    case ModulationScheme::QAM16: return 4;
    case ModulationScheme::QAM32: return 5;
    case ModulationScheme::QAM64: return 6;
    case ModulationScheme::QAM256: return 8;
    }
    throw InternalError("unhandled modulation scheme");
}

const std::vector<ModulationScheme>& all_modulations() {
    static const std::vector<ModulationScheme> kAll = {
        ModulationScheme::BPSK,  ModulationScheme::QPSK,  ModulationScheme::QAM16,
        ModulationScheme::QAM32, ModulationScheme::QAM64, ModulationScheme::QAM256,
    };
    return kAll;
}

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::Builtin: return "builtin";
    case Provenance::Fitted: return "fitted";
    case Provenance::User: return "user";
    }
    throw InternalError("unhandled provenance");
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "builtin")
        return Provenance::Builtin;
    if (name == "fitted")
        return Provenance::Fitted;
    if (name == "user")
        return Provenance::User;
    throw ConfigError("unknown provenance '" + name + "'");
}

void CoefficientTable::upsert(const CoefficientRow& row) {
    if (row.antennas.n_tx < 1 || row.antennas.m_rx < 1)
        throw ConfigError("coefficient row antenna counts must be >= 1");
    if (!std::isfinite(row.coeffs.a) || !std::isfinite(row.coeffs.b) ||
        !std::isfinite(row.coeffs.c))
        throw ConfigError("coefficient row values must be finite");
    for (auto& existing : rows_) {
        if (existing.modulation == row.modulation && existing.antennas == row.antennas) {
            existing = row;
            return;
        }
    }
    rows_.push_back(row);
}

bool CoefficientTable::contains(ModulationScheme scheme, AntennaSet antennas) const {
    for (const auto& r : rows_)
        if (r.modulation == scheme && r.antennas == antennas)
            return true;
    return false;
}

const CoefficientRow& CoefficientTable::get(ModulationScheme scheme, AntennaSet antennas) const {
    for (const auto& r : rows_)
        if (r.modulation == scheme && r.antennas == antennas)
            return r;
    throw ConfigError(std::string("no coefficient row for ") + modulation_name(scheme) + " (" +
                      std::to_string(antennas.n_tx) + "," + std::to_string(antennas.m_rx) + ")");
}

std::string CoefficientTable::to_json() const {
    json arr = json::array();
    for (const auto& r : rows_) {
        json item = {{"modulation", modulation_name(r.modulation)},
                     {"n_tx", r.antennas.n_tx},
                     {"m_rx", r.antennas.m_rx},
                     {"a", r.coeffs.a},
                     {"b", r.coeffs.b},
                     {"c", r.coeffs.c},
                     {"provenance", provenance_name(r.provenance)}};
        if (r.transcription_flag) {
            item["transcription_flag"] = true;
            item["note"] = r.note;
        }
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

CoefficientTable CoefficientTable::from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("coefficient table is not valid JSON: ") + e.what());
    }
    if (!arr.is_array())
        throw ConfigError("coefficient table must be a JSON array of rows");
    CoefficientTable table;
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("modulation") || !item.contains("n_tx") ||
            !item.contains("m_rx") || !item.contains("a") || !item.contains("b") ||
            !item.contains("c"))
            throw ConfigError("coefficient rows need modulation, n_tx, m_rx, a, b, c");
        CoefficientRow row;
        row.modulation = modulation_from_name(item.at("modulation").get<std::string>());
        row.antennas = {item.at("n_tx").get<int>(), item.at("m_rx").get<int>()};
        row.coeffs = {item.at("a").get<double>(), item.at("b").get<double>(),
                      item.at("c").get<double>()};
        row.provenance = provenance_from_name(item.value("provenance", std::string("user")));
        row.transcription_flag = item.value("transcription_flag", false);
        row.note = item.value("note", std::string());
        table.upsert(row);
    }
    return table;
}

CoefficientTable CoefficientTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open coefficient table '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("failed reading coefficient table '" + path + "'");
    return from_json(buf.str());
}

void CoefficientTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write coefficient table '" + path + "'");
    out << to_json();
    if (!out)
        throw IoError("failed writing coefficient table '" + path + "'");
}

const CoefficientTable& builtin_table() {
    static const CoefficientTable kTable = [] {
        CoefficientTable t;
        auto add = [&t](ModulationScheme m, int ant, double a, double b, double c,
                        const char* note = nullptr) {
            CoefficientRow row;
            row.modulation = m;
            row.antennas = {ant, ant};
            row.coeffs = {a, b, c};
            row.provenance = Provenance::Builtin;
            if (note) {
                row.transcription_flag = true;
                row.note = note;
            }
            t.upsert(row);
        };
        using M = ModulationScheme;
        add(M::BPSK, 1, 1019.0, -5.002, -0.002132);
        add(M::BPSK, 2, 90.26, -4.357, -0.001042);
        add(M::BPSK, 3, 0.1684, -1.757, -0.0009269);
        add(M::BPSK, 4, 0.3692, -3.25, -0.000051);
        add(M::QPSK, 1, 8.395e9, -11.2, -0.0004646);
        add(M::QPSK, 2, 43900.0, -6.434, -0.0001633);
        add(M::QPSK, 3, 60.61, -3.651, -0.0009027);
        add(M::QPSK, 4, 12.12, -3.722, -0.0002535);
        add(M::QAM16, 1, 1.241e16, -14.19, 0.0);
        add(M::QAM16, 2, 2.04e8, -7.805, -0.0025011);
        add(M::QAM16, 3, 3.751e14, -14.66, -0.0000017,
            "source prints a as \"3.751x^14\"; read as 3.751e14");
        add(M::QAM16, 4, 4.624e7, -8.614, -0.0002708);
        add(M::QAM32, 1, 2.898e20, -1.78, -0.0000001,
            "b = -1.78 kept as printed; slope is inconsistent with every other "
            "single-antenna row and predicts 100% loss across the whole 0-30 dB range");
        add(M::QAM32, 2, 6.607e7, -7.132, -0.009703);
        add(M::QAM32, 3, 3.725e10, -9.859, 0.0);
        add(M::QAM32, 4, 1.142e15, -14.51, 0.0,
            "source prints a as \"1.142v10^15\"; read as 1.142e15");
        add(M::QAM64, 1, 7.08e33, -25.91, 0.0);
        add(M::QAM64, 2, 2.756e30, -24.09, -0.0000013);
        add(M::QAM64, 3, 5.403e27, -23.23, 0.0);
        add(M::QAM64, 4, 1.043e10, -9.116, -0.002523);
        add(M::QAM256, 1, 5.922e25, -18.52, 0.0);
        add(M::QAM256, 2, 3.302e17, -13.05, 0.0);
        add(M::QAM256, 3, 5.465e22, -17.32, -0.0000012);
        add(M::QAM256, 4, 2.975e23, -18.28, 0.0);
        return t;
    }();
    return kTable;
}

PplEstimate estimate_ppl_detail(const WirelessConfig& config, const CoefficientTable& table) {
    if (!std::isfinite(config.snr_db))
        throw ConfigError("snr_db must be finite");
    if (config.snr_db <= 0.0)
        throw ConfigError("power-law loss predictor is undefined at snr_db <= 0; "
                          "treat Ppl' as 100% below the calibrated range");
    const CoefficientRow& row = table.get(config.modulation, config.antennas);
    PplEstimate est;
    est.raw_pct = row.coeffs.a * std::pow(config.snr_db, row.coeffs.b) + row.coeffs.c;
    est.ppl_pct = std::clamp(est.raw_pct, 0.0, 100.0);
    est.clamped_low = est.raw_pct < 0.0;
    est.clamped_high = est.raw_pct > 100.0;
    est.above_random_loss_limit = est.raw_pct > 20.0;
    est.outside_design_snr = config.snr_db > 30.0;
    return est;
}

double estimate_ppl(const WirelessConfig& config, const CoefficientTable& table) {
    return estimate_ppl_detail(config, table).ppl_pct;
}

double predicted_ie_eff_nb(const CodecProfile& profile, const WirelessConfig& config,
                           const CoefficientTable& table, double burst_r) {
    return effective_impairment_nb(profile, estimate_ppl(config, table), burst_r);
}

double predicted_ie_eff_wb(const CodecProfile& profile, const WirelessConfig& config,
                           const CoefficientTable& table) {
    return effective_impairment_wb(profile, estimate_ppl(config, table));
}

} // namespace wiremodel
