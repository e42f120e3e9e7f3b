// wiremodel: speech-transmission-quality planning for wireless voice links.
//
// Subcommands:
//   predict       power-law loss estimate -> impairment -> R -> MOS, no simulation
//   simulate      Monte-Carlo frame-loss sweep over a (modulation, antennas, SNR) grid
//   fit           fit loss-vs-SNR power laws to a sweep CSV
//   validate      compare rating computed from measured vs predicted loss
//   export-tables dump builtin coefficient and frame-layout tables
//
// Exit codes: 0 ok, 2 user/config error, 3 I/O error, 4 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wiremodel/codec_registry.hpp"
#include "wiremodel/emodel.hpp"
#include "wiremodel/errors.hpp"
#include "wiremodel/fitting.hpp"
#include "wiremodel/framing.hpp"
#include "wiremodel/linksim.hpp"
#include "wiremodel/ppl_model.hpp"
#include "wiremodel/version.hpp"

using json = nlohmann::ordered_json;
using namespace wiremodel;

namespace {

int env_thread_cap() {
    const char* s = std::getenv("WIREMODEL_THREADS");
    if (!s || !*s)
        return 0;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (!end || *end != '\0' || v < 1)
        throw ConfigError("WIREMODEL_THREADS must be a positive integer");
    return static_cast<int>(v);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find(',', start);
        if (pos == std::string::npos) {
            if (start < text.size())
                parts.push_back(text.substr(start));
            break;
        }
        if (pos > start)
            parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

AntennaSet parse_antenna_set(const std::string& token) {
    std::size_t pos = token.find('x');
    if (pos == std::string::npos)
        pos = token.find('X');
    if (pos == std::string::npos || pos == 0 || pos + 1 >= token.size())
        throw ConfigError("bad antenna set '" + token + "' (expected NxM, e.g. 2x2)");
    try {
        int n_tx = std::stoi(token.substr(0, pos));
        int m_rx = std::stoi(token.substr(pos + 1));
        return {n_tx, m_rx};
    } catch (const std::exception&) {
        throw ConfigError("bad antenna set '" + token + "' (expected NxM, e.g. 2x2)");
    }
}

CoefficientTable load_table_spec(const std::string& spec) {
    if (spec == "builtin")
        return builtin_table();
    return CoefficientTable::load(spec);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const json& config) {
    json manifest;
    manifest["tool"] = "wiremodel";
    manifest["version"] = kVersion;
    manifest["command"] = command;
    manifest["config"] = config;
    write_text_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

void check_format(const std::string& format, const std::string& expected,
                  const std::string& command) {
    if (format != expected)
        throw ConfigError(command + " only supports --format " + expected);
}

// ---- predict -----------------------------------------------------------

struct PredictArgs {
    std::string modulation = "QPSK";
    int n_tx = 1;
    int m_rx = 1;
    double snr_db = 0.0;
    std::string codec;
    std::string registry_path;
    std::string table_spec = "builtin";
    double is = 0.0;
    double id = 0.0;
    double advantage = 0.0;
    double burst_r = -1.0; // <0: use the profile default
    double r0 = -1.0;      // <0: use the band default
    std::string out;
    std::string format = "json";
};

int run_predict(const PredictArgs& args) {
    check_format(args.format, "json", "predict");
    CodecRegistry registry = CodecRegistry::load(args.registry_path);
    const CodecProfile& profile = registry.get(args.codec);
    CoefficientTable table = load_table_spec(args.table_spec);

    WirelessConfig config;
    config.modulation = modulation_from_name(args.modulation);
    config.antennas = {args.n_tx, args.m_rx};
    config.snr_db = args.snr_db;

    const CoefficientRow& row = table.get(config.modulation, config.antennas);
    PplEstimate estimate = estimate_ppl_detail(config, table);

    std::vector<std::string> warnings;
    if (estimate.clamped_high)
        warnings.push_back("predicted loss exceeded 100% and was clamped");
    if (estimate.clamped_low)
        warnings.push_back("predicted loss was negative and was clamped to 0");
    if (estimate.above_random_loss_limit)
        warnings.push_back("predicted loss exceeds the 20% random-loss planning limit");
    if (estimate.outside_design_snr)
        warnings.push_back("snr_db is above the calibrated 0-30 dB sweep range");
    if (row.transcription_flag)
        warnings.push_back("coefficient row carries a transcription note: " + row.note);
    if (!(row.coeffs.a > 0.0) || !(row.coeffs.b < 0.0))
        warnings.push_back("coefficient row has unexpected shape (want a > 0, b < 0)");

    double burst_r = args.burst_r >= 0.0 ? args.burst_r : profile.default_burst_r;
    double ie_eff = profile.band == Band::NB
                        ? effective_impairment_nb(profile, estimate.ppl_pct, burst_r)
                        : effective_impairment_wb(profile, estimate.ppl_pct);

    TransmissionParams params = profile.band == Band::NB ? TransmissionParams::nb_defaults()
                                                         : TransmissionParams::wb_defaults();
    if (args.r0 >= 0.0)
        params.r0 = args.r0;
    params.is = args.is;
    params.id = args.id;
    params.advantage = args.advantage;

    RScore r = r_score(params, ie_eff);
    RScore r_nb = profile.band == Band::WB ? wb_to_nb(r) : r;
    MosScore mos = r_to_mos(r_nb);

    json config_echo;
    config_echo["modulation"] = modulation_name(config.modulation);
    config_echo["n_tx"] = config.antennas.n_tx;
    config_echo["m_rx"] = config.antennas.m_rx;
    config_echo["snr_db"] = config.snr_db;
    config_echo["codec"] = profile.name;
    config_echo["band"] = band_name(profile.band);
    config_echo["ie"] = profile.ie;
    config_echo["bpl"] = profile.bpl;
    config_echo["burst_r"] = burst_r;
    config_echo["r0"] = params.r0;
    config_echo["is"] = params.is;
    config_echo["id"] = params.id;
    config_echo["advantage"] = params.advantage;
    config_echo["coeff_table"] = args.table_spec;
    config_echo["codec_registry"] = args.registry_path;

    json record;
    record["tool"] = "wiremodel";
    record["version"] = kVersion;
    record["command"] = "predict";
    record["config"] = config_echo;
    json result;
    result["ppl_prime_pct"] = estimate.ppl_pct;
    result["ppl_prime_raw_pct"] = estimate.raw_pct;
    result["ie_eff"] = ie_eff;
    result["r_score"] = r.value;
    result["band"] = band_name(r.band);
    if (profile.band == Band::WB)
        result["r_score_nb"] = r_nb.value;
    result["mos"] = mos.value;
    record["result"] = result;
    record["warnings"] = warnings;

    std::string text = record.dump(2) + "\n";
    if (args.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(args.out, text);
        write_manifest(args.out, "predict", config_echo);
    }
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << "\n";
    return 0;
}

// ---- simulate ----------------------------------------------------------

struct SimulateArgs {
    std::string modulations = "QPSK";
    std::string antennas = "1x1,2x2,3x3,4x4";
    double snr_start = 0.0;
    double snr_step = 1.0;
    double snr_stop = 30.0;
    std::string channel = "rayleigh";
    int frames = 500;
    std::string codec = "amr-wb";
    int mode = 2;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

json simulate_config_json(const SimulateArgs& args, const SweepGrid& grid) {
    json config;
    json mods = json::array();
    for (ModulationScheme m : grid.modulations)
        mods.push_back(modulation_name(m));
    json ants = json::array();
    for (const AntennaSet& a : grid.antenna_sets)
        ants.push_back(std::to_string(a.n_tx) + "x" + std::to_string(a.m_rx));
    config["modulations"] = mods;
    config["antenna_sets"] = ants;
    config["snr_db"] = grid.snr_db;
    config["channel"] = args.channel;
    config["frames_per_point"] = args.frames;
    config["codec"] = args.codec;
    config["mode"] = args.mode;
    config["seed"] = args.seed;
    config["out"] = args.out;
    return config;
}

int run_simulate(const SimulateArgs& args) {
    check_format(args.format, "csv", "simulate");
    if (args.snr_step <= 0.0)
        throw ConfigError("--snr-step must be > 0");
    if (args.snr_stop < args.snr_start)
        throw ConfigError("--snr-stop must be >= --snr-start");

    SweepGrid grid;
    for (const std::string& name : split_list(args.modulations))
        grid.modulations.push_back(modulation_from_name(name));
    for (const std::string& token : split_list(args.antennas))
        grid.antenna_sets.push_back(parse_antenna_set(token));
    for (double snr = args.snr_start; snr <= args.snr_stop + 1e-9; snr += args.snr_step)
        grid.snr_db.push_back(snr);
    if (grid.modulations.empty() || grid.antenna_sets.empty() || grid.snr_db.empty())
        throw ConfigError("simulation grid is empty");

    SweepOptions options;
    options.codec = codec_kind_from_name(args.codec);
    options.mode = args.mode;
    options.channel = channel_from_name(args.channel);
    options.frames_per_point = args.frames;
    options.seed = args.seed;
    options.max_threads = env_thread_cap();

    std::vector<PplMeasurement> rows = measure_ppl_sweep(grid, options);
    save_sweep_csv(rows, args.out);
    write_manifest(args.out, "simulate", simulate_config_json(args, grid));
    std::cerr << "simulate: " << rows.size() << " grid points x " << args.frames
              << " frames -> " << args.out << "\n";
    return 0;
}

// ---- fit ----------------------------------------------------------------

struct FitArgs {
    std::string in;
    std::string out;
    std::string table_out;
    std::string format = "json";
};

struct GroupKey {
    ModulationScheme modulation;
    AntennaSet antennas;

    bool operator<(const GroupKey& other) const {
        if (modulation != other.modulation)
            return modulation < other.modulation;
        if (antennas.n_tx != other.antennas.n_tx)
            return antennas.n_tx < other.antennas.n_tx;
        return antennas.m_rx < other.antennas.m_rx;
    }
};

int run_fit(const FitArgs& args) {
    check_format(args.format, "json", "fit");
    std::vector<PplMeasurement> rows = load_sweep_csv(args.in);
    if (rows.empty())
        throw ConfigError("sweep CSV '" + args.in + "' has no data rows");

    // Per-SNR means: duplicate (group, snr) rows are merged by pooling their
    // loss counts, so each SNR contributes exactly one point to the fit.
    std::vector<GroupKey> order;
    std::map<GroupKey, std::map<double, std::pair<long, long>>> groups; // snr -> lost, frames
    for (const auto& row : rows) {
        GroupKey key{row.config.modulation, row.config.antennas};
        if (groups.find(key) == groups.end())
            order.push_back(key);
        auto& cell = groups[key][row.config.snr_db];
        cell.first += row.lost;
        cell.second += row.frames;
    }

    json report;
    report["tool"] = "wiremodel";
    report["version"] = kVersion;
    report["command"] = "fit";
    report["fit_window"] = kFitWindowLabel;
    report["per_snr_means"] = true;
    json group_rows = json::array();
    json skipped = json::array();
    CoefficientTable fitted;

    for (const GroupKey& key : order) {
        DataSeries series;
        for (const auto& [snr, counts] : groups[key]) {
            series.x.push_back(snr);
            series.y.push_back(100.0 * static_cast<double>(counts.first) /
                               static_cast<double>(counts.second));
        }
        DataSeries windowed = apply_fit_window(series);
        if (windowed.x.size() < 3) {
            json item;
            item["modulation"] = modulation_name(key.modulation);
            item["n_tx"] = key.antennas.n_tx;
            item["m_rx"] = key.antennas.m_rx;
            item["reason"] = "only " + std::to_string(windowed.x.size()) +
                             " points in fit window (need 3)";
            skipped.push_back(item);
            std::cerr << "warning: skipping " << modulation_name(key.modulation) << " "
                      << key.antennas.n_tx << "x" << key.antennas.m_rx << ": "
                      << item["reason"].get<std::string>() << "\n";
            continue;
        }
        FitResult fit = fit_power_law(windowed);
        json item;
        item["modulation"] = modulation_name(key.modulation);
        item["n_tx"] = key.antennas.n_tx;
        item["m_rx"] = key.antennas.m_rx;
        item["a"] = fit.coeffs.a;
        item["b"] = fit.coeffs.b;
        item["c"] = fit.coeffs.c;
        if (fit.r_squared_defined)
            item["r2"] = fit.r_squared;
        else
            item["r2"] = nullptr;
        item["rmse"] = fit.rmse;
        item["n_points"] = fit.n_points;
        item["converged"] = fit.converged;
        item["fit_window"] = kFitWindowLabel;
        group_rows.push_back(item);

        CoefficientRow coeff_row;
        coeff_row.modulation = key.modulation;
        coeff_row.antennas = key.antennas;
        coeff_row.coeffs = fit.coeffs;
        coeff_row.provenance = Provenance::Fitted;
        fitted.upsert(coeff_row);
    }

    report["groups"] = group_rows;
    report["skipped"] = skipped;

    std::string table_out = args.table_out;
    if (table_out.empty())
        table_out = args.out + ".table.json";
    write_text_file(args.out, report.dump(2) + "\n");
    fitted.save(table_out);

    json config;
    config["in"] = args.in;
    config["out"] = args.out;
    config["table_out"] = table_out;
    config["fit_window"] = kFitWindowLabel;
    write_manifest(args.out, "fit", config);
    std::cerr << "fit: " << group_rows.size() << " groups fitted, " << skipped.size()
              << " skipped -> " << args.out << "\n";
    return 0;
}

// ---- validate ------------------------------------------------------------

struct ValidateArgs {
    std::string in;
    std::string table_spec = "builtin";
    std::string registry_path;
    std::string codecs; // comma list; empty = all registry profiles
    std::string out;
    std::string format = "json";
};

int run_validate(const ValidateArgs& args) {
    check_format(args.format, "json", "validate");
    std::vector<PplMeasurement> rows = load_sweep_csv(args.in);
    if (rows.empty())
        throw ConfigError("sweep CSV '" + args.in + "' has no data rows");
    CoefficientTable table = load_table_spec(args.table_spec);
    CodecRegistry registry = CodecRegistry::load(args.registry_path);

    std::vector<std::string> codec_names;
    if (args.codecs.empty()) {
        for (const auto& p : registry.profiles())
            codec_names.push_back(p.name);
    } else {
        codec_names = split_list(args.codecs);
    }
    if (codec_names.empty())
        throw ConfigError("no codec profiles selected for validation");

    // Predicted loss per grid point, shared across codecs. Below the
    // predictor's domain (snr <= 0) the documented substitute is 100%.
    std::vector<double> ppl_predicted(rows.size());
    long substitutions = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].config.snr_db <= 0.0) {
            ppl_predicted[i] = 100.0;
            ++substitutions;
        } else {
            ppl_predicted[i] = estimate_ppl(rows[i].config, table);
        }
    }

    auto stats_json = [](const std::vector<double>& observed,
                         const std::vector<double>& predicted, json& out_obj,
                         std::vector<std::string>& notes, const std::string& label) {
        out_obj["n_points"] = observed.size();
        try {
            out_obj["pcc"] = pcc(observed, predicted);
        } catch (const ConfigError&) {
            out_obj["pcc"] = nullptr;
            notes.push_back(label + ": PCC undefined (zero variance)");
        }
        out_obj["rmse"] = rmse(observed, predicted);
    };

    json report;
    report["tool"] = "wiremodel";
    report["version"] = kVersion;
    report["command"] = "validate";
    report["snr_floor_substitutions_per_codec"] = substitutions;
    std::vector<std::string> notes;
    json codec_entries = json::array();
    std::vector<double> overall_measured, overall_predicted;

    for (const std::string& name : codec_names) {
        const CodecProfile& profile = registry.get(name);
        TransmissionParams params = profile.band == Band::NB
                                        ? TransmissionParams::nb_defaults()
                                        : TransmissionParams::wb_defaults();
        auto rating = [&](double ppl_pct) {
            double ie_eff = profile.band == Band::NB
                                ? effective_impairment_nb(profile, ppl_pct)
                                : effective_impairment_wb(profile, ppl_pct);
            return r_score(params, ie_eff).value;
        };

        std::map<std::pair<int, int>, std::pair<std::vector<double>, std::vector<double>>>
            by_antenna;
        std::vector<double> measured, predicted;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double r_meas = rating(rows[i].ppl_pct);
            double r_pred = rating(ppl_predicted[i]);
            measured.push_back(r_meas);
            predicted.push_back(r_pred);
            auto& cell = by_antenna[{rows[i].config.antennas.n_tx, rows[i].config.antennas.m_rx}];
            cell.first.push_back(r_meas);
            cell.second.push_back(r_pred);
        }
        overall_measured.insert(overall_measured.end(), measured.begin(), measured.end());
        overall_predicted.insert(overall_predicted.end(), predicted.begin(), predicted.end());

        json entry;
        entry["codec"] = profile.name;
        entry["band"] = band_name(profile.band);
        json per_antenna = json::array();
        for (const auto& [ant, series] : by_antenna) {
            json cell;
            cell["n_tx"] = ant.first;
            cell["m_rx"] = ant.second;
            stats_json(series.first, series.second, cell, notes,
                       profile.name + " " + std::to_string(ant.first) + "x" +
                           std::to_string(ant.second));
            per_antenna.push_back(cell);
        }
        entry["per_antenna"] = per_antenna;
        json pooled;
        stats_json(measured, predicted, pooled, notes, profile.name + " pooled");
        entry["pooled"] = pooled;
        codec_entries.push_back(entry);
    }

    report["codecs"] = codec_entries;
    json overall;
    stats_json(overall_measured, overall_predicted, overall, notes, "overall");
    report["overall"] = overall;
    report["notes"] = notes;

    json config;
    config["in"] = args.in;
    config["coeff_table"] = args.table_spec;
    config["codec_registry"] = args.registry_path;
    config["codecs"] = codec_names;
    config["out"] = args.out;

    std::string text = report.dump(2) + "\n";
    if (args.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(args.out, text);
        write_manifest(args.out, "validate", config);
    }
    return 0;
}

// ---- export-tables --------------------------------------------------------

struct ExportArgs {
    std::string out = ".";
    std::string format = "json";
};

int run_export(const ExportArgs& args) {
    check_format(args.format, "json", "export-tables");
    std::error_code ec;
    std::filesystem::create_directories(args.out, ec);
    if (ec)
        throw IoError("cannot create output directory '" + args.out + "': " + ec.message());
    std::filesystem::path dir(args.out);
    std::string coeff_path = (dir / "coefficients_builtin.json").string();
    std::string layout_path = (dir / "frame_layouts.json").string();
    builtin_table().save(coeff_path);
    write_text_file(layout_path, layout_registry_json());

    json config;
    config["out"] = args.out;
    config["files"] = json::array({coeff_path, layout_path});
    write_manifest((dir / "export-tables").string(), "export-tables", config);
    std::cerr << "export-tables: wrote " << coeff_path << " and " << layout_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"speech-transmission-quality planning for wireless voice links"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    PredictArgs pa;
    CLI::App* predict = app.add_subcommand("predict", "loss/rating prediction, no simulation");
    predict->add_option("--modulation", pa.modulation, "modulation scheme")->required();
    predict->add_option("--n-tx", pa.n_tx, "transmit antennas (1-4)");
    predict->add_option("--m-rx", pa.m_rx, "receive antennas (1-4)");
    predict->add_option("--snr", pa.snr_db, "per-receive-antenna symbol SNR in dB")->required();
    predict->add_option("--codec", pa.codec, "codec profile name from the registry")->required();
    predict->add_option("--codec-registry", pa.registry_path, "codec registry JSON path")
        ->required();
    predict->add_option("--coeff-table", pa.table_spec, "coefficient table path or 'builtin'");
    predict->add_option("--is", pa.is, "simultaneous impairment term");
    predict->add_option("--id", pa.id, "delay impairment term");
    predict->add_option("--advantage", pa.advantage, "advantage/expectation factor");
    predict->add_option("--burst-r", pa.burst_r, "burst ratio override (NB only)");
    predict->add_option("--r0", pa.r0, "basic signal-to-noise ratio override");
    predict->add_option("--out", pa.out, "write the prediction record here (default stdout)");
    predict->add_option("--format", pa.format, "output format (json)");

    SimulateArgs sa;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo frame-loss sweep");
    simulate->add_option("--modulation", sa.modulations, "comma list of modulation schemes");
    simulate->add_option("--antennas", sa.antennas, "comma list of NxM antenna sets");
    simulate->add_option("--snr-start", sa.snr_start, "sweep start, dB");
    simulate->add_option("--snr-step", sa.snr_step, "sweep step, dB");
    simulate->add_option("--snr-stop", sa.snr_stop, "sweep stop, dB");
    simulate->add_option("--channel", sa.channel, "identity | rayleigh");
    simulate->add_option("--frames", sa.frames, "frames per grid point");
    simulate->add_option("--codec", sa.codec, "frame layout codec: amr | amr-wb");
    simulate->add_option("--mode", sa.mode, "codec mode number");
    simulate->add_option("--seed", sa.seed, "master seed");
    simulate->add_option("--out", sa.out, "output sweep CSV path")->required();
    simulate->add_option("--format", sa.format, "output format (csv)");

    FitArgs fa;
    CLI::App* fit = app.add_subcommand("fit", "fit power laws to a sweep CSV");
    fit->add_option("--in", fa.in, "input sweep CSV")->required();
    fit->add_option("--out", fa.out, "fit report JSON path")->required();
    fit->add_option("--table-out", fa.table_out,
                    "fitted coefficient table path (default <out>.table.json)");
    fit->add_option("--format", fa.format, "output format (json)");

    ValidateArgs va;
    CLI::App* validate = app.add_subcommand("validate", "measured-vs-predicted rating comparison");
    validate->add_option("--in", va.in, "input sweep CSV")->required();
    validate->add_option("--coeff-table", va.table_spec, "coefficient table path or 'builtin'");
    validate->add_option("--codec-registry", va.registry_path, "codec registry JSON path")
        ->required();
    validate->add_option("--codecs", va.codecs, "comma list of profiles (default: all)");
    validate->add_option("--out", va.out, "report JSON path (default stdout)");
    validate->add_option("--format", va.format, "output format (json)");

    ExportArgs ea;
    CLI::App* exp = app.add_subcommand("export-tables", "dump builtin tables as JSON");
    exp->add_option("--out", ea.out, "output directory");
    exp->add_option("--format", ea.format, "output format (json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (predict->parsed())
            return run_predict(pa);
        if (simulate->parsed())
            return run_simulate(sa);
        if (fit->parsed())
            return run_fit(fa);
        if (validate->parsed())
            return run_validate(va);
        if (exp->parsed())
            return run_export(ea);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
