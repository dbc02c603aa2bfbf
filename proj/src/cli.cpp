#include "gauram/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gauram/hilbert.hpp"
#include "gauram/modulation.hpp"
#include "gauram/pulse.hpp"
#include "gauram/spectral.hpp"
#include "gauram/validate.hpp"
#include "gauram/version.hpp"
#include "gauram/wavelet.hpp"

namespace gauram::cli {

namespace {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

RunManifest make_manifest(std::string command,
                          std::map<std::string, std::string> parameters,
                          std::optional<std::uint64_t> seed = std::nullopt,
                          std::vector<std::string> output_paths = {}) {
    RunManifest manifest;
    manifest.command = std::move(command);
    manifest.parameters = std::move(parameters);
    manifest.spec_version = kVersion;
    manifest.seed = seed;
    manifest.output_paths = std::move(output_paths);
    return manifest;
}

std::vector<std::string> paths_of(const std::string& out_path) {
    if (out_path.empty()) return {};
    return {out_path};
}

}  // namespace

std::string RunManifest::canonical() const {
    std::ostringstream out;
    out << command;
    for (const auto& [key, value] : parameters) out << ' ' << key << '=' << value;
    if (seed) out << " seed=" << *seed;
    out << " version=" << spec_version;
    return out.str();
}

std::uint64_t RunManifest::hash() const { return fnv1a64(canonical()); }

std::string RunManifest::comment_line() const {
    return "# gauram " + canonical() + " hash=" + hex64(hash());
}

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

numerics::Grid parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("grid must be a:b:n");
    try {
        const double a = std::stod(text.substr(0, first));
        const double b = std::stod(text.substr(first + 1, second - first - 1));
        const int n = std::stoi(text.substr(second + 1));
        return numerics::Grid(a, b, n);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must be a:b:n with numeric fields");
    }
}

void write_overlap_csv(std::ostream& out, const OverlapOptions& options) {
    if (options.t0 <= 0.0) throw std::domain_error("overlap: t0 must be positive");

    std::vector<double> deltas;
    std::map<std::string, std::string> params{{"t0", format_number(options.t0)}};
    if (options.sweep_delta) {
        const numerics::Grid grid = parse_grid(*options.sweep_delta);
        deltas = grid.points();
        params["sweep-delta"] = *options.sweep_delta;
    } else if (options.delta) {
        deltas.push_back(*options.delta);
        params["delta"] = format_number(*options.delta);
    } else {
        throw std::invalid_argument("overlap: provide --delta or --sweep-delta");
    }

    out << make_manifest("overlap", params, options.seed, paths_of(options.out_path))
               .comment_line()
        << '\n';
    write_row(out, {"delta", "exact", "approx", "oracle", "percent_error"});
    for (double delta : deltas) {
        const pulse::OverlapReport report =
            pulse::overlap_report(options.t0, delta, options.seed, options.mc_samples);
        write_row(out, {format_number(delta), format_number(report.exact),
                        format_number(report.approx), format_number(report.oracle),
                        format_number(report.percent_error_approx_vs_exact)});
    }
}

void write_waveform_csv(std::ostream& out, const WaveformOptions& options) {
    const numerics::Grid grid = parse_grid(options.grid);

    std::map<std::string, std::string> params{
        {"form", options.form}, {"t0", format_number(options.t0)}, {"grid", options.grid}};

    if (options.form == "gp" || options.form == "dgp" || options.form == "gr1" ||
        options.form == "gr2" || options.form == "gr3") {
        pulse::GauRamSpec spec;
        if (options.form == "gp")
            spec = pulse::zeroth_order();
        else if (options.form == "dgp")
            spec = pulse::GauRamSpec{{1.0}, {options.t0}, options.t0, 1.0,
                                     pulse::GauRamOrder::zeroth, false};
        else if (options.form == "gr1")
            spec = pulse::first_order(options.t0);
        else if (options.form == "gr2")
            spec = pulse::second_order(options.t0);
        else
            spec = pulse::third_order(options.t0);

        if (options.overlay_dgp) params["overlay-dgp"] = "1";
        out << make_manifest("waveform", params, std::nullopt, paths_of(options.out_path))
                   .comment_line()
            << '\n';
        if (options.overlay_dgp && options.form == "gp") {
            write_row(out, {"t", "value", "dgp"});
            for (double t : grid.points())
                write_row(out, {format_number(t), format_number(pulse::eval(spec, t)),
                                format_number(pulse::dgp(t, options.t0))});
        } else {
            write_row(out, {"t", "value"});
            for (double t : grid.points())
                write_row(out, {format_number(t), format_number(pulse::eval(spec, t))});
        }
        return;
    }

    if (options.form == "grm") {
        params["fc"] = format_number(options.fc);
        modulation::GrmParams grm;
        grm.fc = options.fc;
        grm.t0 = options.t0;
        grm.ts = 1.0;
        out << make_manifest("waveform", params, std::nullopt, paths_of(options.out_path))
                   .comment_line()
            << '\n';
        write_row(out, {"t", "value", "i", "q", "envelope"});
        for (double t : grid.points()) {
            const modulation::IQSample iq = modulation::grm_iq(t, options.t0);
            write_row(out, {format_number(t), format_number(modulation::grm_waveform(t, grm)),
                            format_number(iq.i), format_number(iq.q),
                            format_number(std::hypot(iq.i, iq.q))});
        }
        return;
    }

    if (options.form == "grsk") {
        if (options.symbol_t <= 0.0)
            throw std::invalid_argument("waveform: --symbol-t is required for form grsk");
        if (options.bits.empty())
            throw std::invalid_argument("waveform: --bits is required for form grsk");
        const modulation::CpmConfig config =
            modulation::make_cpm_config(options.fc, options.symbol_t, options.h,
                                        options.energy, options.t0, options.bits,
                                        options.kappa);
        params["fc"] = format_number(options.fc);
        params["symbol-t"] = format_number(options.symbol_t);
        params["h"] = format_number(options.h);
        params["energy"] = format_number(options.energy);
        params["kappa"] = format_number(config.kappa);
        std::string bit_list;
        for (int b : config.bits) bit_list += (b > 0 ? "+1" : "-1"), bit_list += ';';
        bit_list.pop_back();
        params["bits"] = bit_list;

        out << make_manifest("waveform", params, std::nullopt, paths_of(options.out_path))
                   .comment_line()
            << '\n';
        write_row(out, {"t", "value"});
        for (double t : grid.points())
            write_row(out,
                      {format_number(t), format_number(modulation::grsk_waveform(t, config))});
        return;
    }

    throw std::invalid_argument("waveform: unknown --form " + options.form);
}

void write_spectrum_csv(std::ostream& out, const SpectrumOptions& options,
                        std::ostream* nulls_out) {
    const numerics::Grid fgrid = parse_grid(options.fgrid);
    const std::vector<double> freqs = fgrid.points();

    std::map<std::string, std::string> params{
        {"target", options.target}, {"fgrid", options.fgrid}};

    std::vector<spectral::SpectrumPoint> sweep(freqs.size());
    std::vector<bool> phase_defined(freqs.size(), true);

    if (options.target == "gr1") {
        params["t0"] = format_number(options.t0);
        for (size_t i = 0; i < freqs.size(); ++i) {
            sweep[i].f = freqs[i];
            sweep[i].value = spectral::gr1_spectrum(freqs[i], options.t0);
            sweep[i].magnitude = spectral::gr1_magnitude(freqs[i], options.t0);
            try {
                sweep[i].phase = spectral::gr1_phase(freqs[i], options.t0);
            } catch (const std::domain_error&) {
                phase_defined[i] = false;
            }
        }
    } else if (options.target == "gmsk") {
        const double rho = spectral::gmsk_rho_from_bt(options.bt);
        params["bt"] = format_number(options.bt);
        params["rho"] = format_number(rho);
        for (size_t i = 0; i < freqs.size(); ++i) {
            sweep[i].f = freqs[i];
            sweep[i].value = spectral::gmsk_spectrum(freqs[i], rho);
            sweep[i].magnitude = std::abs(sweep[i].value);
            sweep[i].phase = 0.0;
        }
    } else if (options.target == "grsk") {
        const double eta =
            options.eta > 0.0 ? options.eta : spectral::gmsk_rho_from_bt(options.bt);
        params["t0"] = format_number(options.t0);
        params["bt"] = format_number(options.bt);
        params["eta"] = format_number(eta);
        for (size_t i = 0; i < freqs.size(); ++i) {
            sweep[i].f = freqs[i];
            sweep[i].value = spectral::grsk_spectrum(freqs[i], eta, options.t0);
            sweep[i].magnitude = std::abs(sweep[i].value);
            sweep[i].phase = std::arg(sweep[i].value);
        }
    } else if (options.target == "grm") {
        params["t0"] = format_number(options.t0);
        params["fc"] = format_number(options.fc);
        modulation::GrmParams grm;
        grm.fc = options.fc;
        grm.t0 = options.t0;
        for (size_t i = 0; i < freqs.size(); ++i) {
            sweep[i].f = freqs[i];
            sweep[i].value = modulation::grm_spectrum(freqs[i], grm);
            sweep[i].magnitude = std::abs(sweep[i].value);
            sweep[i].phase = std::arg(sweep[i].value);
        }
    } else {
        throw std::invalid_argument("spectrum: unknown --target " + options.target);
    }

    sweep = spectral::normalized_psd(sweep);

    std::vector<double> gmsk_reference;
    if (options.compare_gmsk) {
        params["compare-gmsk"] = "1";
        const double rho = spectral::gmsk_rho_from_bt(options.bt);
        std::vector<spectral::SpectrumPoint> gmsk_sweep(freqs.size());
        for (size_t i = 0; i < freqs.size(); ++i) {
            gmsk_sweep[i].f = freqs[i];
            gmsk_sweep[i].value = spectral::gmsk_spectrum(freqs[i], rho);
            gmsk_sweep[i].magnitude = std::abs(gmsk_sweep[i].value);
        }
        gmsk_sweep = spectral::normalized_psd(gmsk_sweep);
        for (const auto& p : gmsk_sweep) gmsk_reference.push_back(p.psd_db);
    }

    std::vector<std::string> emitted = paths_of(options.out_path);
    if (options.nulls_out) emitted.push_back(*options.nulls_out);
    const RunManifest manifest = make_manifest("spectrum", params, std::nullopt, emitted);
    out << manifest.comment_line() << '\n';
    std::vector<std::string> header{"f", "magnitude", "phase", "psd_db"};
    if (options.compare_gmsk) header.push_back("gmsk_psd_db");
    write_row(out, header);
    for (size_t i = 0; i < sweep.size(); ++i) {
        std::vector<std::string> row{
            format_number(sweep[i].f), format_number(sweep[i].magnitude),
            phase_defined[i] ? format_number(sweep[i].phase) : "nan",
            format_number(sweep[i].psd_db)};
        if (options.compare_gmsk) row.push_back(format_number(gmsk_reference[i]));
        write_row(out, row);
    }

    if (options.target == "grsk" && nulls_out) {
        *nulls_out << manifest.comment_line() << '\n';
        write_row(*nulls_out, {"null_frequency"});
        const double f_max = std::max(std::abs(fgrid.t_start), std::abs(fgrid.t_end));
        for (double f : spectral::null_frequencies(options.t0, f_max))
            write_row(*nulls_out, {format_number(f)});
    }
}

void write_hilbert_csv(std::ostream& out, const HilbertOptions& options) {
    if (options.t0 <= 0.0) throw std::domain_error("hilbert: t0 must be positive");
    const numerics::Grid grid = parse_grid(options.grid);
    const pulse::GauRamSpec spec = pulse::first_order(options.t0);

    std::map<std::string, std::string> params{{"t0", format_number(options.t0)},
                                              {"grid", options.grid}};
    out << make_manifest("hilbert", params, std::nullopt, paths_of(options.out_path))
               .comment_line()
        << '\n';
    write_row(out, {"t", "gr1", "hilbert_gr1"});
    for (double t : grid.points())
        write_row(out, {format_number(t), format_number(pulse::eval(spec, t)),
                        format_number(hilbert::hilbert_gr1(t, options.t0))});
    out << "# orthogonality_defect = "
        << format_number(hilbert::ht_orthogonality_defect(options.t0)) << '\n';
}

void write_wavelet_csv(std::ostream& out, const WaveletOptions& options) {
    if (options.t0 <= 0.0) throw std::domain_error("wavelet: t0 must be positive");
    const numerics::Grid grid = parse_grid(options.taugrid);

    std::map<std::string, std::string> params{{"t0", format_number(options.t0)},
                                              {"taugrid", options.taugrid}};
    if (options.compare_hermite) params["compare-hermite"] = "1";
    out << make_manifest("wavelet", params, std::nullopt, paths_of(options.out_path))
               .comment_line()
        << '\n';

    if (options.compare_hermite) {
        write_row(out, {"tau", "autocorr_gr", "autocorr_hermite"});
        for (double tau : grid.points())
            write_row(out, {format_number(tau),
                            format_number(wavelet::autocorr_gr(tau, options.t0)),
                            format_number(wavelet::autocorr_hermite(tau))});
    } else {
        write_row(out, {"tau", "autocorr_gr"});
        for (double tau : grid.points())
            write_row(out, {format_number(tau),
                            format_number(wavelet::autocorr_gr(tau, options.t0))});
    }
}

std::string wavelet_metrics_json(const WaveletOptions& options) {
    using nlohmann::ordered_json;

    const auto metrics_to_json = [](const wavelet::WaveletMetrics& m) {
        ordered_json j;
        j["delta_t"] = m.delta_t;
        j["delta_t_centered"] = m.delta_t_centered;
        j["delta_omega"] = m.delta_omega;
        j["product"] = m.product;
        j["energy"] = m.energy;
        j["mean_value"] = m.mean_value;
        return j;
    };

    // Published localization table for t0 = 1, kept for side-by-side reading.
    const double ref_h_dt = std::sqrt(1.5);
    const double ref_h_dw = std::sqrt(0.5);
    const double ref_gr_dt = 0.720;
    const double ref_gr_dw = 1.055;

    ordered_json j;
    j["spec_version"] = kVersion;
    j["t0"] = options.t0;

    const wavelet::WaveletMetrics gr = wavelet::tf_metrics(wavelet::WaveletKind::gauram,
                                                           options.t0);
    j["gauram"] = metrics_to_json(gr);
    j["gauram"]["reference"] = {{"delta_t", ref_gr_dt},
                                {"delta_omega", ref_gr_dw},
                                {"product", 0.760}};
    j["gauram"]["deviation_percent"] = {
        {"delta_t", 100.0 * std::abs(gr.delta_t - ref_gr_dt) / ref_gr_dt},
        {"delta_omega", 100.0 * std::abs(gr.delta_omega - ref_gr_dw) / ref_gr_dw},
        {"product", 100.0 * std::abs(gr.product - 0.760) / 0.760}};

    if (options.compare_hermite) {
        const wavelet::WaveletMetrics h = wavelet::tf_metrics(wavelet::WaveletKind::hermite);
        j["hermite"] = metrics_to_json(h);
        j["hermite"]["reference"] = {{"delta_t", ref_h_dt},
                                     {"delta_omega", ref_h_dw},
                                     {"product", 0.866}};
        j["hermite"]["deviation_percent"] = {
            {"delta_t", 100.0 * std::abs(h.delta_t - ref_h_dt) / ref_h_dt},
            {"delta_omega", 100.0 * std::abs(h.delta_omega - ref_h_dw) / ref_h_dw},
            {"product", 100.0 * std::abs(h.product - 0.866) / 0.866}};
    }
    return j.dump(2) + "\n";
}

namespace {

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = nullptr;

    static OutputTarget open(const std::string& path) {
        OutputTarget target;
        if (path.empty()) {
            target.stream = &std::cout;
        } else {
            target.file.open(path, std::ios::binary);
            if (!target.file) throw std::runtime_error("cannot open output file: " + path);
            target.stream = &target.file;
        }
        return target;
    }
};

std::vector<int> parse_bits(const std::string& text) {
    std::vector<int> bits;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        if (token == "+1" || token == "1")
            bits.push_back(1);
        else if (token == "-1")
            bits.push_back(-1);
        else
            throw std::invalid_argument("bits must be a comma list of +1/-1");
    }
    return bits;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Gauss-Ramanujan function family: pulses, spectra, modulation, wavelets"};
    app.require_subcommand(1);

    OverlapOptions overlap;
    double overlap_delta = -1.0;
    std::string overlap_sweep;
    std::string overlap_out;
    auto* overlap_cmd = app.add_subcommand("overlap", "Mean-overlap analysis as CSV");
    overlap_cmd->add_option("--t0", overlap.t0, "Pulse delay");
    overlap_cmd->add_option("--delta", overlap_delta, "Single delay offset");
    overlap_cmd->add_option("--sweep-delta", overlap_sweep, "Offset sweep lo:hi:n");
    overlap_cmd->add_option("--seed", overlap.seed, "Monte-Carlo seed")
        ->envname("GAURAM_SEED");
    overlap_cmd->add_option("--mc-samples", overlap.mc_samples, "Monte-Carlo sample count");
    overlap_cmd->add_option("--out", overlap_out, "Output file (default stdout)");

    WaveformOptions waveform;
    std::string waveform_bits;
    std::string waveform_out;
    auto* waveform_cmd = app.add_subcommand("waveform", "Time-domain traces as CSV");
    waveform_cmd->add_option("--form", waveform.form, "gp|dgp|gr1|gr2|gr3|grm|grsk")
        ->required();
    waveform_cmd->add_option("--t0", waveform.t0, "Pulse delay");
    waveform_cmd->add_option("--fc", waveform.fc, "Carrier frequency");
    waveform_cmd->add_option("--grid", waveform.grid, "Time grid a:b:n");
    waveform_cmd->add_flag("--overlay-dgp", waveform.overlay_dgp,
                           "Add a delayed-pulse column (form gp)");
    waveform_cmd->add_option("--symbol-t", waveform.symbol_t, "Symbol duration (grsk)");
    waveform_cmd->add_option("--mod-index", waveform.h, "Modulation index (grsk)");
    waveform_cmd->add_option("--energy", waveform.energy, "Symbol energy (grsk)");
    waveform_cmd->add_option("--kappa", waveform.kappa,
                             "Pulse normalization; <=0 selects the default (grsk)");
    waveform_cmd->add_option("--bits", waveform_bits, "Comma list of +1/-1 (grsk)");
    waveform_cmd->add_option("--out", waveform_out, "Output file (default stdout)");

    SpectrumOptions spectrum;
    std::string spectrum_out;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Frequency-domain sweeps as CSV");
    spectrum_cmd->add_option("--target", spectrum.target, "gr1|gmsk|grsk|grm")->required();
    spectrum_cmd->add_option("--t0", spectrum.t0, "Pulse delay");
    spectrum_cmd->add_option("--bt", spectrum.bt, "Bandwidth-time product");
    spectrum_cmd->add_option("--eta", spectrum.eta, "Width override (grsk)");
    spectrum_cmd->add_option("--fc", spectrum.fc, "Carrier frequency (grm)");
    spectrum_cmd->add_option("--fgrid", spectrum.fgrid, "Frequency grid a:b:n");
    spectrum_cmd->add_flag("--compare-gmsk", spectrum.compare_gmsk,
                           "Add a gmsk_psd_db column");
    spectrum_cmd->add_option("--out", spectrum_out, "Output file (default stdout)");

    HilbertOptions hilbert_options;
    std::string hilbert_out;
    auto* hilbert_cmd =
        app.add_subcommand("hilbert", "First-order pulse and its transform as CSV");
    hilbert_cmd->add_option("--t0", hilbert_options.t0, "Pulse delay");
    hilbert_cmd->add_option("--grid", hilbert_options.grid, "Time grid a:b:n");
    hilbert_cmd->add_option("--out", hilbert_out, "Output file (default stdout)");

    WaveletOptions wavelet_options;
    wavelet_options.compare_hermite = false;
    std::string wavelet_out;
    std::string wavelet_json_out;
    auto* wavelet_cmd =
        app.add_subcommand("wavelet", "Autocorrelation traces and localization metrics");
    wavelet_cmd->add_option("--t0", wavelet_options.t0, "Wavelet delay");
    wavelet_cmd->add_flag("--compare-hermite", wavelet_options.compare_hermite,
                          "Add the Hermite trace and metrics");
    wavelet_cmd->add_option("--taugrid", wavelet_options.taugrid, "Lag grid a:b:n");
    wavelet_cmd->add_option("--out", wavelet_out, "CSV output file (default stdout)");
    wavelet_cmd->add_option("--metrics-out", wavelet_json_out,
                            "JSON metrics file (default stdout)");

    std::string validate_suite = "all";
    std::string validate_out;
    auto* validate_cmd = app.add_subcommand("validate", "Run the validation checks");
    validate_cmd
        ->add_option("--suite", validate_suite,
                     "all|specfun|overlap|ramanujan|spectral|hilbert|modulation|wavelet")
        ->check(CLI::IsMember({"all", "specfun", "overlap", "ramanujan", "spectral",
                               "hilbert", "modulation", "wavelet"}));
    validate_cmd->add_option("--out", validate_out, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (overlap_cmd->parsed()) {
            if (overlap_delta > 0.0) overlap.delta = overlap_delta;
            if (!overlap_sweep.empty()) overlap.sweep_delta = overlap_sweep;
            overlap.out_path = overlap_out;
            OutputTarget target = OutputTarget::open(overlap_out);
            write_overlap_csv(*target.stream, overlap);
        } else if (waveform_cmd->parsed()) {
            if (!waveform_bits.empty()) waveform.bits = parse_bits(waveform_bits);
            waveform.out_path = waveform_out;
            OutputTarget target = OutputTarget::open(waveform_out);
            write_waveform_csv(*target.stream, waveform);
        } else if (spectrum_cmd->parsed()) {
            spectrum.out_path = spectrum_out;
            if (spectrum.target == "grsk" && !spectrum_out.empty())
                spectrum.nulls_out = spectrum_out + ".nulls.csv";
            OutputTarget target = OutputTarget::open(spectrum_out);
            if (spectrum.target == "grsk") {
                if (spectrum.nulls_out) {
                    std::ofstream nulls(*spectrum.nulls_out, std::ios::binary);
                    if (!nulls)
                        throw std::runtime_error("cannot open output file: " +
                                                 *spectrum.nulls_out);
                    write_spectrum_csv(*target.stream, spectrum, &nulls);
                } else {
                    write_spectrum_csv(*target.stream, spectrum, target.stream);
                }
            } else {
                write_spectrum_csv(*target.stream, spectrum);
            }
        } else if (hilbert_cmd->parsed()) {
            hilbert_options.out_path = hilbert_out;
            OutputTarget target = OutputTarget::open(hilbert_out);
            write_hilbert_csv(*target.stream, hilbert_options);
        } else if (wavelet_cmd->parsed()) {
            wavelet_options.out_path = wavelet_out;
            OutputTarget target = OutputTarget::open(wavelet_out);
            write_wavelet_csv(*target.stream, wavelet_options);
            const std::string json = wavelet_metrics_json(wavelet_options);
            if (wavelet_json_out.empty()) {
                std::cout << json;
            } else {
                std::ofstream json_file(wavelet_json_out, std::ios::binary);
                if (!json_file)
                    throw std::runtime_error("cannot open output file: " + wavelet_json_out);
                json_file << json;
            }
        } else if (validate_cmd->parsed()) {
            const std::vector<validate::CheckResult> results =
                validate::run_suite(validate_suite);
            for (const auto& r : results) {
                const char* status = r.hard ? (r.passed ? "PASS" : "FAIL") : "INFO";
                std::cout << status << " [" << r.suite << "] " << r.name;
                if (!r.detail.empty()) std::cout << ": " << r.detail;
                std::cout << '\n';
            }
            const std::string report = validate::report_json(results);
            if (!validate_out.empty()) {
                std::ofstream report_file(validate_out, std::ios::binary);
                if (!report_file)
                    throw std::runtime_error("cannot open output file: " + validate_out);
                report_file << report;
            }
            const bool ok = validate::all_hard_passed(results);
            std::cout << (ok ? "validation: all hard checks passed"
                             : "validation: hard check failures present")
                      << '\n';
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace gauram::cli
