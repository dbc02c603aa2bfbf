#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gauram/numerics.hpp"

namespace gauram::cli {

/// Reproducibility record emitted as the leading "#" comment of every CSV.
/// Identical manifests produce byte-identical files.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;  // sorted, stable order
    std::string spec_version;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> output_paths;

    // "command key=value ..." joined deterministically; output_paths are
    // identification metadata and stay out of it so retargeting a file does
    // not change the bytes inside it.
    std::string canonical() const;
    std::uint64_t hash() const;  // FNV-1a 64 over canonical()
    std::string comment_line() const;
};

/// Fixed-format number rendering: up to 12 significant digits, C locale.
std::string format_number(double value);

/// Parses "a:b:n" (inclusive endpoints, n points).
numerics::Grid parse_grid(const std::string& text);

struct OverlapOptions {
    double t0 = 1.8;
    std::optional<double> delta;
    std::optional<std::string> sweep_delta;  // "lo:hi:n"
    std::uint64_t seed = 1;
    std::size_t mc_samples = 100000;
    std::string out_path;  // recorded in the manifest when writing to a file
};

struct WaveformOptions {
    std::string form;  // gp | dgp | gr1 | gr2 | gr3 | grm | grsk
    double t0 = 1.8;
    double fc = 1.0;
    std::string grid = "-3:5:801";
    bool overlay_dgp = false;
    // grsk-specific
    double symbol_t = 0.0;
    double h = 0.5;
    double energy = 1.0;
    double kappa = 0.0;  // <= 0 selects the default normalization
    std::vector<int> bits;
    std::string out_path;  // recorded in the manifest when writing to a file
};

struct SpectrumOptions {
    std::string target;  // gr1 | gmsk | grsk | grm
    double t0 = 2.45;
    double bt = 0.3;
    double eta = 0.0;  // <= 0 derives eta from bt
    double fc = 4.0;
    std::string fgrid = "-2:2:801";
    bool compare_gmsk = false;
    std::optional<std::string> nulls_out;  // sidecar path for grsk
    std::string out_path;  // recorded in the manifest when writing to a file
};

struct HilbertOptions {
    double t0 = 2.45;
    std::string grid = "-3:6:901";
    std::string out_path;  // recorded in the manifest when writing to a file
};

struct WaveletOptions {
    double t0 = 1.0;
    bool compare_hermite = true;
    std::string taugrid = "-4:4:801";
    std::string out_path;  // recorded in the manifest when writing to a file
};

void write_overlap_csv(std::ostream& out, const OverlapOptions& options);
void write_waveform_csv(std::ostream& out, const WaveformOptions& options);
void write_spectrum_csv(std::ostream& out, const SpectrumOptions& options,
                        std::ostream* nulls_out = nullptr);
void write_hilbert_csv(std::ostream& out, const HilbertOptions& options);
void write_wavelet_csv(std::ostream& out, const WaveletOptions& options);
std::string wavelet_metrics_json(const WaveletOptions& options);

/// Entry point behind the executable. Exit codes: 0 success,
/// 1 validation failure, 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace gauram::cli
