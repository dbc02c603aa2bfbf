#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gauram/cli.hpp"
#include "gauram/pulse.hpp"

using namespace gauram;
using namespace gauram::cli;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

double cell(const std::string& line, int column) {
    std::istringstream in(line);
    std::string token;
    for (int i = 0; i <= column; ++i) std::getline(in, token, ',');
    return std::stod(token);
}

}  // namespace

TEST_CASE("manifest canonical form is deterministic and hashed") {
    RunManifest manifest;
    manifest.command = "overlap";
    manifest.parameters = {{"t0", "1.8"}, {"delta", "0.09"}};
    manifest.spec_version = "1.0.0";
    manifest.seed = 42;

    // std::map iteration sorts keys.
    CHECK(manifest.canonical() == "overlap delta=0.09 t0=1.8 seed=42 version=1.0.0");
    CHECK(manifest.hash() == RunManifest{manifest}.hash());
    CHECK(manifest.comment_line().rfind("# gauram overlap", 0) == 0);
    CHECK(manifest.comment_line().find("hash=") != std::string::npos);
}

TEST_CASE("number formatting is stable") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-1.25e-7) == "-1.25e-07");
}

TEST_CASE("grid parsing") {
    const numerics::Grid grid = parse_grid("-3:5:801");
    CHECK(grid.t_start == -3.0);
    CHECK(grid.t_end == 5.0);
    CHECK(grid.n_points == 801);
    CHECK_THROWS_AS(parse_grid("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("2:1:10"), std::domain_error);
}

TEST_CASE("overlap csv carries all columns and reruns byte-identically") {
    OverlapOptions options;
    options.t0 = 1.8;
    options.sweep_delta = "0.005:0.09:18";
    options.seed = 42;
    options.mc_samples = 1000;

    std::ostringstream first;
    write_overlap_csv(first, options);
    std::ostringstream second;
    write_overlap_csv(second, options);
    CHECK(first.str() == second.str());

    const auto lines = lines_of(first.str());
    REQUIRE(lines.size() == 20);  // manifest + header + 18 rows
    CHECK(lines[0].rfind("# gauram overlap", 0) == 0);
    CHECK(lines[1] == "delta,exact,approx,oracle,percent_error");
    CHECK(cell(lines[2], 0) == doctest::Approx(0.005));
    CHECK(cell(lines[19], 0) == doctest::Approx(0.09));

    // Exact column agrees with the closed form as delta -> 0.
    OverlapOptions tiny;
    tiny.t0 = 1.8;
    tiny.delta = 1e-6;
    tiny.mc_samples = 0;
    std::ostringstream tiny_out;
    write_overlap_csv(tiny_out, tiny);
    const auto tiny_lines = lines_of(tiny_out.str());
    CHECK(std::abs(cell(tiny_lines[2], 1) - pulse::overlap_closed_form(1.8)) <= 1e-6);

    OverlapOptions sigma6;
    sigma6.t0 = 2.4;
    sigma6.delta = 0.05;
    sigma6.mc_samples = 0;
    std::ostringstream sigma6_out;
    write_overlap_csv(sigma6_out, sigma6);
    CHECK(cell(lines_of(sigma6_out.str())[2], 1) < 1e-4);

    OverlapOptions bad;
    bad.t0 = 1.8;
    CHECK_THROWS_AS(write_overlap_csv(tiny_out, bad), std::invalid_argument);
}

TEST_CASE("waveform csv: first-order zero crossing at the midpoint") {
    WaveformOptions options;
    options.form = "gr1";
    options.t0 = 1.8;
    options.grid = "-3:5:801";

    std::ostringstream out;
    write_waveform_csv(out, options);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 803);
    CHECK(lines[1] == "t,value");

    // Sign change between adjacent samples bracketing t = 0.9.
    bool crossing = false;
    for (size_t i = 3; i < lines.size(); ++i) {
        const double t_prev = cell(lines[i - 1], 0);
        const double v_prev = cell(lines[i - 1], 1);
        const double v = cell(lines[i], 1);
        if (t_prev >= 0.85 && t_prev <= 0.95 && v_prev * v <= 0.0) crossing = true;
    }
    CHECK(crossing);
}

TEST_CASE("waveform csv: gp overlay has both traces with the requested separation") {
    WaveformOptions options;
    options.form = "gp";
    options.t0 = 2.4;
    options.overlay_dgp = true;
    options.grid = "-3:6:901";

    std::ostringstream out;
    write_waveform_csv(out, options);
    const auto lines = lines_of(out.str());
    CHECK(lines[1] == "t,value,dgp");

    double peak_t = 0.0, peak_v = 0.0, dpeak_t = 0.0, dpeak_v = 0.0;
    for (size_t i = 2; i < lines.size(); ++i) {
        if (cell(lines[i], 1) > peak_v) { peak_v = cell(lines[i], 1); peak_t = cell(lines[i], 0); }
        if (cell(lines[i], 2) > dpeak_v) { dpeak_v = cell(lines[i], 2); dpeak_t = cell(lines[i], 0); }
    }
    CHECK(dpeak_t - peak_t == doctest::Approx(2.4).epsilon(1e-9));
}

TEST_CASE("waveform csv: grm bounded by its envelope column") {
    WaveformOptions options;
    options.form = "grm";
    options.t0 = 1.8;
    options.fc = 4.0;
    options.grid = "-2:4:601";

    std::ostringstream out;
    write_waveform_csv(out, options);
    const auto lines = lines_of(out.str());
    CHECK(lines[1] == "t,value,i,q,envelope");
    for (size_t i = 2; i < lines.size(); ++i)
        CHECK(std::abs(cell(lines[i], 1)) <= cell(lines[i], 4) + 1e-12);
}

TEST_CASE("waveform csv: grsk needs its symbol parameters") {
    WaveformOptions options;
    options.form = "grsk";
    options.t0 = 0.5;
    std::ostringstream out;
    CHECK_THROWS_WITH_AS(write_waveform_csv(out, options),
                         "waveform: --symbol-t is required for form grsk",
                         std::invalid_argument);

    options.symbol_t = 1.0;
    CHECK_THROWS_WITH_AS(write_waveform_csv(out, options),
                         "waveform: --bits is required for form grsk",
                         std::invalid_argument);

    options.bits = {1, -1, 1, 1};
    options.fc = 4.0;
    std::ostringstream good;
    write_waveform_csv(good, options);
    const auto lines = lines_of(good.str());
    CHECK(lines[1] == "t,value");
    CHECK(lines.size() > 100);

    WaveformOptions unknown;
    unknown.form = "sinc";
    CHECK_THROWS_AS(write_waveform_csv(out, unknown), std::invalid_argument);
}

TEST_CASE("spectrum csv: gr1 magnitude null near 1/t0 and nan phase at f = 0") {
    SpectrumOptions options;
    options.target = "gr1";
    options.t0 = 1.8;
    options.fgrid = "-1:1:721";

    std::ostringstream out;
    write_spectrum_csv(out, options);
    const auto lines = lines_of(out.str());
    CHECK(lines[1] == "f,magnitude,phase,psd_db");

    double min_mag = 1e9;
    double min_f = 0.0;
    bool nan_phase_at_zero = false;
    for (size_t i = 2; i < lines.size(); ++i) {
        const double f = cell(lines[i], 0);
        const double mag = cell(lines[i], 1);
        if (f > 0.3 && mag < min_mag) { min_mag = mag; min_f = f; }
        if (f == 0.0) {
            std::istringstream in(lines[i]);
            std::string token;
            std::getline(in, token, ',');
            std::getline(in, token, ',');
            std::getline(in, token, ',');
            nan_phase_at_zero = (token == "nan");
        }
    }
    CHECK(min_f == doctest::Approx(1.0 / 1.8).epsilon(0.01));
    CHECK(nan_phase_at_zero);
}

TEST_CASE("spectrum csv: grsk psd clamps the first null and writes the sidecar") {
    SpectrumOptions options;
    options.target = "grsk";
    options.t0 = 2.45;
    options.bt = 0.3;
    options.eta = 1.0;
    // Land grid points exactly on m/t0: step 1/(4*2.45).
    options.fgrid = "-2:2:393";

    std::ostringstream out;
    std::ostringstream nulls;
    write_spectrum_csv(out, options, &nulls);

    const auto lines = lines_of(out.str());
    bool clamped = false;
    for (size_t i = 2; i < lines.size(); ++i)
        if (cell(lines[i], 3) <= -200.0 + 1e-9) clamped = true;
    CHECK(clamped);

    const auto null_lines = lines_of(nulls.str());
    REQUIRE(null_lines.size() >= 3);
    CHECK(null_lines[1] == "null_frequency");
    CHECK(cell(null_lines[2], 0) == doctest::Approx(1.0 / 2.45).epsilon(1e-9));
}

TEST_CASE("spectrum csv: gmsk psd decreases monotonically in |f|") {
    SpectrumOptions options;
    options.target = "gmsk";
    options.bt = 0.3;
    options.fgrid = "0:1.5:301";

    std::ostringstream out;
    write_spectrum_csv(out, options);
    const auto lines = lines_of(out.str());
    double prev = 1.0;
    for (size_t i = 2; i < lines.size(); ++i) {
        const double psd = cell(lines[i], 3);
        CHECK(psd <= prev + 1e-12);
        prev = psd;
    }

    SpectrumOptions unknown;
    unknown.target = "welch";
    CHECK_THROWS_AS(write_spectrum_csv(out, unknown), std::invalid_argument);
}

TEST_CASE("hilbert csv shares the waveform code path byte for byte") {
    HilbertOptions options;
    options.t0 = 2.45;
    options.grid = "-3:6:901";

    std::ostringstream out;
    write_hilbert_csv(out, options);
    const auto lines = lines_of(out.str());
    CHECK(lines[1] == "t,gr1,hilbert_gr1");

    // Footer carries the defect.
    const std::string& footer = lines.back();
    CHECK(footer.rfind("# orthogonality_defect = ", 0) == 0);
    const double defect = std::stod(footer.substr(footer.rfind('=') + 1));
    CHECK(std::abs(defect) <= 1e-8);

    WaveformOptions wf;
    wf.form = "gr1";
    wf.t0 = 2.45;
    wf.grid = "-3:6:901";
    std::ostringstream wf_out;
    write_waveform_csv(wf_out, wf);
    const auto wf_lines = lines_of(wf_out.str());

    // t and gr1 columns match the waveform command exactly, as strings.
    for (size_t i = 2; i < wf_lines.size(); ++i) {
        const std::string& h = lines[i];
        const std::string& w = wf_lines[i];
        const auto h_second_comma = h.find(',', h.find(',') + 1);
        CHECK(h.substr(0, h_second_comma) == w);
    }
}

TEST_CASE("wavelet csv and metrics json") {
    WaveletOptions options;
    options.t0 = 1.0;
    options.compare_hermite = true;
    options.taugrid = "-4:4:161";

    std::ostringstream out;
    write_wavelet_csv(out, options);
    const auto lines = lines_of(out.str());
    CHECK(lines[1] == "tau,autocorr_gr,autocorr_hermite");
    // Zero lag row: both exactly 1.
    for (size_t i = 2; i < lines.size(); ++i) {
        if (cell(lines[i], 0) == 0.0) {
            CHECK(cell(lines[i], 1) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(cell(lines[i], 2) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    const nlohmann::json metrics = nlohmann::json::parse(wavelet_metrics_json(options));
    CHECK(metrics.contains("spec_version"));
    CHECK(metrics["hermite"]["delta_t"].get<double>() ==
          doctest::Approx(std::sqrt(1.5)).epsilon(0.01));
    CHECK(metrics["gauram"]["reference"]["delta_t"].get<double>() == 0.720);
    CHECK(metrics["gauram"]["reference"]["delta_omega"].get<double>() == 1.055);
    CHECK(metrics["gauram"]["reference"]["product"].get<double>() == 0.760);
    CHECK(metrics["gauram"]["deviation_percent"].contains("product"));
}
