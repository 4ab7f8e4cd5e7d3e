#include <charconv>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noma/config_file.hpp"
#include "noma/constellation.hpp"
#include "noma/csv.hpp"
#include "noma/montecarlo.hpp"
#include "noma/presets.hpp"
#include "noma/superposition.hpp"
#include "noma/svg_plot.hpp"
#include "noma/validation.hpp"

namespace {

std::string num(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
    return std::string(buf, res.ptr);
}

double parse_one_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("bad " + what + " value '" + text + "'");
    return v;
}

std::uint64_t parse_one_u64(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("bad " + what + " value '" + text + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
    std::vector<double> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string field = comma == std::string::npos
                                      ? text.substr(start)
                                      : text.substr(start, comma - start);
        out.push_back(parse_one_double(field, what));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

// Either "lo:step:hi" or a comma-separated list.
std::vector<double> parse_snr_grid(const std::string& text) {
    if (text.find(':') == std::string::npos)
        return parse_double_list(text, "snr");
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw std::invalid_argument("snr range must be lo:step:hi");
    const double lo = parse_one_double(text.substr(0, c1), "snr");
    const double step = parse_one_double(text.substr(c1 + 1, c2 - c1 - 1), "snr");
    const double hi = parse_one_double(text.substr(c2 + 1), "snr");
    if (!(step > 0.0)) throw std::invalid_argument("snr step must be positive");
    std::vector<double> grid;
    for (double s = lo; s <= hi + step / 2; s += step) grid.push_back(s);
    return grid;
}

std::uint64_t resolve_seed(const std::string& text) {
    if (!text.empty()) return parse_one_u64(text, "seed");
    if (const char* env = std::getenv("NOMA_LAB_SEED"))
        return parse_one_u64(env, "NOMA_LAB_SEED");
    return 1;
}

struct SweepArgs {
    std::string preset;
    std::string constellation;
    std::string gammas;
    std::string alphas;
    std::string snrs;
    std::string detector;
    std::string seed;
    std::string target_errors;
    std::string max_symbols;
    std::string workers;
    std::string out;
    std::string svg;
    std::string config;
};

const std::set<std::string> kSweepConfigKeys = {
    "preset",        "constellation", "gammas",  "alphas",
    "snrs",          "detector",      "seed",    "target-errors",
    "max-symbols",   "workers",       "out",     "svg"};

// Command line wins over the config file, which wins over defaults.
void apply_config(SweepArgs& args, const CLI::App& cmd) {
    if (args.config.empty()) return;
    const auto values = noma::load_config_file(args.config);
    for (const auto& [key, value] : values) {
        if (!kSweepConfigKeys.count(key))
            throw std::invalid_argument("unknown config key '" + key + "'");
        std::string* slot = nullptr;
        if (key == "preset") slot = &args.preset;
        else if (key == "constellation") slot = &args.constellation;
        else if (key == "gammas") slot = &args.gammas;
        else if (key == "alphas") slot = &args.alphas;
        else if (key == "snrs") slot = &args.snrs;
        else if (key == "detector") slot = &args.detector;
        else if (key == "seed") slot = &args.seed;
        else if (key == "target-errors") slot = &args.target_errors;
        else if (key == "max-symbols") slot = &args.max_symbols;
        else if (key == "workers") slot = &args.workers;
        else if (key == "out") slot = &args.out;
        else if (key == "svg") slot = &args.svg;
        if (slot && cmd.count("--" + key) == 0) *slot = value;
    }
}

int cmd_sweep(SweepArgs& args, const CLI::App& cmd) {
    apply_config(args, cmd);

    noma::SweepConfig cfg;
    if (!args.preset.empty()) {
        const noma::ScenarioPreset* p = noma::find_preset(args.preset);
        if (!p) throw std::invalid_argument("unknown preset '" + args.preset + "'");
        cfg = noma::preset_config(*p, 1);
    } else {
        if (args.gammas.empty() || args.alphas.empty() || args.snrs.empty())
            throw std::invalid_argument(
                "custom sweeps need --gammas, --alphas and --snrs (or --preset)");
        cfg.constellation_name = args.constellation.empty() ? "qpsk" : args.constellation;
    }
    if (!args.constellation.empty()) cfg.constellation_name = args.constellation;
    if (!args.gammas.empty()) cfg.gammas = parse_double_list(args.gammas, "gamma");
    if (!args.alphas.empty()) cfg.alphas = parse_double_list(args.alphas, "alpha");
    if (!args.snrs.empty()) cfg.snr_db_grid = parse_snr_grid(args.snrs);
    if (!args.detector.empty()) cfg.detector = noma::parse_detector(args.detector);
    if (!args.target_errors.empty())
        cfg.target_bit_errors = parse_one_u64(args.target_errors, "target-errors");
    if (!args.max_symbols.empty())
        cfg.max_symbols = parse_one_u64(args.max_symbols, "max-symbols");
    cfg.master_seed = resolve_seed(args.seed);

    int workers = 1;
    if (!args.workers.empty()) {
        const std::uint64_t w = parse_one_u64(args.workers, "workers");
        if (w < 1 || w > 64)
            throw std::invalid_argument("workers must be between 1 and 64");
        workers = static_cast<int>(w);
    }
    if (args.out.empty())
        throw std::invalid_argument("sweep needs --out for the CSV path");

    cfg.validate();
    const auto curves = noma::run_sweep(cfg, workers);
    noma::write_ber_csv(args.out, cfg.constellation_name, curves);
    std::size_t rows = 0;
    for (const auto& c : curves) rows += c.points.size();
    std::cout << "wrote " << rows << " rows to " << args.out << "\n";

    if (!args.svg.empty()) {
        const std::string title =
            args.preset.empty() ? cfg.constellation_name + " BER vs SNR"
                                : args.preset + ": " + cfg.constellation_name +
                                      " gamma=" + num(cfg.gammas[0]);
        noma::render_svg_from_csv(args.out, args.svg, title);
        std::cout << "wrote plot to " << args.svg << "\n";
    }
    return 0;
}

int cmd_analyze() {
    bool all_ok = true;
    for (const std::string name : {"qpsk", "16qam"}) {
        const noma::Constellation raw =
            noma::make_constellation(name, noma::Scale::raw);
        const double opt = noma::optimal_alpha(raw);
        const bool is_qpsk = name == "qpsk";
        const auto analytic = [&](double a) {
            return is_qpsk ? noma::dmin_qpsk(a) : noma::dmin_16qam(a);
        };
        double worst = 0.0;
        for (int k = 50; k <= 99; ++k) {
            const double a = static_cast<double>(k) / 100.0;
            worst = std::max(worst,
                             std::abs(analytic(a) - noma::dmin_general(raw, a)));
        }
        const bool ok = worst <= 1e-9;
        all_ok = all_ok && ok;
        std::cout << "constellation " << name << "\n";
        std::cout << "  optimal alpha: " << num(opt) << "\n";
        std::cout << "  composite min distance at optimum: " << num(analytic(opt))
                  << "\n";
        std::cout << "  closed form vs enumeration, alpha 0.50..0.99 step 0.01: "
                  << "max |diff| = " << num(worst) << " (tol 1e-09) "
                  << (ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? 0 : 2;
}

int cmd_validate(const std::string& seed_text, std::uint64_t samples) {
    const std::uint64_t seed = resolve_seed(seed_text);
    const auto results = noma::run_validation_suite(seed, samples);
    bool all_ok = true;
    for (const noma::CheckResult& r : results) {
        all_ok = all_ok && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": "
                  << r.detail << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-level simulator for 2-user power-domain NOMA downlink"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "run a BER-vs-SNR Monte Carlo sweep and write CSV");
    sweep->add_option("--preset", sweep_args.preset,
                      "built-in scenario (fig2..fig7)");
    sweep->add_option("--constellation", sweep_args.constellation,
                      "qpsk or 16qam");
    sweep->add_option("--gammas", sweep_args.gammas,
                      "comma-separated correlation values");
    sweep->add_option("--alphas", sweep_args.alphas,
                      "comma-separated power splits in [0.5, 1)");
    sweep->add_option("--snrs", sweep_args.snrs,
                      "SNR grid, lo:step:hi or comma-separated dB values");
    sweep->add_option("--detector", sweep_args.detector, "ml or sic");
    sweep->add_option("--seed", sweep_args.seed,
                      "master seed (default: NOMA_LAB_SEED or 1)");
    sweep->add_option("--target-errors", sweep_args.target_errors,
                      "stop a point once both users hit this many bit errors");
    sweep->add_option("--max-symbols", sweep_args.max_symbols,
                      "hard per-point symbol cap");
    sweep->add_option("--workers", sweep_args.workers,
                      "worker threads (never changes results)");
    sweep->add_option("--out", sweep_args.out, "output CSV path");
    sweep->add_option("--svg", sweep_args.svg, "also render an SVG plot");
    sweep->add_option("--config", sweep_args.config,
                      "key = value file; command-line flags win");

    CLI::App* analyze = app.add_subcommand(
        "analyze", "report optimal power splits and check the closed forms");

    std::string validate_seed;
    std::uint64_t validate_samples = 1'000'000;
    CLI::App* validate = app.add_subcommand(
        "validate", "statistical checks of the channel and the engine");
    validate->add_option("--seed", validate_seed,
                         "master seed (default: NOMA_LAB_SEED or 1)");
    validate->add_option("--samples", validate_samples,
                         "channel draws per correlation value");

    std::string plot_csv, plot_svg, plot_title;
    CLI::App* plot =
        app.add_subcommand("plot", "render an SVG plot from a sweep CSV");
    plot->add_option("--csv", plot_csv, "input CSV path")->required();
    plot->add_option("--svg", plot_svg, "output SVG path")->required();
    plot->add_option("--title", plot_title, "plot heading");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_args, *sweep);
        if (analyze->parsed()) return cmd_analyze();
        if (validate->parsed()) return cmd_validate(validate_seed, validate_samples);
        if (plot->parsed()) {
            noma::render_svg_from_csv(plot_csv, plot_svg, plot_title);
            std::cout << "wrote plot to " << plot_svg << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
