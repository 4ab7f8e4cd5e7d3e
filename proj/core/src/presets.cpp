#include "noma/presets.hpp"

namespace noma {

namespace {

std::vector<double> snr_range(double lo, double hi, double step) {
    std::vector<double> grid;
    for (double s = lo; s <= hi + step / 2; s += step) grid.push_back(s);
    return grid;
}

std::vector<ScenarioPreset> build_presets() {
    const std::vector<double> qpsk_alphas = {0.5, 0.65, 0.7, 0.8, 0.9, 0.95};
    const std::vector<double> qam_alphas = {0.5, 0.9, 16.0 / 17.0, 0.99};
    const std::vector<double> qpsk_snr = snr_range(0, 40, 2);
    const std::vector<double> qam_snr = snr_range(0, 50, 2);
    // Caps chosen so the deep-waterfall tail of the best curve still collects
    // enough errors to rank curves, without letting dead points dominate the
    // run time.
    const std::uint64_t qpsk_cap = 5'000'000;
    const std::uint64_t qam_cap = 2'000'000;

    std::vector<ScenarioPreset> presets;
    presets.push_back({"fig2", "qpsk", 1.0, qpsk_alphas, qpsk_snr, Detector::ml, qpsk_cap});
    presets.push_back({"fig3", "qpsk", 0.9, qpsk_alphas, qpsk_snr, Detector::ml, qpsk_cap});
    presets.push_back({"fig4", "qpsk", 0.5, qpsk_alphas, qpsk_snr, Detector::ml, qpsk_cap});
    presets.push_back({"fig5", "16qam", 1.0, qam_alphas, qam_snr, Detector::ml, qam_cap});
    presets.push_back({"fig6", "16qam", 0.9, qam_alphas, qam_snr, Detector::ml, qam_cap});
    presets.push_back({"fig7", "16qam", 0.5, qam_alphas, qam_snr, Detector::ml, qam_cap});
    return presets;
}

}  // namespace

const std::vector<ScenarioPreset>& scenario_presets() {
    static const std::vector<ScenarioPreset> presets = build_presets();
    return presets;
}

const ScenarioPreset* find_preset(const std::string& name) {
    for (const ScenarioPreset& p : scenario_presets())
        if (p.name == name) return &p;
    return nullptr;
}

SweepConfig preset_config(const ScenarioPreset& preset, std::uint64_t seed) {
    SweepConfig cfg;
    cfg.constellation_name = preset.constellation;
    cfg.gammas = {preset.gamma};
    cfg.alphas = preset.alphas;
    cfg.snr_db_grid = preset.snr_db;
    cfg.detector = preset.detector;
    cfg.max_symbols = preset.max_symbols;
    cfg.master_seed = seed;
    return cfg;
}

}  // namespace noma
