#ifndef NOMA_PRESETS_HPP
#define NOMA_PRESETS_HPP

#include <string>
#include <vector>

#include "noma/montecarlo.hpp"

namespace noma {

/// A named sweep scenario: one constellation and correlation level, a list
/// of power splits, and an SNR grid wide enough to show both the waterfall
/// region and any error floors.
struct ScenarioPreset {
    std::string name;
    std::string constellation;
    double gamma = 0.0;
    std::vector<double> alphas;
    std::vector<double> snr_db;
    Detector detector = Detector::ml;
    std::uint64_t max_symbols = 0;  ///< per-point cap suited to the alphabet size
};

/// The built-in scenarios fig2..fig7: QPSK at gamma = 1 / 0.9 / 0.5 with
/// alphas {0.5, 0.65, 0.7, 0.8, 0.9, 0.95}, and 16QAM at the same gammas
/// with alphas {0.5, 0.9, 16/17, 0.99}.
const std::vector<ScenarioPreset>& scenario_presets();

/// nullptr if no preset has that name.
const ScenarioPreset* find_preset(const std::string& name);

/// Expands a preset into a runnable config with the given seed.
SweepConfig preset_config(const ScenarioPreset& preset, std::uint64_t seed);

}  // namespace noma

#endif  // NOMA_PRESETS_HPP
