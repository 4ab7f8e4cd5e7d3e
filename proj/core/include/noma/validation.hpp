#ifndef NOMA_VALIDATION_HPP
#define NOMA_VALIDATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "noma/channel.hpp"

namespace noma {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  ///< measured value vs expectation, human readable
};

/// Injection point for the channel generator so broken generators can be
/// shown to fail the suite.
using ChannelSampler =
    std::function<ChannelSample(CorrelationParam, RandomStream&)>;

/// Statistical checks of the fading generator, per gamma in {0, 0.5, 0.9, 1}:
/// unit coefficient variance (1%), within-row correlation against
/// 2g/(1+g^2) (1%), cross-row correlation within 3 standard errors of zero,
/// and a Kolmogorov-Smirnov test of |h11| against the unit-variance Rayleigh
/// CDF at significance 0.01.
std::vector<CheckResult> run_channel_checks(
    std::uint64_t seed, std::size_t n_samples,
    const ChannelSampler& sampler = {});

/// Simulated-vs-closed-form single-user Rayleigh QPSK comparison over a
/// 0..30 dB per-bit SNR grid, 3-sigma counting bands per point.
std::vector<CheckResult> run_calibration_checks(std::uint64_t seed);

/// Everything above in one list.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed,
                                              std::size_t n_samples);

}  // namespace noma

#endif  // NOMA_VALIDATION_HPP
