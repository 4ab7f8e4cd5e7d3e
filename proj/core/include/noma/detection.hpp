#ifndef NOMA_DETECTION_HPP
#define NOMA_DETECTION_HPP

#include <complex>
#include <cstdint>
#include <utility>

#include "noma/channel.hpp"
#include "noma/constellation.hpp"
#include "noma/superposition.hpp"

namespace noma {

/// The two-antenna observation r = H * (sqrt(a)x1, sqrt(1-a)x2)^T + w.
struct ReceivedVector {
    std::complex<double> r1, r2;
};

/// Two candidate metrics closer than this are treated as a tie.
inline constexpr double kTieTolerance = 1e-12;

struct DetectionResult {
    int x1_index = 0;
    int x2_index = 0;
    double metric = 0.0;  ///< squared Euclidean distance of the winner
    bool tie = false;     ///< runner-up metric within kTieTolerance of the winner
    std::uint32_t metric_evals = 0;  ///< candidate metrics computed (M^2 or 2M)
};

/// Joint maximum-likelihood detection: exhaustive minimum of ||r - H x||^2
/// over all M^2 candidate pairs. Deterministic tie-break: the pair with the
/// lowest (x1_index, x2_index) in lexicographic order wins.
DetectionResult ml_detect(const ReceivedVector& r, const ChannelSample& h,
                          PowerSplit split, const Constellation& c);

/// Successive interference cancellation baseline: stage 1 detects x1 against
/// the first channel column treating the x2 term as noise, stage 2 subtracts
/// the stage-1 decision and detects x2 against the second column. Exactly 2M
/// metric evaluations; same tie rule per stage as ml_detect. The reported
/// metric equals the joint distance of the chosen pair.
DetectionResult sic_detect(const ReceivedVector& r, const ChannelSample& h,
                           PowerSplit split, const Constellation& c);

/// Per-user Hamming distance between the true and detected bit labels.
std::pair<int, int> count_bit_errors(int true_x1, int true_x2,
                                     const DetectionResult& detected,
                                     const Constellation& c);

}  // namespace noma

#endif  // NOMA_DETECTION_HPP
