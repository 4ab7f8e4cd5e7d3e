#ifndef NOMA_CHANNEL_HPP
#define NOMA_CHANNEL_HPP

#include <array>
#include <complex>

#include "noma/random.hpp"

namespace noma {

/// Transmit-side correlation knob in [0, 1]: 0 is uncorrelated, 1 makes the
/// two per-row coefficients identical. The induced coefficient correlation
/// is 2*gamma/(1+gamma^2), which saturates much faster than gamma itself.
struct CorrelationParam {
    double gamma;
    explicit CorrelationParam(double g);

    double induced_correlation() const {
        return 2.0 * gamma / (1.0 + gamma * gamma);
    }
};

/// One 2x2 fading matrix realization. Rows correspond to receive antennas;
/// columns to transmit antennas. Coefficients within a row are correlated
/// mixtures of two independent draws; the two rows are independent.
struct ChannelSample {
    std::complex<double> h11, h12;
    std::complex<double> h21, h22;
    /// The four underlying independent unit-variance draws, in draw order.
    std::array<std::complex<double>, 4> raw;
};

/// Draws four i.i.d. unit-variance complex Gaussians f1..f4 and mixes them:
///   h11 = (f1 + g*f2)/sqrt(1+g^2)   h12 = (g*f1 + f2)/sqrt(1+g^2)
///   h21 = (f3 + g*f4)/sqrt(1+g^2)   h22 = (g*f3 + f4)/sqrt(1+g^2)
/// Every coefficient keeps unit variance for any gamma. At gamma == 0 the
/// coefficients equal the raw draws exactly; at gamma == 1 the two
/// coefficients in each row are bitwise equal.
ChannelSample sample_channel(CorrelationParam gamma, RandomStream& stream);

/// Per-antenna additive noise pair: two independent complex Gaussians with
/// E|w_i|^2 == n0 (n0/2 per real dimension).
struct NoiseVector {
    std::complex<double> w1, w2;
    double n0;
};

/// Throws std::invalid_argument unless n0 > 0.
NoiseVector sample_noise(double n0, RandomStream& stream);

}  // namespace noma

#endif  // NOMA_CHANNEL_HPP
