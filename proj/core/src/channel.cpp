#include "noma/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace noma {

CorrelationParam::CorrelationParam(double g) : gamma(g) {
    if (!(g >= 0.0) || !(g <= 1.0))
        throw std::invalid_argument("correlation parameter must be in [0, 1]");
}

ChannelSample sample_channel(CorrelationParam gamma, RandomStream& stream) {
    const double g = gamma.gamma;
    const double norm = 1.0 / std::sqrt(1.0 + g * g);
    ChannelSample s;
    for (auto& f : s.raw) f = stream.complex_normal(1.0);
    s.h11 = (s.raw[0] + g * s.raw[1]) * norm;
    s.h12 = (g * s.raw[0] + s.raw[1]) * norm;
    s.h21 = (s.raw[2] + g * s.raw[3]) * norm;
    s.h22 = (g * s.raw[2] + s.raw[3]) * norm;
    return s;
}

NoiseVector sample_noise(double n0, RandomStream& stream) {
    if (!(n0 > 0.0))
        throw std::invalid_argument("noise variance must be positive");
    NoiseVector w;
    w.n0 = n0;
    w.w1 = stream.complex_normal(n0);
    w.w2 = stream.complex_normal(n0);
    return w;
}

}  // namespace noma
