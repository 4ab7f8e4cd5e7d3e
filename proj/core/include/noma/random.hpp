#ifndef NOMA_RANDOM_HPP
#define NOMA_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <span>

namespace noma {

/// Deterministic random stream: a mersenne-twister engine plus exact
/// transforms with fully specified draw order. The raw 64-bit sequence is
/// identical on every platform for a given seed; derived real-valued draws
/// are bit-stable across runs of the same build.
///
/// Streams are single-owner. Parallel code derives one stream per work unit
/// (see derive_stream) instead of sharing.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Unbiased via rejection; n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Standard normal via the Marsaglia polar method (no libm trig).
    /// Generates pairs; the second value is cached for the next call.
    double normal();

    /// Circularly-symmetric complex Gaussian with E|z|^2 == variance
    /// (variance/2 per real dimension). Draw order: real part, then imag.
    std::complex<double> complex_normal(double variance);

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Derives a substream uniquely keyed by (master_seed, labels). Identical
/// inputs give bit-identical streams; distinct label tuples give
/// statistically independent streams. Used hierarchically: experiment ->
/// grid point -> chunk, so results never depend on worker scheduling.
RandomStream derive_stream(std::uint64_t master_seed,
                           std::span<const std::uint64_t> labels);

RandomStream derive_stream(std::uint64_t master_seed,
                           std::initializer_list<std::uint64_t> labels);

/// FNV-1a of a byte string; used to turn names into stream labels.
std::uint64_t label_hash(std::string_view text);

}  // namespace noma

#endif  // NOMA_RANDOM_HPP
