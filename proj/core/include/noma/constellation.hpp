#ifndef NOMA_CONSTELLATION_HPP
#define NOMA_CONSTELLATION_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace noma {

using cplx = std::complex<double>;

/// Upper bound on supported alphabet sizes; detection kernels use
/// fixed-capacity scratch arrays sized by this.
inline constexpr int kMaxConstellationSize = 64;

enum class Scale {
    unit_energy,  ///< points scaled so that mean |x|^2 == 1
    raw           ///< integer-grid amplitudes (e.g. I/Q in {-1,+1} or {-3..+3})
};

/// A symbol alphabet with an implicit bit labeling: the index of a point in
/// `points` is its bit label, most significant bit first, I-axis bits before
/// Q-axis bits. Immutable after construction and safe to share across threads.
struct Constellation {
    std::string name;
    std::vector<cplx> points;  ///< points[label] == symbol for that label
    int bits_per_symbol = 0;
    int size = 0;              ///< number of points, 2^bits_per_symbol
    double avg_energy = 0.0;   ///< mean |x|^2 over a uniform symbol draw
    double min_distance = 0.0; ///< smallest pairwise Euclidean distance

    /// Copy with every point multiplied by `factor` (measures rescaled).
    Constellation scaled(double factor) const;
};

/// Four points with I and Q in {-1,+1} (one Gray-labeled bit per axis),
/// normalized to unit average energy unless Scale::raw is requested.
Constellation make_qpsk(Scale scale = Scale::unit_energy);

/// Sixteen points with I and Q in {-3,-1,+1,+3}, two Gray-labeled bits per
/// axis, normalized to unit average energy unless Scale::raw is requested.
Constellation make_16qam(Scale scale = Scale::unit_energy);

/// Factory lookup by name ("qpsk" or "16qam"); throws std::invalid_argument
/// for anything else.
Constellation make_constellation(const std::string& name,
                                 Scale scale = Scale::unit_energy);

/// Maps a bit sequence onto symbols, bits_per_symbol bits per symbol, MSB
/// first. Bits must be 0/1 values and the length must be divisible by
/// bits_per_symbol (throws std::invalid_argument otherwise).
std::vector<cplx> map_bits(const Constellation& c, std::span<const std::uint8_t> bits);

/// Inverse of map_bits for a single symbol. The symbol must compare exactly
/// equal to a constellation point; throws std::invalid_argument otherwise.
std::vector<std::uint8_t> demap(const Constellation& c, cplx symbol);

/// Smallest |p_i - p_j| over unordered pairs; 0 if two points coincide.
/// Throws std::invalid_argument for fewer than two points.
double pairwise_min_distance(std::span<const cplx> points);

}  // namespace noma

#endif  // NOMA_CONSTELLATION_HPP
