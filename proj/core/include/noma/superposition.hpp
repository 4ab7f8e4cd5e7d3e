#ifndef NOMA_SUPERPOSITION_HPP
#define NOMA_SUPERPOSITION_HPP

#include <utility>
#include <vector>

#include "noma/constellation.hpp"

namespace noma {

/// Fraction of transmit power given to user 1; valid range is [1/2, 1).
/// alpha == 1/2 is the power-balanced (MU-MIMO) case.
struct PowerSplit {
    double alpha;
    explicit PowerSplit(double a);
};

/// Relative tolerance (on the scale of sqrt(avg_energy)) below which two
/// composite points are treated as the same point.
inline constexpr double kCoincidenceTolerance = 1e-9;

/// The alphabet seen by a receiver when both user symbols ride the same
/// channel: all M^2 values sqrt(alpha)*x1 + sqrt(1-alpha)*x2, with the pair
/// of source labels attached to each value.
struct SuperposedConstellation {
    PowerSplit split;
    Constellation base;
    std::vector<cplx> composite_points;            ///< M^2 entries, x1-major order
    std::vector<std::pair<int, int>> pair_labels;  ///< (x1 index, x2 index) per entry
    /// Groups (of size >= 2) of composite-point indices that coincide within
    /// tolerance. Empty when all M^2 points are distinct.
    std::vector<std::vector<int>> coincidence_classes;
    double d_min = 0.0;  ///< min distance over distinct points; 0 if any coincide

    int distinct_point_count() const;
};

SuperposedConstellation compose(const Constellation& c, PowerSplit split);

/// Minimum distance of the composite alphabet when both users draw I/Q
/// components from {-1,+1}: min(2*sqrt(1-a), 2*(sqrt(a)-sqrt(1-a))).
double dmin_qpsk(double alpha);

/// Minimum distance of the composite alphabet when both users draw I/Q
/// components from {-1,-3,+1,+3}: the smallest nonzero |di*u + dj*v| over
/// per-axis level differences di, dj in {0,+-2,+-4,+-6}, u = sqrt(alpha),
/// v = sqrt(1-alpha). For u >= 3v this reduces to min(2v, 2(u - 3v)); below
/// that, cross terms such as |2u - 4v| bind and the two-term form is invalid.
double dmin_16qam(double alpha);

/// Brute-force composite minimum distance through compose(); the oracle the
/// closed forms above are checked against. Returns 0 when points coincide.
double dmin_general(const Constellation& c, double alpha);

/// Power split maximizing the composite minimum distance. Known in closed
/// form for QPSK (0.8) and 16QAM (16/17); other alphabets fall back to
/// optimal_alpha_numeric.
double optimal_alpha(const Constellation& c);

/// Grid argmax of dmin_general over [1/2, 1) at step 1e-4, refined by
/// golden-section search to 1e-8.
double optimal_alpha_numeric(const Constellation& c);

}  // namespace noma

#endif  // NOMA_SUPERPOSITION_HPP
