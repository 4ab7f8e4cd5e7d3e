#ifndef NOMA_MONTECARLO_HPP
#define NOMA_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noma/constellation.hpp"

namespace noma {

enum class Detector { ml, sic };

const char* detector_name(Detector d);
Detector parse_detector(const std::string& name);  // "ml" | "sic"

/// Full experiment grid plus the stopping and seeding policy. Results are a
/// pure function of this struct: worker count and scheduling never change
/// the outcome.
struct SweepConfig {
    std::string constellation_name = "qpsk";
    std::vector<double> gammas;
    std::vector<double> alphas;
    std::vector<double> snr_db_grid;  ///< strictly increasing
    Detector detector = Detector::ml;
    std::uint64_t max_symbols = 100'000'000;   ///< cap per grid point
    std::uint64_t target_bit_errors = 200;     ///< early stop once both users reach this
    std::uint64_t master_seed = 1;

    /// Throws std::invalid_argument on empty grids, out-of-range parameters,
    /// max_symbols < 1000 or target_bit_errors < 100.
    void validate() const;
};

/// Aggregated bit-error statistics at one (gamma, alpha, snr) grid point.
struct BerPoint {
    double gamma = 0.0;
    double alpha = 0.0;
    double snr_db = 0.0;
    std::uint64_t symbols_simulated = 0;
    std::uint64_t bit_errors_u1 = 0;
    std::uint64_t bit_errors_u2 = 0;
    double ber_u1 = 0.0;
    double ber_u2 = 0.0;
    double ber_avg = 0.0;
    double tie_fraction = 0.0;  ///< fraction of trials flagged as detector ties
    bool capped = false;        ///< hit max_symbols before reaching the error target
};

/// One BER-vs-SNR curve at fixed (gamma, alpha, detector), points in
/// ascending snr_db order.
struct BerCurve {
    double gamma = 0.0;
    double alpha = 0.0;
    Detector detector = Detector::ml;
    std::vector<BerPoint> points;
};

/// Simulates one grid point: per trial, draw two uniform symbols, scale by
/// (sqrt(a), sqrt(1-a)), push them through a fresh correlated channel draw
/// plus AWGN with n0 = avg_energy / 10^(snr_db/10), detect, and accumulate
/// per-user bit errors. Stops at the first fixed-size trial chunk where both
/// users have reached target_bit_errors, or at max_symbols. Trials are
/// seeded per chunk from (master_seed, grid labels, chunk index), so the
/// result is byte-identical for any worker count.
BerPoint run_point(const SweepConfig& cfg, double gamma, double alpha,
                   double snr_db, int workers = 1);

/// All grid points of the config, one curve per (gamma, alpha) in config
/// order. Deterministic for any worker count.
std::vector<BerCurve> run_sweep(const SweepConfig& cfg, int workers = 1);

/// Interpolated SNR at which the curve's ber_avg crosses `ber_level`
/// (log-linear in BER). Empty if the curve never crosses within its grid.
std::optional<double> crossing_snr(const BerCurve& curve, double ber_level);

/// Horizontal distance cross(a) - cross(b) in dB at the given BER level.
/// Empty when either curve never reaches the level (floor case).
std::optional<double> snr_gap(const BerCurve& a, const BerCurve& b,
                              double ber_level);

/// Closed-form bit error rate of coherent antipodal signaling per quadrature
/// dimension on a unit-variance Rayleigh channel: 0.5*(1 - sqrt(g/(1+g))),
/// g = per-bit SNR.
double rayleigh_qpsk_ber(double per_bit_snr);

struct CalibrationPoint {
    double snr_db = 0.0;  ///< per-bit SNR in dB
    double ber = 0.0;
    double analytic_ber = 0.0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits = 0;
};

/// Engine calibration oracle: simulates single-user QPSK through a 1x1
/// unit-variance Rayleigh channel with ML detection and tabulates the
/// simulated vs closed-form BER at each per-bit SNR point.
std::vector<CalibrationPoint> validate_single_user(
    std::span<const double> snr_db_grid, std::uint64_t seed,
    std::uint64_t target_bit_errors = 2000,
    std::uint64_t max_symbols = 20'000'000);

}  // namespace noma

#endif  // NOMA_MONTECARLO_HPP
