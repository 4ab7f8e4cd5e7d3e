#include "noma/validation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "noma/montecarlo.hpp"

namespace noma {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

std::string gamma_tag(double g) {
    std::ostringstream os;
    os << "gamma=" << g;
    return os.str();
}

struct ChannelMoments {
    double var[4] = {0, 0, 0, 0};   // E|h11|^2, E|h12|^2, E|h21|^2, E|h22|^2
    double row_corr = 0.0;          // normalized Re E[h11 conj(h12)]
    double cross[4] = {0, 0, 0, 0}; // h11-h21, h11-h22, h12-h21, h12-h22
    std::vector<double> mag_h11;
};

ChannelMoments collect(const ChannelSampler& sampler, CorrelationParam gamma,
                       std::uint64_t seed, std::size_t n) {
    RandomStream stream = derive_stream(
        seed, {label_hash("channel-checks"),
               std::bit_cast<std::uint64_t>(gamma.gamma)});
    ChannelMoments m;
    m.mag_h11.reserve(n);
    double row_num = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const ChannelSample s = sampler(gamma, stream);
        m.var[0] += std::norm(s.h11);
        m.var[1] += std::norm(s.h12);
        m.var[2] += std::norm(s.h21);
        m.var[3] += std::norm(s.h22);
        row_num += (s.h11 * std::conj(s.h12)).real();
        m.cross[0] += (s.h11 * std::conj(s.h21)).real();
        m.cross[1] += (s.h11 * std::conj(s.h22)).real();
        m.cross[2] += (s.h12 * std::conj(s.h21)).real();
        m.cross[3] += (s.h12 * std::conj(s.h22)).real();
        m.mag_h11.push_back(std::abs(s.h11));
    }
    const double dn = static_cast<double>(n);
    for (double& v : m.var) v /= dn;
    m.row_corr = (row_num / dn) / std::sqrt(m.var[0] * m.var[1]);
    for (double& v : m.cross) v /= dn;
    return m;
}

double rayleigh_ks_statistic(std::vector<double>& magnitudes) {
    std::sort(magnitudes.begin(), magnitudes.end());
    const double n = static_cast<double>(magnitudes.size());
    double d = 0.0;
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        const double x = magnitudes[i];
        const double cdf = 1.0 - std::exp(-x * x);  // |h| for unit E|h|^2
        d = std::max(d, cdf - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - cdf);
    }
    return d;
}

}  // namespace

std::vector<CheckResult> run_channel_checks(std::uint64_t seed,
                                            std::size_t n_samples,
                                            const ChannelSampler& sampler) {
    const ChannelSampler gen =
        sampler ? sampler
                : ChannelSampler([](CorrelationParam g, RandomStream& s) {
                      return sample_channel(g, s);
                  });
    std::vector<CheckResult> out;
    const double gammas[] = {0.0, 0.5, 0.9, 1.0};
    for (const double g : gammas) {
        const CorrelationParam gamma(g);
        ChannelMoments m = collect(gen, gamma, seed, n_samples);
        const std::string tag = gamma_tag(g);

        double worst_var = 0.0;
        for (const double v : m.var) worst_var = std::max(worst_var, std::abs(v - 1.0));
        out.push_back({"coefficient variance " + tag, worst_var <= 0.01,
                       "max |E|h|^2 - 1| = " + fmt(worst_var) + " (tol 0.01)"});

        const double expected = gamma.induced_correlation();
        const double corr_err = std::abs(m.row_corr - expected);
        out.push_back({"within-row correlation " + tag, corr_err <= 0.01,
                       "measured " + fmt(m.row_corr) + " vs " + fmt(expected) +
                           " (tol 0.01)"});

        const double se = std::sqrt(0.5 / static_cast<double>(n_samples));
        double worst_cross = 0.0;
        for (const double v : m.cross) worst_cross = std::max(worst_cross, std::abs(v));
        out.push_back({"cross-row correlation " + tag, worst_cross <= 3.0 * se,
                       "max |corr| = " + fmt(worst_cross) + " (3 SE = " +
                           fmt(3.0 * se) + ")"});

        const double d = rayleigh_ks_statistic(m.mag_h11);
        const double crit = 1.628 / std::sqrt(static_cast<double>(n_samples));
        out.push_back({"Rayleigh magnitude KS " + tag, d <= crit,
                       "D = " + fmt(d) + " (crit 0.01 level = " + fmt(crit) + ")"});
    }
    return out;
}

std::vector<CheckResult> run_calibration_checks(std::uint64_t seed) {
    const std::vector<double> grid = {0, 5, 10, 15, 20, 25, 30};
    const auto points = validate_single_user(grid, seed);
    std::vector<CheckResult> out;
    for (const CalibrationPoint& p : points) {
        const double sigma = std::sqrt(p.analytic_ber * (1.0 - p.analytic_ber) /
                                       static_cast<double>(p.bits));
        const double err = std::abs(p.ber - p.analytic_ber);
        std::ostringstream name;
        name << "single-user calibration " << p.snr_db << " dB";
        out.push_back({name.str(), err <= 3.0 * sigma,
                       "simulated " + fmt(p.ber) + " vs closed form " +
                           fmt(p.analytic_ber) + " (3 sigma = " +
                           fmt(3.0 * sigma) + ")"});
    }
    return out;
}

std::vector<CheckResult> run_validation_suite(std::uint64_t seed,
                                              std::size_t n_samples) {
    std::vector<CheckResult> out = run_channel_checks(seed, n_samples);
    const std::vector<CheckResult> cal = run_calibration_checks(seed);
    out.insert(out.end(), cal.begin(), cal.end());
    return out;
}

}  // namespace noma
