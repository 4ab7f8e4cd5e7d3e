#include "noma/detection.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace noma {

namespace {

// Scratch vectors sized for the largest supported alphabet; detection is the
// inner loop of every sweep and must not allocate.
struct ColumnTerms {
    std::array<cplx, kMaxConstellationSize> a1, a2;  // user-1 column per symbol
    std::array<cplx, kMaxConstellationSize> b1, b2;  // user-2 column per symbol
};

void fill_terms(const ChannelSample& h, PowerSplit split,
                const Constellation& c, ColumnTerms& t) {
    const double u = std::sqrt(split.alpha);
    const double v = std::sqrt(1.0 - split.alpha);
    for (int k = 0; k < c.size; ++k) {
        const cplx su = u * c.points[k];
        const cplx sv = v * c.points[k];
        t.a1[k] = h.h11 * su;
        t.a2[k] = h.h21 * su;
        t.b1[k] = h.h12 * sv;
        t.b2[k] = h.h22 * sv;
    }
}

/// First index whose metric is within kTieTolerance of the minimum, plus
/// whether more than one candidate sits in that band.
struct ArgminTie {
    int index = 0;
    double metric = 0.0;
    bool tie = false;
};

ArgminTie argmin_with_ties(const double* metrics, int n) {
    double best = metrics[0];
    for (int k = 1; k < n; ++k)
        if (metrics[k] < best) best = metrics[k];
    const double band = best + kTieTolerance;
    ArgminTie out;
    int in_band = 0;
    for (int k = 0; k < n; ++k) {
        if (metrics[k] <= band) {
            if (in_band == 0) {
                out.index = k;
                out.metric = metrics[k];
            }
            ++in_band;
        }
    }
    out.tie = in_band > 1;
    return out;
}

}  // namespace

DetectionResult ml_detect(const ReceivedVector& r, const ChannelSample& h,
                          PowerSplit split, const Constellation& c) {
    if (c.size > kMaxConstellationSize)
        throw std::invalid_argument("alphabet exceeds detector capacity");
    static thread_local ColumnTerms t;
    static thread_local std::array<double, kMaxConstellationSize * kMaxConstellationSize>
        metrics;
    fill_terms(h, split, c, t);

    const int m = c.size;
    for (int i = 0; i < m; ++i) {
        const cplx d1 = r.r1 - t.a1[i];
        const cplx d2 = r.r2 - t.a2[i];
        for (int j = 0; j < m; ++j)
            metrics[i * m + j] = std::norm(d1 - t.b1[j]) + std::norm(d2 - t.b2[j]);
    }

    const ArgminTie win = argmin_with_ties(metrics.data(), m * m);
    DetectionResult out;
    out.x1_index = win.index / m;
    out.x2_index = win.index % m;
    out.metric = win.metric;
    out.tie = win.tie;
    out.metric_evals = static_cast<std::uint32_t>(m) * static_cast<std::uint32_t>(m);
    return out;
}

DetectionResult sic_detect(const ReceivedVector& r, const ChannelSample& h,
                           PowerSplit split, const Constellation& c) {
    if (c.size > kMaxConstellationSize)
        throw std::invalid_argument("alphabet exceeds detector capacity");
    static thread_local ColumnTerms t;
    static thread_local std::array<double, kMaxConstellationSize> metrics;
    fill_terms(h, split, c, t);
    const int m = c.size;

    for (int i = 0; i < m; ++i)
        metrics[i] = std::norm(r.r1 - t.a1[i]) + std::norm(r.r2 - t.a2[i]);
    const ArgminTie stage1 = argmin_with_ties(metrics.data(), m);

    const cplx r1p = r.r1 - t.a1[stage1.index];
    const cplx r2p = r.r2 - t.a2[stage1.index];
    for (int j = 0; j < m; ++j)
        metrics[j] = std::norm(r1p - t.b1[j]) + std::norm(r2p - t.b2[j]);
    const ArgminTie stage2 = argmin_with_ties(metrics.data(), m);

    DetectionResult out;
    out.x1_index = stage1.index;
    out.x2_index = stage2.index;
    out.metric = std::norm(r.r1 - t.a1[stage1.index] - t.b1[stage2.index]) +
                 std::norm(r.r2 - t.a2[stage1.index] - t.b2[stage2.index]);
    out.tie = stage1.tie || stage2.tie;
    out.metric_evals = 2u * static_cast<std::uint32_t>(m);
    return out;
}

std::pair<int, int> count_bit_errors(int true_x1, int true_x2,
                                     const DetectionResult& detected,
                                     const Constellation& c) {
    const auto in_range = [&](int idx) { return idx >= 0 && idx < c.size; };
    if (!in_range(true_x1) || !in_range(true_x2) ||
        !in_range(detected.x1_index) || !in_range(detected.x2_index))
        throw std::invalid_argument("symbol index out of range");
    const int e1 = std::popcount(static_cast<unsigned>(true_x1 ^ detected.x1_index));
    const int e2 = std::popcount(static_cast<unsigned>(true_x2 ^ detected.x2_index));
    return {e1, e2};
}

}  // namespace noma
