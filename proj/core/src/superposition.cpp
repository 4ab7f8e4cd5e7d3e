#include "noma/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace noma {

PowerSplit::PowerSplit(double a) : alpha(a) {
    if (!(a >= 0.5) || !(a < 1.0))
        throw std::invalid_argument("power split must satisfy 0.5 <= alpha < 1");
}

int SuperposedConstellation::distinct_point_count() const {
    int merged = 0;
    for (const auto& group : coincidence_classes)
        merged += static_cast<int>(group.size()) - 1;
    return static_cast<int>(composite_points.size()) - merged;
}

SuperposedConstellation compose(const Constellation& c, PowerSplit split) {
    if (c.size < 2) throw std::invalid_argument("base alphabet too small");
    SuperposedConstellation s{split, c, {}, {}, {}, 0.0};
    const double u = std::sqrt(split.alpha);
    const double v = std::sqrt(1.0 - split.alpha);
    const int n = c.size * c.size;
    s.composite_points.reserve(n);
    s.pair_labels.reserve(n);
    for (int i = 0; i < c.size; ++i)
        for (int j = 0; j < c.size; ++j) {
            s.composite_points.push_back(u * c.points[i] + v * c.points[j]);
            s.pair_labels.emplace_back(i, j);
        }

    const double tol = kCoincidenceTolerance * std::sqrt(c.avg_energy);
    std::vector<int> group_of(n, -1);
    double dmin = std::numeric_limits<double>::infinity();
    bool any_coincide = false;
    for (int i = 0; i < n; ++i) {
        int attach = -1;
        for (int j = 0; j < i; ++j) {
            const double d = std::abs(s.composite_points[i] - s.composite_points[j]);
            if (d <= tol) {
                if (attach < 0) attach = j;
            } else {
                dmin = std::min(dmin, d);
            }
        }
        if (attach >= 0) {
            any_coincide = true;
            if (group_of[attach] < 0) {
                group_of[attach] = static_cast<int>(s.coincidence_classes.size());
                s.coincidence_classes.push_back({attach});
            }
            group_of[i] = group_of[attach];
            s.coincidence_classes[group_of[attach]].push_back(i);
        }
    }
    s.d_min = any_coincide ? 0.0 : dmin;
    return s;
}

double dmin_qpsk(double alpha) {
    PowerSplit check(alpha);
    const double u = std::sqrt(check.alpha);
    const double v = std::sqrt(1.0 - check.alpha);
    return std::min(2.0 * v, 2.0 * (u - v));
}

double dmin_16qam(double alpha) {
    PowerSplit check(alpha);
    const double u = std::sqrt(check.alpha);
    const double v = std::sqrt(1.0 - check.alpha);
    double best = std::numeric_limits<double>::infinity();
    for (int k1 = 0; k1 <= 3; ++k1)
        for (int k2 = -3; k2 <= 3; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            best = std::min(best, std::abs(2.0 * (k1 * u + k2 * v)));
        }
    return best;
}

double dmin_general(const Constellation& c, double alpha) {
    return compose(c, PowerSplit(alpha)).d_min;
}

namespace {

double golden_section_max(const Constellation& c, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = dmin_general(c, x1);
    double f2 = dmin_general(c, x2);
    while (b - a > 1e-8) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = dmin_general(c, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = dmin_general(c, x1);
        }
    }
    return (a + b) / 2.0;
}

}  // namespace

double optimal_alpha_numeric(const Constellation& c) {
    const double step = 1e-4;
    double best_alpha = 0.5;
    double best = -1.0;
    for (double a = 0.5; a < 1.0 - step / 2; a += step) {
        const double d = dmin_general(c, a);
        if (d > best) {
            best = d;
            best_alpha = a;
        }
    }
    const double lo = std::max(0.5, best_alpha - step);
    const double hi = std::min(1.0 - 1e-9, best_alpha + step);
    return golden_section_max(c, lo, hi);
}

double optimal_alpha(const Constellation& c) {
    if (c.name == "qpsk") return 0.8;
    if (c.name == "16qam") return 16.0 / 17.0;
    return optimal_alpha_numeric(c);
}

}  // namespace noma
