#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "noma/channel.hpp"
#include "noma/random.hpp"
#include "noma/validation.hpp"

using noma::ChannelSample;
using noma::CorrelationParam;
using noma::derive_stream;
using noma::RandomStream;

TEST_CASE("correlation parameter validates and maps to coefficient correlation") {
    CHECK_THROWS_AS(CorrelationParam(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(CorrelationParam(1.01), std::invalid_argument);
    CHECK(CorrelationParam(0.0).induced_correlation() == 0.0);
    CHECK(CorrelationParam(1.0).induced_correlation() == 1.0);
    CHECK(CorrelationParam(0.5).induced_correlation() ==
          doctest::Approx(0.8).epsilon(1e-15));
    CHECK(CorrelationParam(0.9).induced_correlation() ==
          doctest::Approx(1.8 / 1.81).epsilon(1e-15));
}

TEST_CASE("gamma = 0 passes the underlying draws through bitwise") {
    RandomStream a = derive_stream(9, {1});
    RandomStream b = derive_stream(9, {1});
    for (int i = 0; i < 200; ++i) {
        const ChannelSample s = noma::sample_channel(CorrelationParam(0.0), a);
        const std::complex<double> f1 = b.complex_normal(1.0);
        const std::complex<double> f2 = b.complex_normal(1.0);
        const std::complex<double> f3 = b.complex_normal(1.0);
        const std::complex<double> f4 = b.complex_normal(1.0);
        CHECK(s.h11 == f1);
        CHECK(s.h12 == f2);
        CHECK(s.h21 == f3);
        CHECK(s.h22 == f4);
        CHECK(s.raw[0] == f1);
        CHECK(s.raw[3] == f4);
    }
}

TEST_CASE("gamma = 1 collapses each receiver row to a single coefficient") {
    RandomStream s = derive_stream(10, {1});
    for (int i = 0; i < 200; ++i) {
        const ChannelSample h = noma::sample_channel(CorrelationParam(1.0), s);
        CHECK(h.h11 == h.h12);  // bitwise, not approximately
        CHECK(h.h21 == h.h22);
        CHECK(h.h11 != h.h21);
    }
}

TEST_CASE("intermediate gamma matches the target moments") {
    const CorrelationParam gamma(0.7);
    RandomStream s = derive_stream(11, {2});
    const int n = 200000;
    double e11 = 0.0, e12 = 0.0, cross = 0.0, row_cross = 0.0;
    for (int i = 0; i < n; ++i) {
        const ChannelSample h = noma::sample_channel(gamma, s);
        e11 += std::norm(h.h11);
        e12 += std::norm(h.h12);
        cross += (h.h11 * std::conj(h.h12)).real();
        row_cross += (h.h11 * std::conj(h.h21)).real();
    }
    e11 /= n;
    e12 /= n;
    cross /= n;
    row_cross /= n;
    CHECK(e11 == doctest::Approx(1.0).epsilon(0.02));
    CHECK(e12 == doctest::Approx(1.0).epsilon(0.02));
    CHECK(cross == doctest::Approx(gamma.induced_correlation()).epsilon(0.02));
    CHECK(std::abs(row_cross) < 0.01);
}

TEST_CASE("noise variance tracks n0") {
    RandomStream s = derive_stream(12, {3});
    const double n0 = 0.37;
    const int n = 200000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const noma::NoiseVector w = noma::sample_noise(n0, s);
        acc += std::norm(w.w1) + std::norm(w.w2);
    }
    CHECK(acc / (2 * n) == doctest::Approx(n0).epsilon(0.02));
    CHECK_THROWS_AS((void)noma::sample_noise(0.0, s), std::invalid_argument);
    CHECK_THROWS_AS((void)noma::sample_noise(-1.0, s), std::invalid_argument);
}

TEST_CASE("statistical suite passes for the real generator") {
    const auto checks = noma::run_channel_checks(1, 200000);
    CHECK(checks.size() == 16);  // 4 checks x 4 gammas
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

// Negative controls: deliberately broken generators must be caught, which is
// what makes the statistical suite evidence rather than decoration.
TEST_CASE("statistical suite rejects a generator that ignores correlation") {
    const auto checks = noma::run_channel_checks(
        1, 50000, [](CorrelationParam, RandomStream& s) {
            ChannelSample h;
            h.raw = {s.complex_normal(1.0), s.complex_normal(1.0),
                     s.complex_normal(1.0), s.complex_normal(1.0)};
            h.h11 = h.raw[0];
            h.h12 = h.raw[1];
            h.h21 = h.raw[2];
            h.h22 = h.raw[3];
            return h;
        });
    const bool corr_failed = std::any_of(
        checks.begin(), checks.end(), [](const noma::CheckResult& c) {
            return !c.pass && c.name.find("within-row correlation") != std::string::npos;
        });
    CHECK(corr_failed);
}

TEST_CASE("statistical suite rejects a generator with inflated variance") {
    const auto checks = noma::run_channel_checks(
        1, 50000, [](CorrelationParam g, RandomStream& s) {
            ChannelSample h = noma::sample_channel(g, s);
            h.h11 *= 1.05;
            h.h12 *= 1.05;
            h.h21 *= 1.05;
            h.h22 *= 1.05;
            return h;
        });
    const bool var_failed = std::any_of(
        checks.begin(), checks.end(), [](const noma::CheckResult& c) {
            return !c.pass && c.name.find("coefficient variance") != std::string::npos;
        });
    CHECK(var_failed);
}

TEST_CASE("statistical suite rejects a non-Rayleigh magnitude") {
    const auto checks = noma::run_channel_checks(
        1, 50000, [](CorrelationParam g, RandomStream& s) {
            ChannelSample h = noma::sample_channel(g, s);
            // kill the imaginary part but keep the variance: magnitude
            // becomes half-normal instead of Rayleigh
            h.h11 = std::complex<double>(h.h11.real() * std::sqrt(2.0), 0.0);
            return h;
        });
    const bool ks_failed = std::any_of(
        checks.begin(), checks.end(), [](const noma::CheckResult& c) {
            return !c.pass && c.name.find("Rayleigh magnitude KS") != std::string::npos;
        });
    CHECK(ks_failed);
}
