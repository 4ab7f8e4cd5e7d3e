#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "noma/constellation.hpp"

using noma::cplx;
using noma::Constellation;
using noma::Scale;

TEST_CASE("qpsk raw geometry and labels") {
    Constellation c = noma::make_qpsk(Scale::raw);
    CHECK(c.size == 4);
    CHECK(c.bits_per_symbol == 2);
    CHECK(c.avg_energy == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c.min_distance == doctest::Approx(2.0).epsilon(1e-15));

    // bit 0 (MSB) selects the in-phase sign, bit 1 the quadrature sign
    CHECK(c.points[0b00] == cplx(-1.0, -1.0));
    CHECK(c.points[0b01] == cplx(-1.0, +1.0));
    CHECK(c.points[0b10] == cplx(+1.0, -1.0));
    CHECK(c.points[0b11] == cplx(+1.0, +1.0));
}

TEST_CASE("qpsk unit energy normalization") {
    Constellation c = noma::make_qpsk();
    CHECK(c.avg_energy == 1.0);  // set exactly, not just approximately
    for (const cplx& p : c.points)
        CHECK(std::norm(p) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.min_distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("16qam raw geometry") {
    Constellation c = noma::make_16qam(Scale::raw);
    CHECK(c.size == 16);
    CHECK(c.bits_per_symbol == 4);
    // mean of (i^2 + q^2) over i,q in {1,3} with signs: 2 * (1+9)/2 = 10
    CHECK(c.avg_energy == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(c.min_distance == doctest::Approx(2.0).epsilon(1e-15));

    // per-axis Gray codes over amplitudes (-3,-1,+1,+3) are (00,01,11,10);
    // label = I code (high two bits) then Q code (low two bits)
    const double level_for_code[4] = {-3.0, -1.0, +3.0, +1.0};
    for (int label = 0; label < 16; ++label) {
        const double i = level_for_code[(label >> 2) & 3];
        const double q = level_for_code[label & 3];
        CHECK(c.points[label] == cplx(i, q));
    }
}

TEST_CASE("16qam labeling is Gray: nearest neighbours differ in one bit") {
    Constellation c = noma::make_16qam(Scale::raw);
    for (int a = 0; a < c.size; ++a) {
        for (int b = a + 1; b < c.size; ++b) {
            const double d = std::abs(c.points[a] - c.points[b]);
            if (d == doctest::Approx(c.min_distance).epsilon(1e-12)) {
                const auto diff = static_cast<unsigned>(a ^ b);
                CHECK(std::popcount(diff) == 1);
            }
        }
    }
}

TEST_CASE("16qam unit energy") {
    Constellation c = noma::make_16qam();
    CHECK(c.avg_energy == 1.0);
    CHECK(c.min_distance == doctest::Approx(2.0 / std::sqrt(10.0)).epsilon(1e-15));
    double acc = 0.0;
    for (const cplx& p : c.points) acc += std::norm(p);
    CHECK(acc / 16.0 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("point index equals bit label") {
    for (const char* name : {"qpsk", "16qam"}) {
        Constellation c = noma::make_constellation(name, Scale::unit_energy);
        for (int label = 0; label < c.size; ++label) {
            std::vector<std::uint8_t> bits(c.bits_per_symbol);
            for (int b = 0; b < c.bits_per_symbol; ++b)
                bits[b] = static_cast<std::uint8_t>(
                    (label >> (c.bits_per_symbol - 1 - b)) & 1);
            const auto symbols = noma::map_bits(c, bits);
            REQUIRE(symbols.size() == 1);
            CHECK(symbols[0] == c.points[label]);
            CHECK(noma::demap(c, symbols[0]) == bits);
        }
    }
}

TEST_CASE("map_bits handles multi-symbol input and rejects bad input") {
    Constellation c = noma::make_qpsk();
    const std::vector<std::uint8_t> bits = {1, 0, 0, 1};  // labels 0b10, 0b01
    const auto symbols = noma::map_bits(c, bits);
    REQUIRE(symbols.size() == 2);
    CHECK(symbols[0] == c.points[0b10]);
    CHECK(symbols[1] == c.points[0b01]);

    const std::vector<std::uint8_t> odd = {1, 0, 1};
    CHECK_THROWS_AS((void)noma::map_bits(c, odd), std::invalid_argument);
    const std::vector<std::uint8_t> bad = {1, 2};
    CHECK_THROWS_AS((void)noma::map_bits(c, bad), std::invalid_argument);
}

TEST_CASE("demap rejects symbols that are not constellation points") {
    Constellation c = noma::make_qpsk();
    CHECK_THROWS_AS((void)noma::demap(c, cplx(0.1, 0.1)), std::invalid_argument);
}

TEST_CASE("make_constellation rejects unknown names") {
    CHECK_THROWS_AS((void)noma::make_constellation("8psk", Scale::raw),
                    std::invalid_argument);
}

TEST_CASE("scaled() rescales energy and distance consistently") {
    Constellation c = noma::make_16qam(Scale::raw);
    Constellation s = c.scaled(0.5);
    CHECK(s.avg_energy == doctest::Approx(10.0 * 0.25).epsilon(1e-15));
    CHECK(s.min_distance == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 0; i < c.size; ++i) CHECK(s.points[i] == 0.5 * c.points[i]);
}

TEST_CASE("pairwise_min_distance") {
    const std::vector<cplx> pts = {{0, 0}, {3, 4}, {0, 1}};
    CHECK(noma::pairwise_min_distance(pts) == doctest::Approx(1.0).epsilon(1e-15));

    const std::vector<cplx> dup = {{1, 1}, {1, 1}};
    CHECK(noma::pairwise_min_distance(dup) == 0.0);

    const std::vector<cplx> single = {{1, 1}};
    CHECK_THROWS_AS((void)noma::pairwise_min_distance(single),
                    std::invalid_argument);
}
