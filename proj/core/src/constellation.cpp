#include "noma/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace noma {

namespace {

// Per-axis Gray labeling: amplitude order (-3,-1,+1,+3) carries the 2-bit
// codes (00,01,11,10), so adjacent levels differ in one bit.
constexpr double kPam4LevelForCode[4] = {-3.0, -1.0, +3.0, +1.0};

Constellation finalize(Constellation c, Scale scale) {
    c.size = static_cast<int>(c.points.size());
    double sum = 0.0;
    for (const cplx& p : c.points) sum += std::norm(p);
    c.avg_energy = sum / static_cast<double>(c.size);
    if (scale == Scale::unit_energy) {
        const double f = 1.0 / std::sqrt(c.avg_energy);
        for (cplx& p : c.points) p *= f;
        c.avg_energy = 1.0;
    }
    c.min_distance = pairwise_min_distance(c.points);
    return c;
}

}  // namespace

Constellation Constellation::scaled(double factor) const {
    Constellation out = *this;
    for (cplx& p : out.points) p *= factor;
    out.avg_energy = avg_energy * factor * factor;
    out.min_distance = min_distance * std::abs(factor);
    return out;
}

Constellation make_qpsk(Scale scale) {
    Constellation c;
    c.name = "qpsk";
    c.bits_per_symbol = 2;
    c.points.resize(4);
    for (int label = 0; label < 4; ++label) {
        const double i = (label & 0b10) ? +1.0 : -1.0;
        const double q = (label & 0b01) ? +1.0 : -1.0;
        c.points[label] = cplx(i, q);
    }
    return finalize(std::move(c), scale);
}

Constellation make_16qam(Scale scale) {
    Constellation c;
    c.name = "16qam";
    c.bits_per_symbol = 4;
    c.points.resize(16);
    for (int label = 0; label < 16; ++label) {
        const double i = kPam4LevelForCode[(label >> 2) & 0b11];
        const double q = kPam4LevelForCode[label & 0b11];
        c.points[label] = cplx(i, q);
    }
    return finalize(std::move(c), scale);
}

Constellation make_constellation(const std::string& name, Scale scale) {
    if (name == "qpsk") return make_qpsk(scale);
    if (name == "16qam") return make_16qam(scale);
    throw std::invalid_argument("unknown constellation '" + name +
                                "' (expected qpsk or 16qam)");
}

std::vector<cplx> map_bits(const Constellation& c,
                           std::span<const std::uint8_t> bits) {
    const int k = c.bits_per_symbol;
    if (k <= 0) throw std::invalid_argument("constellation has no bit labeling");
    if (bits.size() % static_cast<std::size_t>(k) != 0)
        throw std::invalid_argument("bit count not divisible by bits per symbol");
    std::vector<cplx> out;
    out.reserve(bits.size() / static_cast<std::size_t>(k));
    for (std::size_t pos = 0; pos < bits.size(); pos += k) {
        int label = 0;
        for (int b = 0; b < k; ++b) {
            const std::uint8_t bit = bits[pos + b];
            if (bit > 1) throw std::invalid_argument("bits must be 0 or 1");
            label = (label << 1) | bit;
        }
        out.push_back(c.points[label]);
    }
    return out;
}

std::vector<std::uint8_t> demap(const Constellation& c, cplx symbol) {
    for (int label = 0; label < c.size; ++label) {
        if (c.points[label] == symbol) {
            std::vector<std::uint8_t> bits(c.bits_per_symbol);
            for (int b = 0; b < c.bits_per_symbol; ++b)
                bits[b] = (label >> (c.bits_per_symbol - 1 - b)) & 1;
            return bits;
        }
    }
    throw std::invalid_argument("symbol is not a constellation point");
}

double pairwise_min_distance(std::span<const cplx> points) {
    if (points.size() < 2)
        throw std::invalid_argument("min distance needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            best = std::min(best, std::abs(points[i] - points[j]));
    return best;
}

}  // namespace noma
