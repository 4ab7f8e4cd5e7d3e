#include "noma/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string_view>

namespace noma {

std::uint64_t RandomStream::uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below needs n > 0");
    const std::uint64_t bucket_limit = std::uint64_t{0} - n;  // 2^64 - n
    for (;;) {
        const std::uint64_t x = next_u64();
        const std::uint64_t r = x % n;
        if (x - r <= bucket_limit) return r;
    }
}

double RandomStream::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    for (;;) {
        const double a = 2.0 * uniform() - 1.0;
        const double b = 2.0 * uniform() - 1.0;
        const double s = a * a + b * b;
        if (s >= 1.0 || s == 0.0) continue;
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = b * f;
        has_cached_ = true;
        return a * f;
    }
}

std::complex<double> RandomStream::complex_normal(double variance) {
    if (variance <= 0.0)
        throw std::invalid_argument("complex_normal needs variance > 0");
    const double scale = std::sqrt(variance / 2.0);
    const double re = scale * normal();
    const double im = scale * normal();
    return {re, im};
}

namespace {

// splitmix64 finalizer: a strong 64-bit permutation used to fold labels
// into a seed one at a time.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream derive_stream(std::uint64_t master_seed,
                           std::span<const std::uint64_t> labels) {
    std::uint64_t h = mix64(master_seed ^ 0x6A09E667F3BCC909ull);
    for (const std::uint64_t label : labels) h = mix64(h ^ label);
    return RandomStream(h);
}

RandomStream derive_stream(std::uint64_t master_seed,
                           std::initializer_list<std::uint64_t> labels) {
    return derive_stream(master_seed,
                         std::span<const std::uint64_t>(labels.begin(), labels.size()));
}

std::uint64_t label_hash(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace noma
