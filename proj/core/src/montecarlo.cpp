#include "noma/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "noma/channel.hpp"
#include "noma/detection.hpp"
#include "noma/random.hpp"
#include "noma/superposition.hpp"

namespace noma {

const char* detector_name(Detector d) {
    return d == Detector::ml ? "ml" : "sic";
}

Detector parse_detector(const std::string& name) {
    if (name == "ml") return Detector::ml;
    if (name == "sic") return Detector::sic;
    throw std::invalid_argument("unknown detector '" + name +
                                "' (expected ml or sic)");
}

void SweepConfig::validate() const {
    make_constellation(constellation_name);
    if (gammas.empty()) throw std::invalid_argument("no correlation values");
    for (const double g : gammas) static_cast<void>(CorrelationParam(g));
    if (alphas.empty()) throw std::invalid_argument("no power splits");
    for (const double a : alphas) static_cast<void>(PowerSplit(a));
    if (snr_db_grid.empty()) throw std::invalid_argument("no SNR grid");
    for (std::size_t k = 1; k < snr_db_grid.size(); ++k)
        if (!(snr_db_grid[k] > snr_db_grid[k - 1]))
            throw std::invalid_argument("SNR grid must be strictly increasing");
    if (max_symbols < 1000)
        throw std::invalid_argument("max_symbols must be at least 1000");
    if (target_bit_errors < 100)
        throw std::invalid_argument("target_bit_errors must be at least 100");
}

namespace {

// Trials per stopping-decision unit. Early stopping only acts at chunk
// boundaries, so the symbol count at a grid point is a pure function of the
// config, never of worker scheduling.
constexpr std::uint64_t kChunkSymbols = 16384;

struct ChunkStats {
    std::uint64_t symbols = 0;
    std::uint64_t errors_u1 = 0;
    std::uint64_t errors_u2 = 0;
    std::uint64_t ties = 0;
};

struct PointContext {
    Constellation c;
    PowerSplit split;
    CorrelationParam gamma;
    double n0 = 0.0;
    Detector detector = Detector::ml;
    std::uint64_t master_seed = 0;
    std::array<std::uint64_t, 6> labels{};  // chunk index appended per chunk
};

ChunkStats simulate_chunk(const PointContext& ctx, std::uint64_t chunk_index,
                          std::uint64_t n_trials) {
    std::array<std::uint64_t, 7> labels;
    std::copy(ctx.labels.begin(), ctx.labels.end(), labels.begin());
    labels[6] = chunk_index;
    RandomStream stream = derive_stream(ctx.master_seed, labels);

    const double u = std::sqrt(ctx.split.alpha);
    const double v = std::sqrt(1.0 - ctx.split.alpha);
    const int m = ctx.c.size;

    ChunkStats st;
    st.symbols = n_trials;
    for (std::uint64_t trial = 0; trial < n_trials; ++trial) {
        const int i = static_cast<int>(stream.uniform_below(m));
        const int j = static_cast<int>(stream.uniform_below(m));
        const ChannelSample h = sample_channel(ctx.gamma, stream);
        const NoiseVector w = sample_noise(ctx.n0, stream);
        const cplx x1 = u * ctx.c.points[i];
        const cplx x2 = v * ctx.c.points[j];
        const ReceivedVector r{h.h11 * x1 + h.h12 * x2 + w.w1,
                               h.h21 * x1 + h.h22 * x2 + w.w2};
        const DetectionResult det =
            ctx.detector == Detector::ml
                ? ml_detect(r, h, ctx.split, ctx.c)
                : sic_detect(r, h, ctx.split, ctx.c);
        const auto [e1, e2] = count_bit_errors(i, j, det, ctx.c);
        st.errors_u1 += static_cast<std::uint64_t>(e1);
        st.errors_u2 += static_cast<std::uint64_t>(e2);
        st.ties += det.tie ? 1 : 0;
    }
    return st;
}

}  // namespace

BerPoint run_point(const SweepConfig& cfg, double gamma, double alpha,
                   double snr_db, int workers) {
    if (cfg.max_symbols < 1000)
        throw std::invalid_argument("max_symbols must be at least 1000");
    if (cfg.target_bit_errors < 100)
        throw std::invalid_argument("target_bit_errors must be at least 100");

    PointContext ctx{make_constellation(cfg.constellation_name),
                     PowerSplit(alpha), CorrelationParam(gamma)};
    ctx.n0 = ctx.c.avg_energy / std::pow(10.0, snr_db / 10.0);
    ctx.detector = cfg.detector;
    ctx.master_seed = cfg.master_seed;
    ctx.labels = {label_hash("ber-point"),
                  label_hash(cfg.constellation_name),
                  static_cast<std::uint64_t>(cfg.detector),
                  std::bit_cast<std::uint64_t>(gamma),
                  std::bit_cast<std::uint64_t>(alpha),
                  std::bit_cast<std::uint64_t>(snr_db)};

    const std::uint64_t full_chunks = cfg.max_symbols / kChunkSymbols;
    const std::uint64_t tail = cfg.max_symbols % kChunkSymbols;
    const std::uint64_t chunk_count = full_chunks + (tail ? 1 : 0);
    const auto chunk_size = [&](std::uint64_t idx) {
        return idx < full_chunks ? kChunkSymbols : tail;
    };

    const std::uint64_t wave = static_cast<std::uint64_t>(std::max(workers, 1));
    std::uint64_t symbols = 0, errors_u1 = 0, errors_u2 = 0, ties = 0;
    bool reached_target = false;

    for (std::uint64_t start = 0; start < chunk_count && !reached_target;
         start += wave) {
        const std::uint64_t end = std::min(chunk_count, start + wave);
        std::vector<ChunkStats> results(end - start);
        if (wave == 1) {
            results[0] = simulate_chunk(ctx, start, chunk_size(start));
        } else {
            std::vector<std::thread> pool;
            pool.reserve(end - start);
            for (std::uint64_t idx = start; idx < end; ++idx)
                pool.emplace_back([&, idx] {
                    results[idx - start] = simulate_chunk(ctx, idx, chunk_size(idx));
                });
            for (auto& th : pool) th.join();
        }
        // Accumulate strictly in chunk order; results past the stopping chunk
        // are discarded so every worker count sees the same totals.
        for (const ChunkStats& st : results) {
            symbols += st.symbols;
            errors_u1 += st.errors_u1;
            errors_u2 += st.errors_u2;
            ties += st.ties;
            if (errors_u1 >= cfg.target_bit_errors &&
                errors_u2 >= cfg.target_bit_errors) {
                reached_target = true;
                break;
            }
        }
    }

    BerPoint pt;
    pt.gamma = gamma;
    pt.alpha = alpha;
    pt.snr_db = snr_db;
    pt.symbols_simulated = symbols;
    pt.bit_errors_u1 = errors_u1;
    pt.bit_errors_u2 = errors_u2;
    const double bits =
        static_cast<double>(symbols) * ctx.c.bits_per_symbol;
    pt.ber_u1 = static_cast<double>(errors_u1) / bits;
    pt.ber_u2 = static_cast<double>(errors_u2) / bits;
    pt.ber_avg = static_cast<double>(errors_u1 + errors_u2) / (2.0 * bits);
    pt.tie_fraction = static_cast<double>(ties) / static_cast<double>(symbols);
    pt.capped = !reached_target;
    return pt;
}

std::vector<BerCurve> run_sweep(const SweepConfig& cfg, int workers) {
    cfg.validate();
    std::vector<BerCurve> curves;
    curves.reserve(cfg.gammas.size() * cfg.alphas.size());
    for (const double gamma : cfg.gammas)
        for (const double alpha : cfg.alphas) {
            BerCurve curve;
            curve.gamma = gamma;
            curve.alpha = alpha;
            curve.detector = cfg.detector;
            curve.points.reserve(cfg.snr_db_grid.size());
            for (const double snr_db : cfg.snr_db_grid)
                curve.points.push_back(run_point(cfg, gamma, alpha, snr_db, workers));
            curves.push_back(std::move(curve));
        }
    return curves;
}

std::optional<double> crossing_snr(const BerCurve& curve, double ber_level) {
    if (!(ber_level > 0.0))
        throw std::invalid_argument("BER level must be positive");
    const auto& pts = curve.points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (pts[k].ber_avg > ber_level) continue;
        if (k == 0) return std::nullopt;  // already below the level at grid start
        const double b0 = pts[k - 1].ber_avg;
        const double b1 = pts[k].ber_avg;
        const double s0 = pts[k - 1].snr_db;
        const double s1 = pts[k].snr_db;
        if (!(b1 > 0.0)) return s1;
        const double t =
            (std::log(b0) - std::log(ber_level)) / (std::log(b0) - std::log(b1));
        return s0 + t * (s1 - s0);
    }
    return std::nullopt;
}

std::optional<double> snr_gap(const BerCurve& a, const BerCurve& b,
                              double ber_level) {
    const auto ca = crossing_snr(a, ber_level);
    const auto cb = crossing_snr(b, ber_level);
    if (!ca || !cb) return std::nullopt;
    return *ca - *cb;
}

double rayleigh_qpsk_ber(double per_bit_snr) {
    if (per_bit_snr < 0.0)
        throw std::invalid_argument("per-bit SNR must be non-negative");
    return 0.5 * (1.0 - std::sqrt(per_bit_snr / (1.0 + per_bit_snr)));
}

std::vector<CalibrationPoint> validate_single_user(
    std::span<const double> snr_db_grid, std::uint64_t seed,
    std::uint64_t target_bit_errors, std::uint64_t max_symbols) {
    const Constellation c = make_qpsk();
    std::vector<CalibrationPoint> out;
    out.reserve(snr_db_grid.size());
    for (const double snr_db : snr_db_grid) {
        const double g = std::pow(10.0, snr_db / 10.0);
        // Unit-energy 2-bit alphabet: Eb = 1/2, so N0 = Eb/g = 1/(2g).
        const double n0 = 1.0 / (2.0 * g);
        RandomStream stream =
            derive_stream(seed, {label_hash("single-user-qpsk"),
                                 std::bit_cast<std::uint64_t>(snr_db)});
        std::uint64_t errors = 0, symbols = 0;
        while (errors < target_bit_errors && symbols < max_symbols) {
            const int i = static_cast<int>(stream.uniform_below(4));
            const cplx h = stream.complex_normal(1.0);
            const cplx w = stream.complex_normal(n0);
            const cplx y = h * c.points[i] + w;
            int best = 0;
            double best_metric = std::norm(y - h * c.points[0]);
            for (int k = 1; k < 4; ++k) {
                const double metric = std::norm(y - h * c.points[k]);
                if (metric < best_metric) {
                    best_metric = metric;
                    best = k;
                }
            }
            errors += static_cast<std::uint64_t>(
                std::popcount(static_cast<unsigned>(i ^ best)));
            ++symbols;
        }
        CalibrationPoint p;
        p.snr_db = snr_db;
        p.bit_errors = errors;
        p.bits = symbols * 2;
        p.ber = static_cast<double>(errors) / static_cast<double>(p.bits);
        p.analytic_ber = rayleigh_qpsk_ber(g);
        out.push_back(p);
    }
    return out;
}

}  // namespace noma
