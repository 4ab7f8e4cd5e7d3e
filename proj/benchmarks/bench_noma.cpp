#include <benchmark/benchmark.h>

#include <vector>

#include "noma/channel.hpp"
#include "noma/constellation.hpp"
#include "noma/detection.hpp"
#include "noma/montecarlo.hpp"
#include "noma/random.hpp"

namespace {

struct Instance {
    noma::ReceivedVector r;
    noma::ChannelSample h;
};

std::vector<Instance> make_instances(const noma::Constellation& c, double alpha,
                                     std::size_t n) {
    noma::RandomStream s = noma::derive_stream(1, {noma::label_hash("bench")});
    const double u = std::sqrt(alpha), v = std::sqrt(1.0 - alpha);
    std::vector<Instance> out(n);
    for (auto& inst : out) {
        inst.h = noma::sample_channel(noma::CorrelationParam(0.9), s);
        const int i = static_cast<int>(s.uniform_below(c.size));
        const int j = static_cast<int>(s.uniform_below(c.size));
        const noma::NoiseVector w = noma::sample_noise(0.05, s);
        inst.r.r1 = inst.h.h11 * (u * c.points[i]) +
                    inst.h.h12 * (v * c.points[j]) + w.w1;
        inst.r.r2 = inst.h.h21 * (u * c.points[i]) +
                    inst.h.h22 * (v * c.points[j]) + w.w2;
    }
    return out;
}

void detect_loop(benchmark::State& state, const char* name, bool sic) {
    const noma::Constellation c = noma::make_constellation(name);
    const noma::PowerSplit split(sic ? 0.9 : 0.8);
    const auto instances = make_instances(c, split.alpha, 1024);
    std::size_t k = 0;
    for (auto _ : state) {
        const Instance& inst = instances[k++ & 1023];
        const noma::DetectionResult d =
            sic ? noma::sic_detect(inst.r, inst.h, split, c)
                : noma::ml_detect(inst.r, inst.h, split, c);
        benchmark::DoNotOptimize(d.metric);
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_MlDetectQpsk(benchmark::State& state) { detect_loop(state, "qpsk", false); }
void BM_MlDetect16qam(benchmark::State& state) { detect_loop(state, "16qam", false); }
void BM_SicDetectQpsk(benchmark::State& state) { detect_loop(state, "qpsk", true); }
void BM_SicDetect16qam(benchmark::State& state) { detect_loop(state, "16qam", true); }

void BM_SampleChannel(benchmark::State& state) {
    noma::RandomStream s = noma::derive_stream(1, {noma::label_hash("bench-ch")});
    const noma::CorrelationParam gamma(0.9);
    for (auto _ : state) {
        const noma::ChannelSample h = noma::sample_channel(gamma, s);
        benchmark::DoNotOptimize(h.h22);
    }
    state.SetItemsProcessed(state.iterations());
}

// end-to-end symbol throughput of the simulation pipeline, one chunk per run
void simulate_point(benchmark::State& state, const char* name) {
    noma::SweepConfig cfg;
    cfg.constellation_name = name;
    cfg.gammas = {0.9};
    cfg.alphas = {0.8};
    cfg.snr_db_grid = {20.0};
    cfg.target_bit_errors = 100;
    cfg.max_symbols = 16384;
    cfg.master_seed = 1;
    for (auto _ : state) {
        const noma::BerPoint p = noma::run_point(cfg, 0.9, 0.8, 20.0, 1);
        benchmark::DoNotOptimize(p.ber_avg);
    }
    state.SetItemsProcessed(state.iterations() * 16384);
}

void BM_SimulateQpsk(benchmark::State& state) { simulate_point(state, "qpsk"); }
void BM_Simulate16qam(benchmark::State& state) { simulate_point(state, "16qam"); }

}  // namespace

BENCHMARK(BM_MlDetectQpsk);
BENCHMARK(BM_MlDetect16qam);
BENCHMARK(BM_SicDetectQpsk);
BENCHMARK(BM_SicDetect16qam);
BENCHMARK(BM_SampleChannel);
BENCHMARK(BM_SimulateQpsk);
BENCHMARK(BM_Simulate16qam);

BENCHMARK_MAIN();
