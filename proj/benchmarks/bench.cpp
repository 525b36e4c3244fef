#include <benchmark/benchmark.h>

#include <jetframe/verify.hpp>

using namespace jetframe;

namespace {

JetConfig config_for(int k) { return JetConfig::make(2, k, {k + 1}); }

void BM_AssembleFrame(benchmark::State& st) {
    JetConfig cfg = config_for(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(assemble_frame(cfg));
}
BENCHMARK(BM_AssembleFrame)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RankAtPoint(benchmark::State& st) {
    JetConfig cfg = config_for(static_cast<int>(st.range(0)));
    FrameSpec spec = assemble_frame(cfg);
    std::vector<VectorField> fs;
    for (auto& f : spec.fields) fs.push_back(f.field);
    Point pt = sample_vertical_point(cfg, 1).assignment;
    for (auto _ : st) benchmark::DoNotOptimize(rank_at_point(cfg, fs, pt));
}
BENCHMARK(BM_RankAtPoint)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Lambda(benchmark::State& st) {
    JetConfig cfg = config_for(static_cast<int>(st.range(0)));
    FieldForge forge(cfg);
    VectorField v = forge.T_jq(2, cfg.k);
    for (auto _ : st) benchmark::DoNotOptimize(lambda(cfg, Base::Dz1, v, 1));
}
BENCHMARK(BM_Lambda)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BellInverse(benchmark::State& st) {
    JetConfig cfg = JetConfig::make(2, static_cast<int>(st.range(0)), {2});
    for (auto _ : st) benchmark::DoNotOptimize(check_bell_inverse(cfg));
}
BENCHMARK(BM_BellInverse)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PolyMultiply(benchmark::State& st) {
    JetConfig cfg = config_for(static_cast<int>(st.range(0)));
    auto eqs = defining_equations(cfg, Base::Dt)[0];
    Poly a = eqs.back().num(), b = eqs[eqs.size() - 2].num();
    for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
