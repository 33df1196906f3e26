// Serial reference kernels against their OpenMP versions.
#include "tq/discform/discform.hpp"
#include "tq/quartic/fibration.hpp"
#include "tq/quartic/lines.hpp"

#include <benchmark/benchmark.h>

namespace {

const tq::FiniteQuadForm& form() {
    static const tq::FiniteQuadForm fq = tq::build_disc_group(tq::make_m_lattice());
    return fq;
}

const tq::TetraQuartic& sample() {
    static const tq::TetraQuartic q =
        tq::build_quartic(tq::QuarticCoefficients::from_values({2, -3, 5, 7, -11, 13, -17, 19, 23, 29, -31, 37}));
    return q;
}

void BM_AutosSerial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tq::enumerate_autos_serial(form()));
}
void BM_AutosParallel(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tq::enumerate_autos(form(), static_cast<int>(st.range(0))));
}

void BM_FibrationsSerial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tq::fibration_survey_serial(sample()));
}
void BM_FibrationsParallel(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tq::fibration_survey(sample(), static_cast<int>(st.range(0))));
}

void BM_LinesSerial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tq::enumerate_lines_serial(sample()));
}
void BM_LinesParallel(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(tq::enumerate_lines(sample(), static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_AutosSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutosParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FibrationsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FibrationsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
