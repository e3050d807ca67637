#include <benchmark/benchmark.h>

#include <random>

#include "apvd/framing.hpp"
#include "apvd/metrics.hpp"
#include "apvd/pipeline.hpp"
#include "support/testutil.hpp"

using namespace apvd;

namespace {

ImageBuffer bench_cover(int w, int h, int c) {
    std::mt19937_64 rng(1);
    return apvd::test::natural_image(rng, w, h, c);
}

void BM_EmbedPair(benchmark::State& state) {
    const RangeTable& t = RangeTable::wu_tsai();
    std::uint32_t s = 0;
    for (auto _ : state) {
        PixelPair out = embed_pair({100, 103}, s & 7, t);
        benchmark::DoNotOptimize(out);
        ++s;
    }
}
BENCHMARK(BM_EmbedPair);

void BM_Permutation(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto p = permutation(n, {42});
        benchmark::DoNotOptimize(p.order.data());
    }
}
BENCHMARK(BM_Permutation)->Arg(1 << 12)->Arg(1 << 17);

void BM_EmbedImage(benchmark::State& state) {
    ImageBuffer cover = bench_cover(512, 512, 1);
    std::mt19937_64 rng(2);
    Bitstream framed = encode_header(PayloadType::RawBytes, 131072);
    framed.append(apvd::test::random_bits(rng, 131072));
    const RangeTable& t = RangeTable::fine();
    for (auto _ : state) {
        ImageBuffer stego = embed(cover, framed, {7}, {}, t);
        benchmark::DoNotOptimize(stego.samples.data());
    }
}
BENCHMARK(BM_EmbedImage)->Unit(benchmark::kMillisecond);

void BM_ExtractImage(benchmark::State& state) {
    ImageBuffer cover = bench_cover(512, 512, 1);
    std::mt19937_64 rng(3);
    Bitstream framed = encode_header(PayloadType::RawBytes, 131072);
    framed.append(apvd::test::random_bits(rng, 131072));
    const RangeTable& t = RangeTable::fine();
    ImageBuffer stego = embed(cover, framed, {7}, {}, t);
    for (auto _ : state) {
        Bitstream out = extract(stego, {7}, {}, t);
        benchmark::DoNotOptimize(out.size());
    }
}
BENCHMARK(BM_ExtractImage)->Unit(benchmark::kMillisecond);

void BM_Metrics(benchmark::State& state) {
    ImageBuffer a = bench_cover(512, 512, 1);
    ImageBuffer b = a;
    b.samples[12345] ^= 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(psnr(a, b));
        benchmark::DoNotOptimize(ssim_global(a, b));
        benchmark::DoNotOptimize(uiq(a, b));
    }
}
BENCHMARK(BM_Metrics)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
