#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "apvd/metrics.hpp"
#include "support/metrics_oracle.hpp"
#include "support/testutil.hpp"

using namespace apvd;
using apvd::test::oracle_mse;
using apvd::test::oracle_psnr;
using apvd::test::oracle_ssim;
using apvd::test::oracle_uiq;
using apvd::test::random_bits;
using apvd::test::random_image;

namespace {
bool close_rel(double a, double b) { return apvd::test::oracle_close(a, b); }
} // namespace

TEST_CASE("mse basics") {
    ImageBuffer a(3, 3, 1, 0), b(3, 3, 1, 0);
    CHECK(mse(a, b) == 0.0);
    ImageBuffer c(3, 3, 1, 1);
    CHECK(mse(a, c) == 1.0);
    ImageBuffer d(3, 3, 1, 255);
    CHECK(mse(a, d) == 65025.0);
    CHECK_THROWS_AS(mse(a, ImageBuffer(2, 2, 1)), DimensionMismatch);
}

TEST_CASE("psnr basics") {
    ImageBuffer a(2, 2, 1, 0), b(2, 2, 1, 1);
    CHECK(psnr(a, b) == doctest::Approx(48.1308).epsilon(1e-5));
    CHECK(std::isinf(psnr(a, a)));
}

TEST_CASE("ssim basics") {
    std::mt19937_64 rng(21);
    ImageBuffer x = random_image(rng, 8, 8, 1);
    CHECK(ssim_global(x, x) == doctest::Approx(1.0).epsilon(1e-12));

    ImageBuffer lo(4, 4, 1, 0), hi(4, 4, 1, 255);
    // zero variances: SSIM degenerates to C1/(255^2 + C1)
    CHECK(ssim_global(lo, hi) ==
          doctest::Approx(6.5025 / (65025.0 + 6.5025)).epsilon(1e-6));
}

TEST_CASE("ssim single-sample perturbation matches the oracle") {
    std::mt19937_64 rng(22);
    ImageBuffer x = apvd::test::natural_image(rng, 64, 64, 1);
    ImageBuffer y = x;
    y.samples[1000] = static_cast<std::uint8_t>(y.samples[1000] ^ 1);
    CHECK(close_rel(ssim_global(x, y), oracle_ssim(x, y)));
    CHECK(ssim_global(x, y) < 1.0);
}

TEST_CASE("uiq basics") {
    std::mt19937_64 rng(23);
    ImageBuffer x = random_image(rng, 8, 8, 1);
    CHECK(uiq(x, x) == doctest::Approx(1.0).epsilon(1e-12));

    ImageBuffer flat(4, 4, 1, 7);
    CHECK(uiq(flat, flat) == 1.0); // degenerate rule
    ImageBuffer flat2(4, 4, 1, 9);
    CHECK(uiq(flat, flat2) == 0.0);

    // y = 255 - x for non-constant x gives negative uiq
    ImageBuffer a(2, 2, 1);
    a.samples = {10, 20, 30, 200};
    ImageBuffer b = a;
    for (auto& s : b.samples) s = static_cast<std::uint8_t>(255 - s);
    CHECK(uiq(a, b) < 0.0);
    CHECK(close_rel(uiq(a, b), oracle_uiq(a, b)));
}

TEST_CASE("ber") {
    std::mt19937_64 rng(24);
    Bitstream a = random_bits(rng, 1000);
    CHECK(ber(a, a) == 0.0);
    Bitstream flip;
    for (std::size_t i = 0; i < a.size(); ++i) flip.push_bit(1 - a.bit(i));
    CHECK(ber(a, flip) == 1.0);
    CHECK(ber(Bitstream{}, Bitstream{}) == 0.0);
    CHECK_THROWS_AS(ber(a, Bitstream{}), DimensionMismatch);

    Bitstream x = random_bits(rng, 100000), y = random_bits(rng, 100000);
    CHECK(std::abs(ber(x, y) - 0.5) <= 0.01);
}

TEST_CASE("oracle equivalence on small random pairs") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 1000; ++trial) {
        int w = 1 + static_cast<int>(rng() % 4);
        int h = 1 + static_cast<int>(rng() % 4);
        int c = (rng() % 2) ? 3 : 1;
        ImageBuffer x = random_image(rng, w, h, c);
        ImageBuffer y = (trial % 5 == 0) ? x : random_image(rng, w, h, c);
        CHECK(close_rel(mse(x, y), oracle_mse(x, y)));
        CHECK(close_rel(psnr(x, y), oracle_psnr(x, y)));
        CHECK(close_rel(ssim_global(x, y), oracle_ssim(x, y)));
        CHECK(close_rel(uiq(x, y), oracle_uiq(x, y)));
    }
}

TEST_CASE("symmetry and bounds") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 200; ++trial) {
        ImageBuffer x = random_image(rng, 6, 6, 1);
        ImageBuffer y = random_image(rng, 6, 6, 1);
        CHECK(mse(x, y) == mse(y, x));
        CHECK(ssim_global(x, y) == doctest::Approx(ssim_global(y, x)).epsilon(1e-12));
        CHECK(uiq(x, y) == doctest::Approx(uiq(y, x)).epsilon(1e-12));
        CHECK(ssim_global(x, y) >= -1.0 - 1e-12);
        CHECK(ssim_global(x, y) <= 1.0 + 1e-12);
        CHECK(uiq(x, y) >= -1.0 - 1e-9);
        CHECK(uiq(x, y) <= 1.0 + 1e-9);
    }
}

TEST_CASE("psnr decreases as mse increases") {
    ImageBuffer base(8, 8, 1, 100);
    double prev = std::numeric_limits<double>::infinity();
    for (int delta = 1; delta <= 100; delta += 9) {
        ImageBuffer moved(8, 8, 1, static_cast<std::uint8_t>(100 + delta));
        double p = psnr(base, moved);
        CHECK(p < prev);
        prev = p;
    }
}
