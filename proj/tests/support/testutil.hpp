#ifndef APVD_TESTS_TESTUTIL_HPP
#define APVD_TESTS_TESTUTIL_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "apvd/bitstream.hpp"
#include "apvd/image.hpp"

namespace apvd::test {

inline ImageBuffer random_image(std::mt19937_64& rng, int w, int h, int c) {
    ImageBuffer img(w, h, c);
    std::uniform_int_distribution<int> dist(0, 255);
    for (auto& s : img.samples) s = static_cast<std::uint8_t>(dist(rng));
    return img;
}

/// Photographic-plausible cover: smooth low-frequency scene plus mild
/// film-grain noise, clipped away from the extremes of [0,255] only by
/// the clamp itself.
inline ImageBuffer natural_image(std::mt19937_64& rng, int w, int h, int c,
                                 double grain_sigma = 2.0) {
    ImageBuffer img(w, h, c);
    std::normal_distribution<double> grain(0.0, grain_sigma);
    std::uniform_real_distribution<double> phase(0.0, 6.28318);
    for (int ch = 0; ch < c; ++ch) {
        double px = phase(rng), py = phase(rng);
        double fx = 1.0 + 2.0 * phase(rng) / 6.28318;
        double fy = 1.0 + 2.0 * phase(rng) / 6.28318;
        for (int r = 0; r < h; ++r)
            for (int col = 0; col < w; ++col) {
                double v = 120.0 +
                           70.0 * std::sin(fx * 6.28318 * col / w + px) *
                               std::cos(fy * 6.28318 * r / h + py) +
                           grain(rng);
                v = std::min(255.0, std::max(0.0, v));
                img.at(ch, r, col) = static_cast<std::uint8_t>(std::lround(v));
            }
    }
    return img;
}

inline Bitstream random_bits(std::mt19937_64& rng, std::size_t n) {
    Bitstream s;
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < n; ++i) s.push_bit(bit(rng) ? 1 : 0);
    return s;
}

} // namespace apvd::test

#endif
