#include "apvd/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "apvd/errors.hpp"

namespace apvd {

namespace {

void check_dims(const ImageBuffer& x, const ImageBuffer& y) {
    if (x.width != y.width || x.height != y.height ||
        x.channels != y.channels)
        throw DimensionMismatch("metric inputs differ in dimensions");
}

struct ChannelStats {
    double mean_x, mean_y, var_x, var_y, cov;
    bool identical;
};

ChannelStats channel_stats(const ImageBuffer& x, const ImageBuffer& y,
                           int ch) {
    std::size_t n = static_cast<std::size_t>(x.width) * x.height;
    std::size_t off = static_cast<std::size_t>(ch) * n;
    std::uint64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    bool identical = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t a = x.samples[off + i], b = y.samples[off + i];
        identical &= (a == b);
        sx += a;
        sy += b;
        sxx += a * a;
        syy += b * b;
        sxy += a * b;
    }
    double nd = static_cast<double>(n);
    ChannelStats s{};
    s.mean_x = sx / nd;
    s.mean_y = sy / nd;
    s.var_x = sxx / nd - s.mean_x * s.mean_x;
    s.var_y = syy / nd - s.mean_y * s.mean_y;
    s.cov = sxy / nd - s.mean_x * s.mean_y;
    s.identical = identical;
    return s;
}

constexpr double kC1 = 6.5025;  // (0.01*255)^2
constexpr double kC2 = 58.5225; // (0.03*255)^2

} // namespace

double mse(const ImageBuffer& x, const ImageBuffer& y) {
    check_dims(x, y);
    if (x.samples.empty()) return 0.0;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
        std::int64_t d = std::int64_t{x.samples[i]} - y.samples[i];
        sum += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(sum) / static_cast<double>(x.samples.size());
}

double psnr(const ImageBuffer& x, const ImageBuffer& y) {
    double e = mse(x, y);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(65025.0 / e);
}

double ssim_global(const ImageBuffer& x, const ImageBuffer& y) {
    check_dims(x, y);
    double total = 0;
    for (int ch = 0; ch < x.channels; ++ch) {
        ChannelStats s = channel_stats(x, y, ch);
        double num = (2 * s.mean_x * s.mean_y + kC1) * (2 * s.cov + kC2);
        double den = (s.mean_x * s.mean_x + s.mean_y * s.mean_y + kC1) *
                     (s.var_x + s.var_y + kC2);
        total += num / den;
    }
    return total / x.channels;
}

double uiq(const ImageBuffer& x, const ImageBuffer& y) {
    check_dims(x, y);
    double total = 0;
    for (int ch = 0; ch < x.channels; ++ch) {
        ChannelStats s = channel_stats(x, y, ch);
        double den = (s.var_x + s.var_y) *
                     (s.mean_x * s.mean_x + s.mean_y * s.mean_y);
        if (den == 0.0) {
            total += s.identical ? 1.0 : 0.0;
        } else {
            total += 4.0 * s.cov * s.mean_x * s.mean_y / den;
        }
    }
    return total / x.channels;
}

double ber(const Bitstream& a, const Bitstream& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("ber: stream lengths differ");
    if (a.empty()) return 0.0;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        diff += static_cast<std::size_t>(a.bit(i) != b.bit(i));
    return static_cast<double>(diff) / static_cast<double>(a.size());
}

QualityReport compare_images(const ImageBuffer& x, const ImageBuffer& y) {
    QualityReport r;
    r.mse = mse(x, y);
    r.psnr = psnr(x, y);
    r.ssim = ssim_global(x, y);
    r.uiq = uiq(x, y);
    return r;
}

} // namespace apvd
