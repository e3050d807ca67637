#ifndef APVD_METRICS_HPP
#define APVD_METRICS_HPP

#include <optional>

#include "apvd/bitstream.hpp"
#include "apvd/image.hpp"

namespace apvd {

struct QualityReport {
    double mse = 0;
    double psnr = 0; // +infinity when mse == 0
    double ssim = 0;
    double uiq = 0;
    std::optional<double> ber; // payload comparisons only
};

/// Mean of squared sample differences, channels pooled. Integer sums,
/// one division.
double mse(const ImageBuffer& x, const ImageBuffer& y);

/// 10*log10(255^2 / MSE); +infinity when images are identical.
double psnr(const ImageBuffer& x, const ImageBuffer& y);

/// Single global-statistics SSIM per channel, population variance,
/// C1 = (0.01*255)^2, C2 = (0.03*255)^2; color = mean over channels.
double ssim_global(const ImageBuffer& x, const ImageBuffer& y);

/// Universal image quality index, global statistics per channel.
/// Degenerate denominator: 1.0 when the channels are sample-identical,
/// else 0.0.
double uiq(const ImageBuffer& x, const ImageBuffer& y);

/// Fraction of differing bits; 0 for empty streams. Lengths must match.
double ber(const Bitstream& a, const Bitstream& b);

QualityReport compare_images(const ImageBuffer& x, const ImageBuffer& y);

} // namespace apvd

#endif
