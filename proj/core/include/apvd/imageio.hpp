#ifndef APVD_IMAGEIO_HPP
#define APVD_IMAGEIO_HPP

#include <filesystem>

#include "apvd/image.hpp"

namespace apvd {

enum class ImageFormat {
    PgmBinary, // P5, 1 channel
    PpmBinary, // P6, 3 channels
    Png,       // 8-bit gray or RGB, no alpha
};

/// Format detected from magic bytes (P5 / P6 / PNG signature).
/// PNM maxval must be 255; PNG must be 8-bit gray or RGB without alpha.
ImageBuffer read_image(const std::filesystem::path& path);

/// Lossless write. Format chosen from the file extension when not given
/// (.pgm / .ppm / .png). PGM requires 1 channel, PPM 3; PNG takes either.
void write_image(const ImageBuffer& image, const std::filesystem::path& path);
void write_image(const ImageBuffer& image, const std::filesystem::path& path,
                 ImageFormat format);

/// Nearest-neighbor: output (r,c) samples source
/// (floor(r*H/newH), floor(c*W/newW)).
ImageBuffer resize_nearest(const ImageBuffer& image, int new_width,
                           int new_height);

} // namespace apvd

#endif
