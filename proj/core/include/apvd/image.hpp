#ifndef APVD_IMAGE_HPP
#define APVD_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "apvd/errors.hpp"

namespace apvd {

/// Raster of 8-bit samples, stored channel-planar: all of channel 0,
/// then channel 1, then channel 2. channels is 1 (gray) or 3 (RGB).
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> samples;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int c, std::uint8_t fill = 0)
        : width(w), height(h), channels(c),
          samples(static_cast<std::size_t>(w) * h * c, fill) {
        if (w < 0 || h < 0 || (c != 1 && c != 3))
            throw ContractViolation("ImageBuffer: bad dimensions");
    }

    std::size_t sample_count() const { return samples.size(); }

    std::size_t index(int ch, int row, int col) const {
        return (static_cast<std::size_t>(ch) * height + row) * width + col;
    }

    std::uint8_t at(int ch, int row, int col) const {
        return samples[index(ch, row, col)];
    }
    std::uint8_t& at(int ch, int row, int col) {
        return samples[index(ch, row, col)];
    }

    bool operator==(const ImageBuffer&) const = default;
};

} // namespace apvd

#endif
