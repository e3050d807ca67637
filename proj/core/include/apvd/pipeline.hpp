#ifndef APVD_PIPELINE_HPP
#define APVD_PIPELINE_HPP

#include <cstdint>
#include <vector>

#include "apvd/bitstream.hpp"
#include "apvd/codec.hpp"
#include "apvd/image.hpp"
#include "apvd/prng.hpp"

namespace apvd {

/// One addressable pixel pair: covers columns 2*col_pair and
/// 2*col_pair+1 of one row in one channel.
struct Slot {
    int channel = 0;
    int row = 0;
    int col_pair = 0;

    bool operator==(const Slot&) const = default;
};

enum class EmbedMethod {
    ApvdPrng, // permuted slot order (the real method)
    ApvdSeq,  // identity slot order baseline
    Lsb,      // k-LSB substitution baseline
};

struct EmbedMode {
    EmbedMethod method = EmbedMethod::ApvdPrng;
    int k_lsb = 1; // only for Lsb, 1..4
};

/// Channel-major, then row-major horizontal non-overlapping pairs.
/// Odd widths leave the last column unpaired. n = C * H * floor(W/2).
std::vector<Slot> enumerate_slots(const ImageBuffer& image);

/// Sum of capacity_bits over all slots. Exact and independent of seed.
std::uint64_t estimate_capacity(const ImageBuffer& cover,
                                const RangeTable& table);

/// k-LSB capacity: one k_lsb chunk per sample.
std::uint64_t lsb_capacity(const ImageBuffer& cover, int k_lsb);

/// Embeds an already framed bitstream (header first). Walks slots in
/// permutation(n, key) order (identity for ApvdSeq), consuming the
/// pair's capacity per usable slot; the final chunk is zero-padded.
/// Untouched slots and unpaired pixels are copied verbatim.
/// Throws CapacityExceeded when slots run out first.
ImageBuffer embed(const ImageBuffer& cover, const Bitstream& framed,
                  StegoKey key, EmbedMode mode, const RangeTable& table);

/// Walks the same slot order, accumulating bits from usable slots;
/// decodes the header once 64 bits are in hand, then reads until
/// 64 + payload_len_bits and truncates the zero padding.
/// Throws InvalidHeader on wrong key/mode/table or a non-stego image,
/// Truncated when the image ends before the declared payload.
Bitstream extract(const ImageBuffer& stego, StegoKey key, EmbedMode mode,
                  const RangeTable& table);

/// k-LSB baselines: samples visited in permutation order over sample
/// indices, low k bits replaced. Same framing rules as APVD.
ImageBuffer lsb_embed(const ImageBuffer& cover, const Bitstream& framed,
                      StegoKey key, int k_lsb);
Bitstream lsb_extract(const ImageBuffer& stego, StegoKey key, int k_lsb);

} // namespace apvd

#endif
