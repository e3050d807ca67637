#ifndef APVD_CODEC_HPP
#define APVD_CODEC_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "apvd/errors.hpp"

namespace apvd {

struct PixelPair {
    std::uint8_t first = 0;
    std::uint8_t second = 0;

    bool operator==(const PixelPair&) const = default;
};

/// One difference range [lower, upper] and its derived bit capacity,
/// capacity = floor(log2(upper - lower + 1)).
struct RangeEntry {
    std::uint8_t lower = 0;
    std::uint8_t upper = 0;
    int capacity_bits = 0;
};

/// Ordered, contiguous partition of difference values [0, 255].
class RangeTable {
public:
    /// bounds: ordered (lower, upper) rows covering [0,255] exactly.
    /// Capacity is derived, never supplied. Every range must hold at
    /// least 2 values so capacity >= 1.
    explicit RangeTable(const std::vector<std::pair<int, int>>& bounds);

    const std::vector<RangeEntry>& entries() const { return entries_; }

    const RangeEntry& locate(std::uint8_t d) const {
        return entries_[lookup_[d]];
    }

    /// Classical Wu-Tsai partition: [0,7]3 [8,15]3 [16,31]4 [32,63]5
    /// [64,127]6 [128,255]7.
    static const RangeTable& wu_tsai();

    /// Finer low end, width-4 ranges below 16: trades capacity for
    /// markedly lower distortion on smooth covers.
    static const RangeTable& fine();

    /// "default" -> wu_tsai, "fine" -> fine, otherwise treated as a path
    /// to a config file of ordered "lower upper" rows.
    static RangeTable named(const std::string& name);

    static RangeTable from_file(const std::filesystem::path& path);

private:
    std::vector<RangeEntry> entries_;
    std::array<std::uint8_t, 256> lookup_{};
};

/// D = |second - first|.
inline int difference(PixelPair p) {
    return p.first > p.second ? p.first - p.second : p.second - p.first;
}

/// Narrows the pair's difference to its range's lower bound: with
/// m = D - lower, the lo side gains ceil(m/2) and the hi side loses
/// floor(m/2). Positions are preserved; equal pixels treat first as lo.
PixelPair canonical_base(PixelPair p, const RangeTable& table);

/// Inverse adjustment: lo loses ceil(m/2), hi gains floor(m/2).
/// When base values are equal the first element is treated as lo.
/// Throws BoundaryOverflow if either value leaves [0,255].
PixelPair widen(PixelPair base, int m);

/// True iff widening the pair's canonical base by the full range width
/// stays inside [0,255]. Invariant under embedding, so embedder and
/// extractor always agree on which pairs are skipped.
bool is_usable(PixelPair p, const RangeTable& table);

/// Range capacity if usable, else 0.
int capacity_bits(PixelPair p, const RangeTable& table);

/// Replaces the pair's in-range offset with the secret value s:
/// result difference is lower + s, in the same range. Preconditions:
/// is_usable(p) and s < 2^capacity. Sign of (second-first) is kept
/// whenever the input difference is nonzero.
PixelPair embed_pair(PixelPair p, std::uint32_t s, const RangeTable& table);

struct ExtractedBits {
    std::uint32_t value = 0;
    int bits = 0;
};

/// s = D - lower, k = range capacity. Exact inverse of embed_pair.
ExtractedBits extract_pair(PixelPair p, const RangeTable& table);

} // namespace apvd

#endif
