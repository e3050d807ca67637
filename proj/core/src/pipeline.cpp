#include "apvd/pipeline.hpp"

#include "apvd/errors.hpp"
#include "apvd/framing.hpp"

namespace apvd {

namespace {

// Next k payload bits MSB-first, zero-padded past the end of the stream.
std::uint32_t take_chunk(const Bitstream& s, std::size_t cursor, int k) {
    std::uint32_t v = 0;
    for (int i = 0; i < k; ++i) {
        v <<= 1;
        std::size_t idx = cursor + i;
        if (idx < s.size()) v |= static_cast<std::uint32_t>(s.bit(idx));
    }
    return v;
}

PixelPair slot_pair(const ImageBuffer& img, const Slot& s) {
    int col = 2 * s.col_pair;
    return {img.at(s.channel, s.row, col), img.at(s.channel, s.row, col + 1)};
}

void store_pair(ImageBuffer& img, const Slot& s, PixelPair p) {
    int col = 2 * s.col_pair;
    img.at(s.channel, s.row, col) = p.first;
    img.at(s.channel, s.row, col + 1) = p.second;
}

SlotPermutation slot_order(std::size_t n, StegoKey key, EmbedMethod method) {
    return method == EmbedMethod::ApvdSeq ? identity_permutation(n)
                                          : permutation(n, key);
}

void check_k_lsb(int k) {
    if (k < 1 || k > 4)
        throw ContractViolation("k_lsb must be in 1..4");
}

} // namespace

std::vector<Slot> enumerate_slots(const ImageBuffer& image) {
    std::vector<Slot> slots;
    int pairs_per_row = image.width / 2;
    slots.reserve(static_cast<std::size_t>(image.channels) * image.height *
                  pairs_per_row);
    for (int ch = 0; ch < image.channels; ++ch)
        for (int row = 0; row < image.height; ++row)
            for (int cp = 0; cp < pairs_per_row; ++cp)
                slots.push_back({ch, row, cp});
    return slots;
}

std::uint64_t estimate_capacity(const ImageBuffer& cover,
                                const RangeTable& table) {
    std::uint64_t total = 0;
    for (const Slot& s : enumerate_slots(cover))
        total += static_cast<std::uint64_t>(
            capacity_bits(slot_pair(cover, s), table));
    return total;
}

std::uint64_t lsb_capacity(const ImageBuffer& cover, int k_lsb) {
    check_k_lsb(k_lsb);
    return std::uint64_t{cover.sample_count()} * k_lsb;
}

ImageBuffer embed(const ImageBuffer& cover, const Bitstream& framed,
                  StegoKey key, EmbedMode mode, const RangeTable& table) {
    if (mode.method == EmbedMethod::Lsb)
        return lsb_embed(cover, framed, key, mode.k_lsb);

    std::vector<Slot> slots = enumerate_slots(cover);
    SlotPermutation order = slot_order(slots.size(), key, mode.method);

    ImageBuffer stego = cover;
    std::size_t cursor = 0;
    for (std::uint32_t idx : order.order) {
        if (cursor >= framed.size()) break;
        const Slot& s = slots[idx];
        PixelPair p = slot_pair(stego, s);
        int k = capacity_bits(p, table);
        if (k == 0) continue;
        store_pair(stego, s, embed_pair(p, take_chunk(framed, cursor, k), table));
        cursor += k;
    }
    if (cursor < framed.size())
        throw CapacityExceeded(framed.size(), estimate_capacity(cover, table));
    return stego;
}

Bitstream extract(const ImageBuffer& stego, StegoKey key, EmbedMode mode,
                  const RangeTable& table) {
    if (mode.method == EmbedMethod::Lsb)
        return lsb_extract(stego, key, mode.k_lsb);

    std::vector<Slot> slots = enumerate_slots(stego);
    SlotPermutation order = slot_order(slots.size(), key, mode.method);

    Bitstream acc;
    bool have_header = false;
    std::uint64_t target = 0;
    for (std::uint32_t idx : order.order) {
        PixelPair p = slot_pair(stego, slots[idx]);
        if (!is_usable(p, table)) continue;
        ExtractedBits e = extract_pair(p, table);
        acc.write(e.value, e.bits);
        if (!have_header && acc.size() >= kHeaderBits) {
            PayloadHeader h = decode_header(acc, 0); // throws InvalidHeader
            target = kHeaderBits + h.payload_len_bits;
            have_header = true;
        }
        if (have_header && acc.size() >= target) break;
    }
    if (!have_header)
        throw Truncated("extract: image holds fewer than 64 recoverable bits");
    if (acc.size() < target)
        throw Truncated("extract: image ends before the declared payload");
    acc.truncate(target);
    return acc;
}

ImageBuffer lsb_embed(const ImageBuffer& cover, const Bitstream& framed,
                      StegoKey key, int k_lsb) {
    check_k_lsb(k_lsb);
    SlotPermutation order = permutation(cover.sample_count(), key);
    ImageBuffer stego = cover;
    const std::uint8_t mask = static_cast<std::uint8_t>((1u << k_lsb) - 1);
    std::size_t cursor = 0;
    for (std::uint32_t idx : order.order) {
        if (cursor >= framed.size()) break;
        std::uint8_t& sample = stego.samples[idx];
        sample = static_cast<std::uint8_t>(
            (sample & ~mask) | take_chunk(framed, cursor, k_lsb));
        cursor += k_lsb;
    }
    if (cursor < framed.size())
        throw CapacityExceeded(framed.size(), lsb_capacity(cover, k_lsb));
    return stego;
}

Bitstream lsb_extract(const ImageBuffer& stego, StegoKey key, int k_lsb) {
    check_k_lsb(k_lsb);
    SlotPermutation order = permutation(stego.sample_count(), key);
    const std::uint8_t mask = static_cast<std::uint8_t>((1u << k_lsb) - 1);
    Bitstream acc;
    bool have_header = false;
    std::uint64_t target = 0;
    for (std::uint32_t idx : order.order) {
        acc.write(stego.samples[idx] & mask, k_lsb);
        if (!have_header && acc.size() >= kHeaderBits) {
            PayloadHeader h = decode_header(acc, 0);
            target = kHeaderBits + h.payload_len_bits;
            have_header = true;
        }
        if (have_header && acc.size() >= target) break;
    }
    if (!have_header)
        throw Truncated("lsb_extract: image holds fewer than 64 bits");
    if (acc.size() < target)
        throw Truncated("lsb_extract: image ends before the declared payload");
    acc.truncate(target);
    return acc;
}

} // namespace apvd
