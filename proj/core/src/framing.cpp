#include "apvd/framing.hpp"

#include <array>

#include "apvd/crc8.hpp"
#include "apvd/errors.hpp"

namespace apvd {

Bitstream encode_header(PayloadType type, std::uint64_t payload_len_bits) {
    if (payload_len_bits >= (std::uint64_t{1} << 32))
        throw RangeError("encode_header: payload length exceeds 2^32-1 bits");
    std::array<std::uint8_t, 7> head = {
        kHeaderMagic,
        kHeaderVersion,
        static_cast<std::uint8_t>(type),
        static_cast<std::uint8_t>(payload_len_bits >> 24),
        static_cast<std::uint8_t>(payload_len_bits >> 16),
        static_cast<std::uint8_t>(payload_len_bits >> 8),
        static_cast<std::uint8_t>(payload_len_bits),
    };
    Bitstream s;
    for (auto b : head) s.append_byte(b);
    s.append_byte(crc8(head));
    return s;
}

PayloadHeader decode_header(const Bitstream& stream, std::size_t cursor) {
    if (cursor + kHeaderBits > stream.size())
        throw Truncated("decode_header: fewer than 64 bits available");
    std::array<std::uint8_t, 8> bytes{};
    for (int i = 0; i < 8; ++i)
        bytes[i] = static_cast<std::uint8_t>(stream.read(cursor + 8u * i, 8));
    if (bytes[0] != kHeaderMagic || bytes[1] != kHeaderVersion)
        throw InvalidHeader("decode_header: bad magic or version");
    if (crc8({bytes.data(), 7}) != bytes[7])
        throw InvalidHeader("decode_header: crc mismatch");
    auto type = bytes[2];
    if (type != 0x01 && type != 0x02 && type != 0x03)
        throw InvalidHeader("decode_header: unknown payload type");
    std::uint32_t len = (std::uint32_t{bytes[3]} << 24) |
                        (std::uint32_t{bytes[4]} << 16) |
                        (std::uint32_t{bytes[5]} << 8) | bytes[6];
    return {static_cast<PayloadType>(type), len};
}

namespace {

void append_image_body(Bitstream& s, const ImageBuffer& img) {
    s.write(static_cast<std::uint32_t>(img.width), 16);
    s.write(static_cast<std::uint32_t>(img.height), 16);
    // row-major, interleaved per pixel
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            for (int ch = 0; ch < img.channels; ++ch)
                s.append_byte(img.at(ch, r, c));
}

} // namespace

Bitstream frame_payload(const Payload& payload) {
    if (const auto* bytes = std::get_if<std::vector<std::uint8_t>>(&payload)) {
        Bitstream s = encode_header(PayloadType::RawBytes,
                                    std::uint64_t{bytes->size()} * 8);
        for (auto b : *bytes) s.append_byte(b);
        return s;
    }
    const auto& img = std::get<ImageBuffer>(payload);
    if (img.width >= 65536 || img.height >= 65536)
        throw RangeError("frame_payload: image dimensions must fit in 16 bits");
    std::uint64_t len = 32 + std::uint64_t{img.sample_count()} * 8;
    Bitstream s = encode_header(
        img.channels == 3 ? PayloadType::RgbImage : PayloadType::GrayImage, len);
    append_image_body(s, img);
    return s;
}

Payload parse_payload(const Bitstream& bits) {
    PayloadHeader h = decode_header(bits, 0);
    if (kHeaderBits + std::uint64_t{h.payload_len_bits} > bits.size())
        throw Truncated("parse_payload: stream shorter than declared length");
    std::size_t cur = kHeaderBits;
    if (h.payload_type == PayloadType::RawBytes) {
        if (h.payload_len_bits % 8 != 0)
            throw MalformedPayload("parse_payload: raw length not byte-aligned");
        std::vector<std::uint8_t> out(h.payload_len_bits / 8);
        for (auto& b : out) {
            b = static_cast<std::uint8_t>(bits.read(cur, 8));
            cur += 8;
        }
        return out;
    }
    int channels = h.payload_type == PayloadType::RgbImage ? 3 : 1;
    if (h.payload_len_bits < 32)
        throw MalformedPayload("parse_payload: image payload shorter than inner header");
    int w = static_cast<int>(bits.read(cur, 16));
    int h_px = static_cast<int>(bits.read(cur + 16, 16));
    cur += 32;
    std::uint64_t expect = 32 + std::uint64_t{static_cast<std::uint64_t>(w)} *
                                    h_px * channels * 8;
    if (expect != h.payload_len_bits)
        throw MalformedPayload("parse_payload: length inconsistent with dimensions");
    ImageBuffer img(w, h_px, channels);
    for (int r = 0; r < h_px; ++r)
        for (int c = 0; c < w; ++c)
            for (int ch = 0; ch < channels; ++ch) {
                img.at(ch, r, c) = static_cast<std::uint8_t>(bits.read(cur, 8));
                cur += 8;
            }
    return img;
}

} // namespace apvd
