#ifndef APVD_FRAMING_HPP
#define APVD_FRAMING_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "apvd/bitstream.hpp"
#include "apvd/image.hpp"

namespace apvd {

inline constexpr std::uint8_t kHeaderMagic = 0xA7;
inline constexpr std::uint8_t kHeaderVersion = 0x01;
inline constexpr std::size_t kHeaderBits = 64;

enum class PayloadType : std::uint8_t {
    RawBytes = 0x01,
    GrayImage = 0x02,
    RgbImage = 0x03,
};

/// Parsed 64-bit frame header. Wire layout, big-endian, MSB-first:
/// magic(8) version(8) type(8) payload_len_bits(32) crc8(8),
/// crc over the preceding 7 bytes.
struct PayloadHeader {
    PayloadType payload_type;
    std::uint32_t payload_len_bits;
};

Bitstream encode_header(PayloadType type, std::uint64_t payload_len_bits);

/// Reads 64 bits at cursor. Throws Truncated if fewer are available,
/// InvalidHeader on bad magic/version/crc or unknown payload type.
PayloadHeader decode_header(const Bitstream& stream, std::size_t cursor = 0);

/// A secret in transit: raw bytes or an image.
using Payload = std::variant<std::vector<std::uint8_t>, ImageBuffer>;

/// Header, then for image payloads a 16+16-bit big-endian (width,height)
/// inner header followed by samples row-major (RGB interleaved per pixel);
/// for raw payloads the bytes MSB-first.
Bitstream frame_payload(const Payload& payload);

/// Exact inverse of frame_payload.
Payload parse_payload(const Bitstream& bits);

} // namespace apvd

#endif
