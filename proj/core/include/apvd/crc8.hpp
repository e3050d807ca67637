#ifndef APVD_CRC8_HPP
#define APVD_CRC8_HPP

#include <cstddef>
#include <cstdint>
#include <span>

namespace apvd {

/// CRC-8, polynomial 0x07, init 0x00, no reflection, no final XOR.
inline std::uint8_t crc8(std::span<const std::uint8_t> data) {
    std::uint8_t reg = 0x00;
    for (std::uint8_t byte : data) {
        reg ^= byte;
        for (int i = 0; i < 8; ++i)
            reg = (reg & 0x80) ? static_cast<std::uint8_t>((reg << 1) ^ 0x07)
                               : static_cast<std::uint8_t>(reg << 1);
    }
    return reg;
}

} // namespace apvd

#endif
