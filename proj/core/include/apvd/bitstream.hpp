#ifndef APVD_BITSTREAM_HPP
#define APVD_BITSTREAM_HPP

#include <cstdint>
#include <vector>

#include "apvd/errors.hpp"

namespace apvd {

/// Append-only bit sequence, MSB-first within each written value.
/// Bits are packed into bytes; bit i lives at bytes_[i/8], mask 0x80>>(i%8).
class Bitstream {
public:
    Bitstream() = default;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    void push_bit(int bit) {
        if ((size_ & 7) == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
        ++size_;
    }

    int bit(std::size_t i) const {
        if (i >= size_) throw RangeError("Bitstream: bit index out of range");
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
    }

    /// Appends the k low bits of value, MSB first. k in 1..32.
    void write(std::uint32_t value, int k) {
        if (k < 1 || k > 32)
            throw ContractViolation("Bitstream::write: k out of 1..32");
        if (k < 32 && value >= (std::uint32_t{1} << k))
            throw ContractViolation("Bitstream::write: value does not fit in k bits");
        for (int i = k - 1; i >= 0; --i)
            push_bit(static_cast<int>((value >> i) & 1u));
    }

    /// Reads k bits at cursor, MSB first. Inverse of write.
    std::uint32_t read(std::size_t cursor, int k) const {
        if (k < 1 || k > 32)
            throw ContractViolation("Bitstream::read: k out of 1..32");
        if (cursor + k > size_)
            throw RangeError("Bitstream::read: out of bounds");
        std::uint32_t v = 0;
        for (int i = 0; i < k; ++i)
            v = (v << 1) | static_cast<std::uint32_t>(bit(cursor + i));
        return v;
    }

    void append_byte(std::uint8_t b) { write(b, 8); }

    void append(const Bitstream& other) {
        for (std::size_t i = 0; i < other.size_; ++i)
            push_bit(other.bit(i));
    }

    void truncate(std::size_t new_size) {
        if (new_size > size_)
            throw RangeError("Bitstream::truncate: growing not allowed");
        size_ = new_size;
        bytes_.resize((size_ + 7) / 8);
        if (size_ & 7)
            bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (size_ & 7));
    }

    static Bitstream from_bytes(const std::vector<std::uint8_t>& bytes) {
        Bitstream s;
        for (auto b : bytes) s.append_byte(b);
        return s;
    }

    /// Whole bytes only; size() must be a multiple of 8.
    std::vector<std::uint8_t> to_bytes() const {
        if (size_ & 7)
            throw ContractViolation("Bitstream::to_bytes: not byte-aligned");
        return bytes_;
    }

    bool operator==(const Bitstream&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

} // namespace apvd

#endif
