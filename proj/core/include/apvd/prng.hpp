#ifndef APVD_PRNG_HPP
#define APVD_PRNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace apvd {

/// Shared secret: the 64-bit seed driving the slot permutation.
struct StegoKey {
    std::uint64_t seed = 0;
};

/// SplitMix64. Bit-exact across platforms; not cryptographic.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// FNV-1a 64-bit over the passphrase bytes.
inline std::uint64_t derive_seed(std::string_view passphrase) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char b : passphrase) {
        h ^= b;
        h *= 0x00000100000001B3ull;
    }
    return h;
}

/// A bijection on [0, n): order[i] is the slot visited i-th.
struct SlotPermutation {
    std::vector<std::uint32_t> order;

    std::size_t size() const { return order.size(); }
};

/// Fisher-Yates over the identity order, driven by SplitMix64(seed).
/// Index reduction by modulo; bias <= n/2^64 is accepted and documented
/// so independent implementations agree bit-for-bit.
SlotPermutation permutation(std::size_t n, StegoKey key);

/// Identity order, used by the sequential baseline mode.
SlotPermutation identity_permutation(std::size_t n);

} // namespace apvd

#endif
