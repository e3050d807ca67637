#include "apvd/prng.hpp"

#include <numeric>

namespace apvd {

SlotPermutation permutation(std::size_t n, StegoKey key) {
    SlotPermutation p;
    p.order.resize(n);
    std::iota(p.order.begin(), p.order.end(), 0u);
    SplitMix64 gen(key.seed);
    for (std::size_t i = n; i-- > 1;) {
        std::size_t j = static_cast<std::size_t>(gen.next() % (i + 1));
        std::swap(p.order[i], p.order[j]);
    }
    return p;
}

SlotPermutation identity_permutation(std::size_t n) {
    SlotPermutation p;
    p.order.resize(n);
    std::iota(p.order.begin(), p.order.end(), 0u);
    return p;
}

} // namespace apvd
