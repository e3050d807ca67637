#include "apvd/codec.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace apvd {

RangeTable::RangeTable(const std::vector<std::pair<int, int>>& bounds) {
    if (bounds.empty())
        throw ContractViolation("RangeTable: empty");
    int expect = 0;
    for (auto [lo, hi] : bounds) {
        if (lo != expect || hi < lo || hi > 255)
            throw ContractViolation("RangeTable: rows must partition [0,255]");
        int width = hi - lo + 1;
        int k = std::bit_width(static_cast<unsigned>(width)) - 1;
        if (k < 1)
            throw ContractViolation("RangeTable: range narrower than 2 values");
        entries_.push_back({static_cast<std::uint8_t>(lo),
                            static_cast<std::uint8_t>(hi), k});
        expect = hi + 1;
    }
    if (expect != 256)
        throw ContractViolation("RangeTable: rows must cover [0,255]");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (int d = entries_[i].lower; d <= entries_[i].upper; ++d)
            lookup_[d] = static_cast<std::uint8_t>(i);
}

const RangeTable& RangeTable::wu_tsai() {
    static const RangeTable t(
        {{0, 7}, {8, 15}, {16, 31}, {32, 63}, {64, 127}, {128, 255}});
    return t;
}

const RangeTable& RangeTable::fine() {
    static const RangeTable t({{0, 3},
                               {4, 7},
                               {8, 11},
                               {12, 15},
                               {16, 31},
                               {32, 63},
                               {64, 127},
                               {128, 255}});
    return t;
}

RangeTable RangeTable::named(const std::string& name) {
    if (name == "default") return wu_tsai();
    if (name == "fine") return fine();
    return from_file(name);
}

RangeTable RangeTable::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open range table file: " + path.string());
    std::vector<std::pair<int, int>> bounds;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        int lo, hi;
        if (row >> lo >> hi) bounds.push_back({lo, hi});
    }
    return RangeTable(bounds);
}

namespace {

struct Oriented {
    int lo, hi;   // values
    bool swapped; // true when p.second holds lo
};

Oriented orient(PixelPair p) {
    if (p.first > p.second) return {p.second, p.first, true};
    return {p.first, p.second, false};
}

PixelPair restore(int lo, int hi, bool swapped) {
    auto a = static_cast<std::uint8_t>(lo);
    auto b = static_cast<std::uint8_t>(hi);
    return swapped ? PixelPair{b, a} : PixelPair{a, b};
}

// Values of the canonical base: difference narrowed to the range's
// lower bound. lo gains ceil(m/2), hi loses floor(m/2).
std::pair<int, int> base_values(int lo, int hi, const RangeEntry& range) {
    int m = (hi - lo) - range.lower;
    return {lo + (m + 1) / 2, hi - m / 2};
}

} // namespace

PixelPair canonical_base(PixelPair p, const RangeTable& table) {
    auto o = orient(p);
    auto [blo, bhi] = base_values(o.lo, o.hi, table.locate(
                                                  static_cast<std::uint8_t>(o.hi - o.lo)));
    return restore(blo, bhi, o.swapped);
}

PixelPair widen(PixelPair base, int m) {
    auto o = orient(base);
    int lo = o.lo - (m + 1) / 2;
    int hi = o.hi + m / 2;
    if (lo < 0 || hi > 255)
        throw BoundaryOverflow("widen: pixel value would leave [0,255]");
    return restore(lo, hi, o.swapped);
}

bool is_usable(PixelPair p, const RangeTable& table) {
    auto o = orient(p);
    const RangeEntry& range =
        table.locate(static_cast<std::uint8_t>(o.hi - o.lo));
    auto [blo, bhi] = base_values(o.lo, o.hi, range);
    int w = range.upper - range.lower;
    return blo - (w + 1) / 2 >= 0 && bhi + w / 2 <= 255;
}

int capacity_bits(PixelPair p, const RangeTable& table) {
    if (!is_usable(p, table)) return 0;
    auto o = orient(p);
    return table.locate(static_cast<std::uint8_t>(o.hi - o.lo)).capacity_bits;
}

PixelPair embed_pair(PixelPair p, std::uint32_t s, const RangeTable& table) {
    auto o = orient(p);
    const RangeEntry& range =
        table.locate(static_cast<std::uint8_t>(o.hi - o.lo));
    if (!is_usable(p, table))
        throw UnusablePair("embed_pair: pair fails the fall-off check");
    if (s >= (std::uint32_t{1} << range.capacity_bits))
        throw SecretOutOfRange("embed_pair: secret exceeds range capacity");
    auto [blo, bhi] = base_values(o.lo, o.hi, range);
    int m = static_cast<int>(s);
    return restore(blo - (m + 1) / 2, bhi + m / 2, o.swapped);
}

ExtractedBits extract_pair(PixelPair p, const RangeTable& table) {
    if (!is_usable(p, table))
        throw UnusablePair("extract_pair: pair fails the fall-off check");
    int d = difference(p);
    const RangeEntry& range = table.locate(static_cast<std::uint8_t>(d));
    return {static_cast<std::uint32_t>(d - range.lower), range.capacity_bits};
}

} // namespace apvd
