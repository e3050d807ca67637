#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "apvd/framing.hpp"
#include "apvd/metrics.hpp"
#include "apvd/pipeline.hpp"
#include "support/testutil.hpp"

using namespace apvd;
using apvd::test::natural_image;
using apvd::test::random_bits;
using apvd::test::random_image;

namespace {
const RangeTable& T() { return RangeTable::wu_tsai(); }
}

TEST_CASE("enumerate_slots counting") {
    CHECK(enumerate_slots(ImageBuffer(4, 4, 1)).size() == 8);
    CHECK(enumerate_slots(ImageBuffer(4, 4, 1)).front() == Slot{0, 0, 0});
    CHECK(enumerate_slots(ImageBuffer(5, 2, 1)).size() == 4);
    CHECK(enumerate_slots(ImageBuffer(4, 4, 3)).size() == 24);
    CHECK(enumerate_slots(ImageBuffer(0, 0, 1)).empty());
}

TEST_CASE("estimate_capacity") {
    ImageBuffer flat(512, 512, 1, 128);
    CHECK(estimate_capacity(flat, T()) == 393216);

    ImageBuffer edge(2, 2, 1);
    edge.at(0, 0, 0) = 254;
    edge.at(0, 0, 1) = 255;
    edge.at(0, 1, 0) = 255;
    edge.at(0, 1, 1) = 254;
    CHECK(estimate_capacity(edge, T()) == 0);

    CHECK(estimate_capacity(ImageBuffer(0, 0, 1), T()) == 0);
}

TEST_CASE("embed/extract round trip, gray and color, both apvd modes") {
    std::mt19937_64 rng(11);
    for (EmbedMethod method : {EmbedMethod::ApvdPrng, EmbedMethod::ApvdSeq}) {
        for (int channels : {1, 3}) {
            ImageBuffer cover = natural_image(rng, 64, 48, channels);
            std::vector<std::uint8_t> secret(50);
            for (auto& b : secret) b = static_cast<std::uint8_t>(rng());
            Bitstream framed = frame_payload(secret);
            StegoKey key{rng()};
            EmbedMode mode{method, 1};
            ImageBuffer stego = embed(cover, framed, key, mode, T());
            CHECK(stego.width == cover.width);
            CHECK(stego.height == cover.height);
            CHECK(stego.channels == cover.channels);
            Bitstream back = extract(stego, key, mode, T());
            CHECK(back == framed);
            CHECK(parse_payload(back) == Payload{secret});
        }
    }
}

TEST_CASE("header-only payload touches only header-carrying slots") {
    std::mt19937_64 rng(12);
    ImageBuffer cover = natural_image(rng, 64, 64, 1);
    Bitstream framed = frame_payload(std::vector<std::uint8_t>{});
    CHECK(framed.size() == 64);
    ImageBuffer stego = embed(cover, framed, {7}, {}, T());
    // at most ceil(64/3) = 22 pairs touched
    int touched_pairs = 0;
    for (const Slot& s : enumerate_slots(cover)) {
        int col = 2 * s.col_pair;
        bool diff = cover.at(s.channel, s.row, col) != stego.at(s.channel, s.row, col) ||
                    cover.at(s.channel, s.row, col + 1) != stego.at(s.channel, s.row, col + 1);
        touched_pairs += diff;
    }
    CHECK(touched_pairs <= 22);
}

TEST_CASE("CapacityExceeded at the exact boundary") {
    std::mt19937_64 rng(13);
    ImageBuffer cover = natural_image(rng, 32, 32, 1);
    std::uint64_t cap = estimate_capacity(cover, T());
    REQUIRE(cap > 64);

    Bitstream fits = encode_header(PayloadType::RawBytes,
                                   static_cast<std::uint32_t>(cap - 64));
    Bitstream fill = random_bits(rng, cap - 64);
    fits.append(fill);
    ImageBuffer stego = embed(cover, fits, {5}, {}, T());
    CHECK(extract(stego, {5}, {}, T()) == fits);

    Bitstream over = encode_header(PayloadType::RawBytes,
                                   static_cast<std::uint32_t>(cap - 63));
    over.append(random_bits(rng, cap - 63));
    CHECK_THROWS_AS(embed(cover, over, {5}, {}, T()), CapacityExceeded);
}

TEST_CASE("wrong key, mode, or table fails loudly") {
    std::mt19937_64 rng(14);
    ImageBuffer cover = natural_image(rng, 64, 64, 1);
    std::vector<std::uint8_t> secret = {1, 2, 3, 4};
    Bitstream framed = frame_payload(secret);
    ImageBuffer stego = embed(cover, framed, {42}, {}, T());

    CHECK_THROWS_AS(extract(stego, {43}, {}, T()), InvalidHeader);
    CHECK_THROWS_AS(extract(stego, {42}, {EmbedMethod::ApvdSeq, 1}, T()),
                    InvalidHeader);
    CHECK_THROWS_AS(extract(stego, {42}, {}, RangeTable::fine()),
                    InvalidHeader);
    CHECK_THROWS_AS(extract(cover, {42}, {}, T()), InvalidHeader);
}

TEST_CASE("unpaired odd column is copied verbatim") {
    std::mt19937_64 rng(15);
    ImageBuffer cover = natural_image(rng, 65, 32, 1);
    Bitstream framed = frame_payload(std::vector<std::uint8_t>(64, 0xAB));
    ImageBuffer stego = embed(cover, framed, {9}, {}, T());
    for (int r = 0; r < cover.height; ++r)
        CHECK(stego.at(0, r, 64) == cover.at(0, r, 64));
}

TEST_CASE("per-sample perturbation bound") {
    std::mt19937_64 rng(16);
    ImageBuffer cover = random_image(rng, 48, 48, 1);
    Bitstream framed = frame_payload(std::vector<std::uint8_t>(100, 0x5A));
    ImageBuffer stego = embed(cover, framed, {77}, {}, T());
    for (const Slot& s : enumerate_slots(cover)) {
        int col = 2 * s.col_pair;
        PixelPair before{cover.at(0, s.row, col), cover.at(0, s.row, col + 1)};
        int d = difference(before);
        const RangeEntry& e = T().locate(static_cast<std::uint8_t>(d));
        int bound = (e.upper - e.lower + 1) / 2;
        CHECK(std::abs(int(stego.at(0, s.row, col)) - before.first) <= bound);
        CHECK(std::abs(int(stego.at(0, s.row, col + 1)) - before.second) <= bound);
    }
}

TEST_CASE("channel independence of a single-channel payload") {
    // restrict usable slots to channel 0 by making the other channels
    // unusable everywhere (saturated pairs), then check they never change
    std::mt19937_64 rng(17);
    ImageBuffer cover(16, 16, 3, 255);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            cover.at(0, r, c) = static_cast<std::uint8_t>(100 + (r + c) % 40);
    Bitstream framed = frame_payload(std::vector<std::uint8_t>{0xDE, 0xAD});
    ImageBuffer stego = embed(cover, framed, {3}, {}, T());
    for (int ch = 1; ch < 3; ++ch)
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c) CHECK(stego.at(ch, r, c) == 255);
    CHECK(extract(stego, {3}, {}, T()) == framed);
}

TEST_CASE("lsb capacity and round trip") {
    ImageBuffer gray(512, 512, 1, 128);
    CHECK(lsb_capacity(gray, 1) == 262144);
    CHECK(lsb_capacity(gray, 4) == 4 * 262144);
    CHECK_THROWS_AS(lsb_capacity(gray, 0), ContractViolation);
    CHECK_THROWS_AS(lsb_capacity(gray, 5), ContractViolation);

    std::mt19937_64 rng(18);
    ImageBuffer cover = random_image(rng, 40, 40, 3);
    std::vector<std::uint8_t> secret(200);
    for (auto& b : secret) b = static_cast<std::uint8_t>(rng());
    Bitstream framed = frame_payload(secret);
    for (int k = 1; k <= 4; ++k) {
        EmbedMode mode{EmbedMethod::Lsb, k};
        ImageBuffer stego = embed(cover, framed, {21}, mode, T());
        CHECK(extract(stego, {21}, mode, T()) == framed);
        for (std::size_t i = 0; i < cover.samples.size(); ++i)
            CHECK(std::abs(int(stego.samples[i]) - int(cover.samples[i])) <=
                  (1 << k) - 1);
    }
}

TEST_CASE("full-capacity 1-LSB stego lands near 51.14 dB") {
    std::mt19937_64 rng(19);
    ImageBuffer cover = random_image(rng, 256, 256, 1);
    std::uint64_t cap = lsb_capacity(cover, 1);
    Bitstream framed = encode_header(PayloadType::RawBytes,
                                     static_cast<std::uint32_t>(cap - 64));
    framed.append(random_bits(rng, cap - 64));
    ImageBuffer stego = lsb_embed(cover, framed, {31}, 1);
    double p = psnr(cover, stego);
    CHECK(p == doctest::Approx(51.14).epsilon(0.01));
}

TEST_CASE("randomized end-to-end property") {
    std::mt19937_64 rng(20);
    for (int trial = 0; trial < 30; ++trial) {
        int w = 16 + static_cast<int>(rng() % 100);
        int h = 16 + static_cast<int>(rng() % 100);
        int c = (rng() % 2) ? 3 : 1;
        ImageBuffer cover = (trial % 2) ? natural_image(rng, w, h, c)
                                        : random_image(rng, w, h, c);
        std::uint64_t cap = estimate_capacity(cover, T());
        if (cap <= 64) continue;
        std::uint64_t len = rng() % (cap - 64);
        Bitstream framed = encode_header(PayloadType::RawBytes,
                                         static_cast<std::uint32_t>(len));
        framed.append(random_bits(rng, len));
        StegoKey key{rng()};
        EmbedMethod method =
            (rng() % 2) ? EmbedMethod::ApvdPrng : EmbedMethod::ApvdSeq;
        ImageBuffer stego = embed(cover, framed, key, {method, 1}, T());
        CHECK(extract(stego, key, {method, 1}, T()) == framed);
    }
}
