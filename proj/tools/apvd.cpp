// apvd: embed, extract, and evaluate APVD steganography payloads.

#include <CLI11.hpp>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apvd/codec.hpp"
#include "apvd/errors.hpp"
#include "apvd/framing.hpp"
#include "apvd/imageio.hpp"
#include "apvd/metrics.hpp"
#include "apvd/pipeline.hpp"
#include "apvd/prng.hpp"

namespace fs = std::filesystem;
using namespace apvd;

namespace {

constexpr int kExitCapacity = 2;
constexpr int kExitIo = 3;
constexpr int kExitInvalidHeader = 4;
constexpr int kExitUsage = 64;

struct Options {
    std::string cover, secret, payload, stego, out;
    std::string seed_text, passphrase;
    std::string mode = "apvd-prng";
    std::string table = "default";
    std::string format = "markdown";
    std::string covers_dir, secrets_dir;
    int k_lsb = 1;
};

std::uint64_t parse_seed_text(const std::string& text) {
    std::size_t pos = 0;
    int base = 10;
    std::string body = text;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) {
        base = 16;
        body = body.substr(2);
    }
    std::uint64_t v = std::stoull(body, &pos, base);
    if (pos != body.size())
        throw CLI::ValidationError("--seed", "not a 64-bit integer: " + text);
    return v;
}

StegoKey resolve_key(const Options& o) {
    if (!o.seed_text.empty() && !o.passphrase.empty())
        throw CLI::ValidationError("--seed/--key", "give exactly one");
    if (!o.seed_text.empty()) return {parse_seed_text(o.seed_text)};
    if (!o.passphrase.empty()) return {derive_seed(o.passphrase)};
    if (const char* env = std::getenv("APVD_SEED")) return {parse_seed_text(env)};
    throw CLI::ValidationError("--seed/--key",
                               "required (or set APVD_SEED)");
}

EmbedMode resolve_mode(const Options& o) {
    EmbedMode m;
    m.k_lsb = o.k_lsb;
    if (o.mode == "apvd-prng")
        m.method = EmbedMethod::ApvdPrng;
    else if (o.mode == "apvd-seq")
        m.method = EmbedMethod::ApvdSeq;
    else if (o.mode == "lsb")
        m.method = EmbedMethod::Lsb;
    else
        throw CLI::ValidationError("--mode", "unknown mode: " + o.mode);
    return m;
}

std::vector<std::uint8_t> read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void print_quality(const QualityReport& r, const std::string& format,
                   std::ostream& out) {
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    std::string psnr_text = std::isinf(r.psnr) ? "inf" : num(r.psnr);
    if (format == "json") {
        out << "{\"mse\": " << num(r.mse) << ", \"psnr\": "
            << (std::isinf(r.psnr) ? std::string("\"inf\"") : num(r.psnr))
            << ", \"ssim\": " << num(r.ssim) << ", \"uiq\": " << num(r.uiq);
        if (r.ber) out << ", \"ber\": " << num(*r.ber);
        out << "}\n";
    } else if (format == "csv") {
        out << "mse,psnr,ssim,uiq\n"
            << num(r.mse) << "," << psnr_text << "," << num(r.ssim) << ","
            << num(r.uiq) << "\n";
    } else {
        out << "MSE  " << num(r.mse) << "\nPSNR " << psnr_text << " dB\nSSIM "
            << num(r.ssim) << "\nUIQ  " << num(r.uiq) << "\n";
    }
}

int cmd_embed(const Options& o) {
    StegoKey key = resolve_key(o);
    EmbedMode mode = resolve_mode(o);
    RangeTable table = RangeTable::named(o.table);
    ImageBuffer cover = read_image(o.cover);

    Payload payload;
    if (!o.secret.empty())
        payload = read_image(o.secret);
    else
        payload = read_file_bytes(o.payload);

    Bitstream framed = frame_payload(payload);
    ImageBuffer stego = embed(cover, framed, key, mode, table);
    write_image(stego, o.out);

    std::uint64_t cap = mode.method == EmbedMethod::Lsb
                            ? lsb_capacity(cover, mode.k_lsb)
                            : estimate_capacity(cover, table);
    QualityReport q = compare_images(cover, stego);
    std::printf("seed: 0x%016" PRIX64 "\n", key.seed);
    std::printf("embedded %zu bits (%.2f%% of %" PRIu64 " available)\n",
                framed.size(), cap ? 100.0 * framed.size() / cap : 0.0, cap);
    std::printf("psnr: %s dB  ssim: %.6f  uiq: %.6f\n",
                std::isinf(q.psnr) ? "inf" : std::to_string(q.psnr).c_str(),
                q.ssim, q.uiq);
    return 0;
}

int cmd_extract(const Options& o) {
    StegoKey key = resolve_key(o);
    EmbedMode mode = resolve_mode(o);
    RangeTable table = RangeTable::named(o.table);
    ImageBuffer stego = read_image(o.stego);
    Bitstream framed = extract(stego, key, mode, table);
    Payload payload = parse_payload(framed);
    if (const auto* bytes = std::get_if<std::vector<std::uint8_t>>(&payload)) {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw IoError("cannot open for writing: " + o.out);
        out.write(reinterpret_cast<const char*>(bytes->data()),
                  static_cast<std::streamsize>(bytes->size()));
        std::printf("recovered %zu bytes -> %s\n", bytes->size(), o.out.c_str());
    } else {
        const auto& img = std::get<ImageBuffer>(payload);
        write_image(img, o.out);
        std::printf("recovered %dx%d %s image -> %s\n", img.width, img.height,
                    img.channels == 3 ? "rgb" : "gray", o.out.c_str());
    }
    return 0;
}

int cmd_capacity(const Options& o) {
    RangeTable table = RangeTable::named(o.table);
    ImageBuffer cover = read_image(o.cover);
    std::uint64_t total = 0, usable = 0, skipped = 0;
    std::map<int, std::uint64_t> by_range; // range index -> usable count
    auto slots = enumerate_slots(cover);
    for (const Slot& s : slots) {
        int col = 2 * s.col_pair;
        PixelPair p{cover.at(s.channel, s.row, col),
                    cover.at(s.channel, s.row, col + 1)};
        int k = capacity_bits(p, table);
        if (k == 0) {
            ++skipped;
            continue;
        }
        ++usable;
        total += static_cast<std::uint64_t>(k);
        int d = difference(p);
        const auto& entries = table.entries();
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].lower <= d && d <= entries[i].upper) {
                by_range[static_cast<int>(i)]++;
                break;
            }
    }
    std::printf("capacity: %" PRIu64 " bits\n", total);
    std::printf("usable pairs: %" PRIu64 "  skipped pairs: %" PRIu64 "\n",
                usable, skipped);
    for (auto [i, count] : by_range) {
        const auto& e = table.entries()[static_cast<std::size_t>(i)];
        std::printf("  [%3d,%3d] k=%d: %" PRIu64 " pairs\n", e.lower, e.upper,
                    e.capacity_bits, count);
    }
    return 0;
}

int cmd_quality(const Options& o) {
    ImageBuffer a = read_image(o.cover);
    ImageBuffer b = read_image(o.stego);
    print_quality(compare_images(a, b), o.format, std::cout);
    return 0;
}

std::vector<fs::path> list_images(const fs::path& dir) {
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
        if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm" || ext == ".png")
            out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_report(const Options& o) {
    StegoKey key = resolve_key(o);
    EmbedMode mode = resolve_mode(o);
    RangeTable table = RangeTable::named(o.table);
    auto covers = list_images(o.covers_dir);
    auto secrets = list_images(o.secrets_dir.empty() ? o.covers_dir
                                                     : o.secrets_dir);
    if (covers.empty())
        throw IoError("no images found in " + o.covers_dir);

    struct Row {
        std::string cover, secret;
        QualityReport q;
        bool recovered = false;
        std::string error;
    };
    std::vector<Row> rows;
    bool any_failed = false;

    for (const auto& cover_path : covers) {
        for (const auto& secret_path : secrets) {
            if (cover_path.filename() == secret_path.filename()) continue;
            Row row{cover_path.filename().string(),
                    secret_path.filename().string(), {}, false, ""};
            try {
                ImageBuffer cover =
                    resize_nearest(read_image(cover_path), 512, 512);
                ImageBuffer secret =
                    resize_nearest(read_image(secret_path), 128, 128);
                Bitstream framed = frame_payload(secret);
                ImageBuffer stego = embed(cover, framed, key, mode, table);
                row.q = compare_images(cover, stego);
                Bitstream back = extract(stego, key, mode, table);
                row.recovered =
                    back == framed &&
                    std::get<ImageBuffer>(parse_payload(back)) == secret;
            } catch (const Error& e) {
                row.error = e.what();
            }
            if (!row.recovered) any_failed = true;
            rows.push_back(std::move(row));
        }
    }

    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return std::string(buf);
    };
    std::ostream& out = std::cout;
    if (o.format == "csv") {
        out << "cover,secret,psnr,ssim,uiq,recovered\n";
        for (const auto& r : rows)
            out << r.cover << "," << r.secret << "," << num(r.q.psnr) << ","
                << num(r.q.ssim) << "," << num(r.q.uiq) << ","
                << (r.recovered ? "yes" : "NO") << "\n";
    } else if (o.format == "json") {
        out << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            out << "  {\"cover\": \"" << r.cover << "\", \"secret\": \""
                << r.secret << "\", \"psnr\": " << num(r.q.psnr)
                << ", \"ssim\": " << num(r.q.ssim) << ", \"uiq\": "
                << num(r.q.uiq) << ", \"recovered\": "
                << (r.recovered ? "true" : "false") << "}"
                << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        out << "]\n";
    } else {
        out << "| Cover | Secret | PSNR | SSIM | UIQ | Recovered |\n";
        out << "|---|---|---|---|---|---|\n";
        for (const auto& r : rows) {
            if (r.error.empty())
                out << "| " << r.cover << " | " << r.secret << " | "
                    << num(r.q.psnr) << " | " << num(r.q.ssim) << " | "
                    << num(r.q.uiq) << " | " << (r.recovered ? "yes" : "NO")
                    << " |\n";
            else
                out << "| " << r.cover << " | " << r.secret
                    << " | - | - | - | error: " << r.error << " |\n";
        }
    }
    return any_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"APVD steganography over a keyed pixel-pair permutation"};
    app.require_subcommand(1);
    Options o;

    auto add_key_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed_text,
                        "64-bit seed, decimal or 0x-hex");
        cmd->add_option("--key", o.passphrase, "passphrase (FNV-1a derived seed)");
        cmd->add_option("--mode", o.mode, "apvd-prng | apvd-seq | lsb")
            ->check(CLI::IsMember({"apvd-prng", "apvd-seq", "lsb"}));
        cmd->add_option("--k-lsb", o.k_lsb, "LSB plane count (lsb mode)")
            ->check(CLI::Range(1, 4));
        cmd->add_option("--table", o.table,
                        "range table: default | fine | path to file");
    };

    auto* embed_cmd = app.add_subcommand("embed", "hide a payload in a cover");
    embed_cmd->add_option("--cover", o.cover)->required();
    embed_cmd->add_option("--secret", o.secret, "secret image to hide");
    embed_cmd->add_option("--payload", o.payload, "raw file to hide");
    embed_cmd->add_option("--out,--stego", o.out, "stego output path")->required();
    add_key_flags(embed_cmd);

    auto* extract_cmd = app.add_subcommand("extract", "recover a payload");
    extract_cmd->add_option("--stego", o.stego)->required();
    extract_cmd->add_option("--out", o.out)->required();
    add_key_flags(extract_cmd);

    auto* capacity_cmd = app.add_subcommand("capacity", "estimate cover capacity");
    capacity_cmd->add_option("--cover", o.cover)->required();
    capacity_cmd->add_option("--table", o.table);

    auto* quality_cmd = app.add_subcommand("quality", "compare two images");
    quality_cmd->add_option("--cover", o.cover)->required();
    quality_cmd->add_option("--stego", o.stego)->required();
    quality_cmd->add_option("--format", o.format)
        ->check(CLI::IsMember({"csv", "json", "markdown"}));

    auto* report_cmd =
        app.add_subcommand("report", "all-pairs embed/extract quality table");
    report_cmd->add_option("--covers", o.covers_dir)->required();
    report_cmd->add_option("--secrets", o.secrets_dir);
    report_cmd->add_option("--format", o.format)
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
    add_key_flags(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (embed_cmd->parsed()) {
            if (o.secret.empty() == o.payload.empty()) {
                std::cerr << "embed: give exactly one of --secret / --payload\n";
                return kExitUsage;
            }
            return cmd_embed(o);
        }
        if (extract_cmd->parsed()) return cmd_extract(o);
        if (capacity_cmd->parsed()) return cmd_capacity(o);
        if (quality_cmd->parsed()) return cmd_quality(o);
        if (report_cmd->parsed()) return cmd_report(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityExceeded& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InvalidHeader& e) {
        std::cerr << "invalid header (wrong key, mode, or table?): " << e.what()
                  << "\n";
        return kExitInvalidHeader;
    } catch (const Truncated& e) {
        std::cerr << "truncated: " << e.what() << "\n";
        return kExitInvalidHeader;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
