#include "apvd/imageio.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

#include "apvd/errors.hpp"

namespace apvd {

namespace {

// --- PNM ------------------------------------------------------------

// Whitespace-and-comment skipper for PNM headers.
int pnm_token(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF) throw MalformedFile("PNM: truncated header");
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        c = in.get();
    }
    if (c != EOF && !std::isspace(c))
        throw MalformedFile("PNM: non-numeric header field");
    return value;
}

ImageBuffer read_pnm(std::istream& in, int channels) {
    int w = pnm_token(in);
    int h = pnm_token(in);
    int maxval = pnm_token(in);
    if (w < 1 || h < 1) throw MalformedFile("PNM: bad dimensions");
    if (maxval != 255) throw UnsupportedDepth("PNM: maxval must be 255");
    // pnm_token consumed the single whitespace byte after maxval
    std::size_t n = static_cast<std::size_t>(w) * h * channels;
    std::vector<char> raw(n);
    in.read(raw.data(), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw MalformedFile("PNM: truncated sample data");
    ImageBuffer img(w, h, channels);
    // file is row-major interleaved; buffer is channel-planar
    std::size_t i = 0;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            for (int ch = 0; ch < channels; ++ch)
                img.at(ch, r, c) = static_cast<std::uint8_t>(raw[i++]);
    return img;
}

void write_pnm(const ImageBuffer& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << (img.channels == 3 ? "P6" : "P5") << "\n"
        << img.width << " " << img.height << "\n255\n";
    std::vector<char> raw;
    raw.reserve(img.sample_count());
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            for (int ch = 0; ch < img.channels; ++ch)
                raw.push_back(static_cast<char>(img.at(ch, r, c)));
    out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

// --- PNG ------------------------------------------------------------

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

ImageBuffer read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw IoError("cannot open: " + path.string());
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("libpng init failed");
    }
    std::vector<std::uint8_t> interleaved;
    int w = 0, h = 0, channels = 0;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw MalformedFile("PNG: decode error in " + path.string());
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);
    w = static_cast<int>(png_get_image_width(png, info));
    h = static_cast<int>(png_get_image_height(png, info));
    int depth = png_get_bit_depth(png, info);
    int color = png_get_color_type(png, info);
    if (depth != 8 || (color != PNG_COLOR_TYPE_GRAY && color != PNG_COLOR_TYPE_RGB)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw UnsupportedDepth("PNG: only 8-bit gray/RGB without alpha");
    }
    channels = color == PNG_COLOR_TYPE_RGB ? 3 : 1;
    interleaved.resize(static_cast<std::size_t>(w) * h * channels);
    std::vector<png_bytep> rows(h);
    for (int r = 0; r < h; ++r)
        rows[r] = interleaved.data() + static_cast<std::size_t>(r) * w * channels;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    ImageBuffer img(w, h, channels);
    std::size_t i = 0;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            for (int ch = 0; ch < channels; ++ch)
                img.at(ch, r, c) = interleaved[i++];
    return img;
}

void write_png(const ImageBuffer& img, const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path.string());
    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("PNG: encode error for " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8,
                 img.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<std::uint8_t> interleaved(img.sample_count());
    std::size_t i = 0;
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            for (int ch = 0; ch < img.channels; ++ch)
                interleaved[i++] = img.at(ch, r, c);
    std::vector<png_bytep> rows(img.height);
    for (int r = 0; r < img.height; ++r)
        rows[r] = interleaved.data() +
                  static_cast<std::size_t>(r) * img.width * img.channels;
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

ImageFormat format_for(const ImageBuffer& img,
                       const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext == ".pgm") return ImageFormat::PgmBinary;
    if (ext == ".ppm" || ext == ".pnm") return ImageFormat::PpmBinary;
    if (ext == ".png") return ImageFormat::Png;
    if (ext == ".jpg" || ext == ".jpeg")
        throw UnsupportedFormat("JPEG is lossy and would destroy the payload");
    // default to the lossless PNM family
    return img.channels == 3 ? ImageFormat::PpmBinary : ImageFormat::PgmBinary;
}

} // namespace

ImageBuffer read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2) throw MalformedFile("file too short: " + path.string());
    if (magic[0] == 'P' && magic[1] == '5') return read_pnm(in, 1);
    if (magic[0] == 'P' && magic[1] == '6') return read_pnm(in, 3);
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        return read_png(path);
    }
    throw UnsupportedFormat("unrecognized image format: " + path.string());
}

void write_image(const ImageBuffer& image, const std::filesystem::path& path) {
    write_image(image, path, format_for(image, path));
}

void write_image(const ImageBuffer& image, const std::filesystem::path& path,
                 ImageFormat format) {
    switch (format) {
    case ImageFormat::PgmBinary:
        if (image.channels != 1)
            throw ChannelMismatch("PGM requires a single channel");
        write_pnm(image, path);
        return;
    case ImageFormat::PpmBinary:
        if (image.channels != 3)
            throw ChannelMismatch("PPM requires three channels");
        write_pnm(image, path);
        return;
    case ImageFormat::Png:
        write_png(image, path);
        return;
    }
    throw UnsupportedFormat("unknown format code");
}

ImageBuffer resize_nearest(const ImageBuffer& image, int new_width,
                           int new_height) {
    if (new_width < 1 || new_height < 1)
        throw ContractViolation("resize_nearest: dims must be >= 1");
    ImageBuffer out(new_width, new_height, image.channels);
    for (int ch = 0; ch < image.channels; ++ch)
        for (int r = 0; r < new_height; ++r) {
            int sr = static_cast<int>(static_cast<std::int64_t>(r) *
                                      image.height / new_height);
            for (int c = 0; c < new_width; ++c) {
                int sc = static_cast<int>(static_cast<std::int64_t>(c) *
                                          image.width / new_width);
                out.at(ch, r, c) = image.at(ch, sr, sc);
            }
        }
    return out;
}

} // namespace apvd
