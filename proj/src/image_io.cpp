#include "hierosa/image_io.hpp"

#include <atomic>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <png.h>
#include <unistd.h>

#include "hierosa/bitmap.hpp"
#include "hierosa/errors.hpp"

namespace hierosa {

namespace {

struct PngReadCtx {
    const uint8_t* data;
    size_t size;
    size_t pos;
};

void png_read_fn(png_structp png, png_bytep out, png_size_t n) {
    auto* ctx = static_cast<PngReadCtx*>(png_get_io_ptr(png));
    if (ctx->pos + n > ctx->size) png_error(png, "truncated PNG stream");
    std::memcpy(out, ctx->data + ctx->pos, n);
    ctx->pos += n;
}

void png_write_fn(png_structp png, png_bytep data, png_size_t n) {
    auto* out = static_cast<std::vector<uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + n);
}

void png_flush_fn(png_structp) {}

GrayImage decode_png(std::span<const uint8_t> bytes) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DecodeError("png: allocation failure");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("png: allocation failure");
    }

    std::vector<uint8_t> rgba;
    std::vector<png_bytep> rows;
    png_uint_32 w = 0, h = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("png: malformed stream");
    }

    PngReadCtx ctx{bytes.data(), bytes.size(), 0};
    png_set_read_fn(png, &ctx, png_read_fn);
    png_read_info(png, info);

    w = png_get_image_width(png, info);
    h = png_get_image_height(png, info);
    if (w == 0 || h == 0) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw EmptyImage("png: zero-dimension raster");
    }

    // normalize everything to 8-bit RGBA
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_gray_to_rgb(png);
    png_set_add_alpha(png, 0xFF, PNG_FILLER_AFTER);
    png_read_update_info(png, info);

    rgba.resize(static_cast<size_t>(w) * h * 4);
    rows.resize(h);
    for (png_uint_32 r = 0; r < h; ++r) rows[r] = rgba.data() + static_cast<size_t>(r) * w * 4;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    GrayImage img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    img.luma.resize(static_cast<size_t>(w) * h);
    for (size_t i = 0; i < img.luma.size(); ++i) {
        unsigned r = rgba[i * 4], g = rgba[i * 4 + 1], b = rgba[i * 4 + 2], a = rgba[i * 4 + 3];
        // Rec.601 luma, composited over white
        unsigned y = (299 * r + 587 * g + 114 * b + 500) / 1000;
        img.luma[i] = static_cast<uint8_t>((y * a + 255u * (255u - a) + 127u) / 255u);
    }
    return img;
}

struct PnmScanner {
    std::span<const uint8_t> bytes;
    size_t pos = 2; // past magic

    // skip whitespace and '#' comments
    void skip() {
        while (pos < bytes.size()) {
            uint8_t c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    }

    int next_int() {
        skip();
        if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
            throw DecodeError("pnm: expected integer in header");
        long v = 0;
        while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 1'000'000'000L) throw DecodeError("pnm: header value out of range");
            ++pos;
        }
        return static_cast<int>(v);
    }

    // exactly one whitespace byte separates the header from binary pixel data
    void skip_single_ws() {
        if (pos >= bytes.size()) throw DecodeError("pnm: truncated header");
        uint8_t c = bytes[pos];
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n')
            throw DecodeError("pnm: missing separator before pixel data");
        ++pos;
    }
};

GrayImage decode_pnm(std::span<const uint8_t> bytes) {
    char kind = static_cast<char>(bytes[1]);
    PnmScanner sc{bytes};
    int w = sc.next_int();
    int h = sc.next_int();
    if (w == 0 || h == 0) throw EmptyImage("pnm: zero-dimension raster");
    if (w < 0 || h < 0 || static_cast<long long>(w) * h > (1LL << 30))
        throw DecodeError("pnm: implausible dimensions");

    GrayImage img;
    img.width = w;
    img.height = h;
    img.luma.resize(static_cast<size_t>(w) * h);
    size_t n = img.luma.size();

    switch (kind) {
    case '1': { // ASCII bitmap: 1 = black
        for (size_t i = 0; i < n; ++i) {
            int v = sc.next_int();
            if (v != 0 && v != 1) throw DecodeError("pbm: pixel must be 0 or 1");
            img.luma[i] = v ? 0 : 255;
        }
        break;
    }
    case '2': { // ASCII graymap
        int maxval = sc.next_int();
        if (maxval <= 0 || maxval > 65535) throw DecodeError("pgm: bad maxval");
        for (size_t i = 0; i < n; ++i) {
            int v = sc.next_int();
            if (v < 0 || v > maxval) throw DecodeError("pgm: pixel out of range");
            img.luma[i] = static_cast<uint8_t>((v * 255 + maxval / 2) / maxval);
        }
        break;
    }
    case '4': { // binary bitmap, rows padded to whole bytes
        sc.skip_single_ws();
        size_t row_bytes = (static_cast<size_t>(w) + 7) / 8;
        if (sc.pos + row_bytes * h > bytes.size()) throw DecodeError("pbm: truncated pixel data");
        for (int r = 0; r < h; ++r) {
            const uint8_t* row = bytes.data() + sc.pos + static_cast<size_t>(r) * row_bytes;
            for (int c = 0; c < w; ++c) {
                bool black = (row[c / 8] >> (7 - c % 8)) & 1;
                img.luma[static_cast<size_t>(r) * w + c] = black ? 0 : 255;
            }
        }
        break;
    }
    case '5': { // binary graymap
        int maxval = sc.next_int();
        if (maxval <= 0 || maxval > 65535) throw DecodeError("pgm: bad maxval");
        sc.skip_single_ws();
        size_t bpp = maxval > 255 ? 2 : 1;
        if (sc.pos + n * bpp > bytes.size()) throw DecodeError("pgm: truncated pixel data");
        const uint8_t* p = bytes.data() + sc.pos;
        for (size_t i = 0; i < n; ++i) {
            int v = bpp == 1 ? p[i] : (p[i * 2] << 8 | p[i * 2 + 1]);
            img.luma[i] = static_cast<uint8_t>((v * 255 + maxval / 2) / maxval);
        }
        break;
    }
    default:
        throw DecodeError("pnm: unsupported magic");
    }
    return img;
}

} // namespace

GrayImage decode_image(std::span<const uint8_t> bytes) {
    static const uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), png_sig, 8) == 0) return decode_png(bytes);
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] >= '1' && bytes[1] <= '5' &&
        bytes[1] != '3')
        return decode_pnm(bytes);
    throw DecodeError("unrecognized image format (expected PNG, PGM or PBM)");
}

std::vector<uint8_t> encode_png(const BinaryGlyph& glyph) {
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png: allocation failure");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png: allocation failure");
    }

    std::vector<uint8_t> out;
    std::vector<uint8_t> row(static_cast<size_t>(glyph.width()));

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png: encode failure");
    }

    png_set_write_fn(png, &out, png_write_fn, png_flush_fn);
    png_set_IHDR(png, info, glyph.width(), glyph.height(), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int r = 0; r < glyph.height(); ++r) {
        for (int c = 0; c < glyph.width(); ++c) row[c] = glyph.black(c, r) ? 0 : 255;
        png_write_row(png, row.data());
    }
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
    return out;
}

std::vector<uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed for " + path);
    return bytes;
}

void write_file_atomic(const std::string& path, std::span<const uint8_t> bytes) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());

    static std::atomic<uint64_t> counter{0};
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed for " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("rename failed for " + path);
    }
}

void write_file_atomic(const std::string& path, const std::string& text) {
    write_file_atomic(path,
                      std::span(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

} // namespace hierosa
