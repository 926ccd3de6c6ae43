#include "ppg/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "ppg/common.hpp"

namespace ppg {

namespace {

void png_write_to_vector(png_structp png, png_bytep data, png_size_t n) {
    auto* out = static_cast<std::vector<uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + n);
}

void png_flush_noop(png_structp) {}

struct PngReadCursor {
    const uint8_t* p;
    size_t n;
    size_t pos;
};

void png_read_from_memory(png_structp png, png_bytep data, png_size_t n) {
    auto* cur = static_cast<PngReadCursor*>(png_get_io_ptr(png));
    if (cur->pos + n > cur->n) png_error(png, "png stream truncated");
    std::memcpy(data, cur->p + cur->pos, n);
    cur->pos += n;
}

int color_type_for(int channels) {
    switch (channels) {
        case 1: return PNG_COLOR_TYPE_GRAY;
        case 3: return PNG_COLOR_TYPE_RGB;
        case 4: return PNG_COLOR_TYPE_RGBA;
        default: throw std::invalid_argument(strf("unsupported channel count %d", channels));
    }
}

}  // namespace

std::vector<uint8_t> encode_png(const ImageU8& img) {
    if (img.empty()) throw std::invalid_argument("encode_png: empty image");
    std::vector<uint8_t> out;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info  = png_create_info_struct(png);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("png encode failed");
    }
    png_set_write_fn(png, &out, png_write_to_vector, png_flush_noop);
    // pinned settings keep the byte stream reproducible
    png_set_compression_level(png, 6);
    png_set_compression_strategy(png, 0);
    png_set_filter(png, 0, PNG_FILTER_SUB);
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 color_type_for(img.channels), PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(size_t(img.height));
    for (int y = 0; y < img.height; ++y)
        rows[size_t(y)] = const_cast<png_bytep>(img.at(0, y));
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}

void save_png(const std::string& path, const ImageU8& img) {
    std::vector<uint8_t> bytes = encode_png(img);
    write_file_bytes(path, bytes.data(), bytes.size());
}

ImageU8 load_png(const std::string& path) {
    std::vector<uint8_t> bytes = read_file_bytes(path);
    if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0)
        throw std::runtime_error("not a PNG file: " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info  = png_create_info_struct(png);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("png decode failed: " + path);
    }
    PngReadCursor cur{bytes.data(), bytes.size(), 0};
    png_set_read_fn(png, &cur, png_read_from_memory);
    png_read_info(png, info);

    png_set_expand(png);  // palettes, 1/2/4-bit gray, tRNS -> 8 bit
    if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
    png_read_update_info(png, info);

    ImageU8 img;
    img.width    = int(png_get_image_width(png, info));
    img.height   = int(png_get_image_height(png, info));
    img.channels = int(png_get_channels(png, info));
    img.px.resize(size_t(img.width) * img.height * img.channels);
    std::vector<png_bytep> rows(size_t(img.height));
    for (int y = 0; y < img.height; ++y) rows[size_t(y)] = img.at(0, y);
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void save_png_1bit(const std::string& path, const std::vector<uint8_t>& plane, int w, int h) {
    if (int64_t(plane.size()) != int64_t(w) * h)
        throw std::invalid_argument("save_png_1bit: plane size mismatch");
    std::vector<uint8_t> out;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info  = png_create_info_struct(png);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("png encode failed");
    }
    png_set_write_fn(png, &out, png_write_to_vector, png_flush_noop);
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, png_uint_32(w), png_uint_32(h), 1, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    int stride = (w + 7) / 8;
    std::vector<uint8_t> packed(size_t(stride) * h, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (plane[size_t(y) * w + x]) packed[size_t(y) * stride + x / 8] |= uint8_t(0x80u >> (x % 8));
    std::vector<png_bytep> rows(size_t(h));
    for (int y = 0; y < h; ++y) rows[size_t(y)] = packed.data() + size_t(y) * stride;
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    write_file_bytes(path, out.data(), out.size());
}

ImageU8 resize_bilinear(const ImageU8& src, int out_w, int out_h) {
    if (src.empty() || out_w <= 0 || out_h <= 0)
        throw std::invalid_argument("resize_bilinear: bad arguments");
    ImageU8 dst(out_w, out_h, src.channels);
    const double sx = double(src.width) / out_w;
    const double sy = double(src.height) / out_h;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int y0    = int(std::floor(fy));
        double wy = fy - y0;
        int y1    = std::min(y0 + 1, src.height - 1);
        y0        = std::clamp(y0, 0, src.height - 1);
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int x0    = int(std::floor(fx));
            double wx = fx - x0;
            int x1    = std::min(x0 + 1, src.width - 1);
            x0        = std::clamp(x0, 0, src.width - 1);
            const uint8_t* p00 = src.at(x0, y0);
            const uint8_t* p10 = src.at(x1, y0);
            const uint8_t* p01 = src.at(x0, y1);
            const uint8_t* p11 = src.at(x1, y1);
            uint8_t* q         = dst.at(x, y);
            for (int c = 0; c < src.channels; ++c) {
                double v = (1 - wy) * ((1 - wx) * p00[c] + wx * p10[c]) +
                           wy * ((1 - wx) * p01[c] + wx * p11[c]);
                q[c] = uint8_t(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return dst;
}

void blit_over(ImageU8& dst, const ImageU8& src, int x0, int y0) {
    if (src.channels != 4) throw std::invalid_argument("blit_over: source must be RGBA");
    int dc = dst.channels;
    for (int y = 0; y < src.height; ++y) {
        int dy = y0 + y;
        if (dy < 0 || dy >= dst.height) continue;
        for (int x = 0; x < src.width; ++x) {
            int dx = x0 + x;
            if (dx < 0 || dx >= dst.width) continue;
            const uint8_t* s = src.at(x, y);
            uint8_t* d       = dst.at(dx, dy);
            int a            = s[3];
            if (a == 0) continue;
            for (int c = 0; c < std::min(3, dc); ++c)
                d[c] = uint8_t((s[c] * a + d[c] * (255 - a) + 127) / 255);
            if (dc == 4) d[3] = uint8_t(a + d[3] * (255 - a) / 255);
        }
    }
}

}  // namespace ppg
