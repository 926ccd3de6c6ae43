#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ppg {

// Interleaved 8-bit raster, channels = 1 (gray), 3 (RGB) or 4 (RGBA).
struct ImageU8 {
    int width    = 0;
    int height   = 0;
    int channels = 0;
    std::vector<uint8_t> px;

    ImageU8() = default;
    ImageU8(int w, int h, int c, uint8_t fill = 0)
        : width(w), height(h), channels(c), px(size_t(w) * h * c, fill) {}

    uint8_t* at(int x, int y) { return px.data() + (size_t(y) * width + x) * channels; }
    const uint8_t* at(int x, int y) const { return px.data() + (size_t(y) * width + x) * channels; }
    bool empty() const { return px.empty(); }
};

// PNG I/O via libpng. Encoding is fully pinned (fixed filter, fixed zlib
// level) so identical pixels produce identical bytes.
std::vector<uint8_t> encode_png(const ImageU8& img);
void save_png(const std::string& path, const ImageU8& img);
ImageU8 load_png(const std::string& path);

// 1-bit grayscale PNG for binary mask planes; nonzero input pixels become 1.
void save_png_1bit(const std::string& path, const std::vector<uint8_t>& plane, int w, int h);

// Bilinear resample; alpha handled as a plain channel.
ImageU8 resize_bilinear(const ImageU8& src, int out_w, int out_h);

// Alpha-blend src (must have 4 channels) over dst at (x0, y0).
void blit_over(ImageU8& dst, const ImageU8& src, int x0, int y0);

}  // namespace ppg
