#include "ppg/layout/quantize.hpp"

#include <cmath>
#include <stdexcept>

#include "ppg/common.hpp"

namespace ppg {

namespace {
constexpr double kClampEps = 1e-6;

const char* attr_name(Attr a) {
    switch (a) {
        case Attr::Cat: return "category";
        case Attr::X: return "x";
        case Attr::Y: return "y";
        case Attr::W: return "w";
        case Attr::H: return "h";
    }
    return "?";
}
}  // namespace

int quantize_geometry(double v, int bins) {
    double c = v;
    if (c < 0.0) c = 0.0;
    if (c > 1.0 - kClampEps) c = 1.0 - kClampEps;
    return int(std::floor(c * bins));
}

double dequantize_geometry(int bin, int bins) {
    return (bin + 0.5) / bins;
}

TokenGrid quantize_layout(const Layout& layout, const AttributeVocabulary& vocab) {
    if (vocab.bins_geometry < 2 || vocab.categories < 2)
        throw std::invalid_argument("quantize_layout: vocabulary needs at least 2 bins per attribute");
    if (int(layout.elements.size()) > vocab.capacity)
        throw std::invalid_argument(strf("quantize_layout: %zu elements exceed capacity %d",
                                         layout.elements.size(), vocab.capacity));
    TokenGrid grid(vocab.capacity, 0);
    for (int slot = 0; slot < vocab.capacity; ++slot) {
        if (slot >= int(layout.elements.size()) || layout.elements[size_t(slot)].is_pad()) {
            grid.at(slot, Attr::Cat) = vocab.pad_category();
            grid.at(slot, Attr::X)   = 0;
            grid.at(slot, Attr::Y)   = 0;
            grid.at(slot, Attr::W)   = 0;
            grid.at(slot, Attr::H)   = 0;
            continue;
        }
        const Element& e = layout.elements[size_t(slot)];
        const double geo[4] = {e.center_x, e.center_y, e.width, e.height};
        for (double g : geo)
            if (!std::isfinite(g))
                throw std::invalid_argument(strf("quantize_layout: non-finite geometry at element %d", slot));
        grid.at(slot, Attr::Cat) = int(e.category);
        grid.at(slot, Attr::X)   = quantize_geometry(e.center_x, vocab.bins_geometry);
        grid.at(slot, Attr::Y)   = quantize_geometry(e.center_y, vocab.bins_geometry);
        grid.at(slot, Attr::W)   = quantize_geometry(e.width, vocab.bins_geometry);
        grid.at(slot, Attr::H)   = quantize_geometry(e.height, vocab.bins_geometry);
    }
    return grid;
}

Layout dequantize_tokens(const TokenGrid& grid, const AttributeVocabulary& vocab,
                         double canvas_aspect) {
    Layout out;
    out.canvas_aspect = canvas_aspect;
    for (int slot = 0; slot < grid.capacity; ++slot) {
        for (int a = 0; a < kNumAttrs; ++a) {
            Attr attr = Attr(a);
            int tok   = grid.at(slot, attr);
            if (tok == vocab.mask_token(attr))
                throw std::runtime_error(
                    strf("dequantize_tokens: residual MASK token in attribute %s at slot %d",
                         attr_name(attr), slot));
            if (tok < 0 || tok >= vocab.value_count(attr))
                throw std::runtime_error(
                    strf("dequantize_tokens: token %d out of range for attribute %s at slot %d",
                         tok, attr_name(attr), slot));
        }
        if (grid.at(slot, Attr::Cat) == vocab.pad_category()) continue;
        Element e;
        e.category = Category(grid.at(slot, Attr::Cat));
        e.center_x = dequantize_geometry(grid.at(slot, Attr::X), vocab.bins_geometry);
        e.center_y = dequantize_geometry(grid.at(slot, Attr::Y), vocab.bins_geometry);
        e.width    = dequantize_geometry(grid.at(slot, Attr::W), vocab.bins_geometry);
        e.height   = dequantize_geometry(grid.at(slot, Attr::H), vocab.bins_geometry);
        out.elements.push_back(e);
    }
    return out;
}

}  // namespace ppg
