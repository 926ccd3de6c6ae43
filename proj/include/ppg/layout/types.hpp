#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppg {

enum class Category : uint8_t { Text = 0, Underlay = 1, Product = 2, Pad = 3 };

const char* category_name(Category c);
std::optional<Category> category_from_name(const std::string& name);

// One poster element: category + normalized center/size box (origin top-left,
// y grows downward). Pad elements carry zero geometry.
struct Element {
    Category category = Category::Pad;
    double center_x   = 0.0;
    double center_y   = 0.0;
    double width      = 0.0;
    double height     = 0.0;
    std::optional<std::string> text_content;

    static Element box(Category c, double cx, double cy, double w, double h) {
        return Element{c, cx, cy, w, h, std::nullopt};
    }
    static Element pad() { return Element{}; }

    bool is_pad() const { return category == Category::Pad; }
    double left() const { return center_x - width / 2; }
    double right() const { return center_x + width / 2; }
    double top() const { return center_y - height / 2; }
    double bottom() const { return center_y + height / 2; }
    double area() const { return width * height; }
};

// Fixed-capacity ordered element list. Pad slots trail the real elements.
struct Layout {
    std::vector<Element> elements;
    double canvas_aspect = 750.0 / 513.0;  // height / width

    size_t element_count() const;  // non-pad
};

// Attribute order used everywhere a layout is tokenized.
enum class Attr : int { Cat = 0, X = 1, Y = 2, W = 3, H = 4 };
inline constexpr int kNumAttrs = 5;

// Per-attribute categorical vocabularies. Each attribute owns an independent
// space of K values plus one MASK state (token id == K).
struct AttributeVocabulary {
    int bins_geometry = 64;  // K for each of x, y, w, h
    int categories    = 4;   // Text, Underlay, Product, Pad
    int capacity      = 16;  // E_max

    int value_count(Attr a) const {
        return a == Attr::Cat ? categories : bins_geometry;
    }
    int state_count(Attr a) const { return value_count(a) + 1; }  // + MASK
    int mask_token(Attr a) const { return value_count(a); }
    int pad_category() const { return int(Category::Pad); }
};

// Quantized categorical state of one layout at a diffusion timestep.
// tokens[slot * 5 + attr] indexes the attribute's vocabulary.
struct TokenGrid {
    int capacity = 0;
    int timestep = 0;
    std::vector<int> tokens;

    TokenGrid() = default;
    TokenGrid(int cap, int t) : capacity(cap), timestep(t), tokens(size_t(cap) * kNumAttrs, 0) {}

    int& at(int slot, Attr a) { return tokens[size_t(slot) * kNumAttrs + int(a)]; }
    int at(int slot, Attr a) const { return tokens[size_t(slot) * kNumAttrs + int(a)]; }
};

// Precomputed conditioning features for one record: one row per text plus
// one row per image patch, shared width d.
struct EmbeddingBundle {
    int dim = 0;
    std::vector<std::vector<float>> text_rows;   // L_T x d
    std::vector<std::vector<float>> image_rows;  // L_I x d
};

}  // namespace ppg
