#include "ppg/layout/types.hpp"

namespace ppg {

const char* category_name(Category c) {
    switch (c) {
        case Category::Text: return "text";
        case Category::Underlay: return "underlay";
        case Category::Product: return "product";
        case Category::Pad: return "pad";
    }
    return "?";
}

std::optional<Category> category_from_name(const std::string& name) {
    if (name == "text") return Category::Text;
    if (name == "underlay") return Category::Underlay;
    if (name == "product") return Category::Product;
    if (name == "pad") return Category::Pad;
    return std::nullopt;
}

size_t Layout::element_count() const {
    size_t n = 0;
    for (const Element& e : elements)
        if (!e.is_pad()) ++n;
    return n;
}

}  // namespace ppg
