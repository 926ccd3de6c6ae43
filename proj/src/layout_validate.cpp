#include "ppg/layout/validate.hpp"

#include <cmath>

#include "ppg/common.hpp"

namespace ppg {

namespace {
constexpr double kCanvasSlack = 0.02;
}

DiagnosticsReport validate_layout(const Layout& layout, int capacity) {
    DiagnosticsReport report;
    auto flag = [&](DiagCode c, int idx, std::string msg) {
        report.issues.push_back({c, idx, std::move(msg)});
    };

    if (int(layout.elements.size()) > capacity)
        flag(DiagCode::TooManyElements, -1,
             strf("%zu elements exceed capacity %d", layout.elements.size(), capacity));

    int products      = 0;
    bool saw_pad      = false;
    for (int i = 0; i < int(layout.elements.size()); ++i) {
        const Element& e = layout.elements[size_t(i)];
        if (e.is_pad()) {
            saw_pad = true;
            continue;
        }
        if (saw_pad) flag(DiagCode::PadNotTrailing, i, strf("element %d follows a pad slot", i));
        const double geo[4] = {e.center_x, e.center_y, e.width, e.height};
        bool finite = true;
        for (double g : geo)
            if (!std::isfinite(g)) finite = false;
        if (!finite) {
            flag(DiagCode::NonFiniteGeometry, i, strf("element %d has non-finite geometry", i));
            continue;
        }
        if (e.category == Category::Product) ++products;
        if (e.width <= 0.0 || e.height <= 0.0)
            flag(DiagCode::ZeroArea, i, strf("element %d has empty box %.4f x %.4f", i, e.width, e.height));
        if (e.left() < -kCanvasSlack || e.right() > 1.0 + kCanvasSlack ||
            e.top() < -kCanvasSlack || e.bottom() > 1.0 + kCanvasSlack)
            flag(DiagCode::OutOfCanvas, i,
                 strf("element %d box [%.3f,%.3f]x[%.3f,%.3f] leaves the canvas", i, e.left(),
                      e.right(), e.top(), e.bottom()));
    }
    if (products == 0)
        flag(DiagCode::MissingProduct, -1, "layout has no product element");
    else if (products > 1)
        flag(DiagCode::DuplicateProduct, -1, strf("layout has %d product elements", products));
    return report;
}

}  // namespace ppg
