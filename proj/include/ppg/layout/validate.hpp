#pragma once

#include "ppg/layout/types.hpp"

namespace ppg {

enum class DiagCode {
    OutOfCanvas,
    ZeroArea,
    MissingProduct,
    DuplicateProduct,
    TooManyElements,
    NonFiniteGeometry,
    PadNotTrailing,
};

struct Diagnostic {
    DiagCode code;
    int element = -1;  // -1 = layout-level
    std::string message;
};

struct DiagnosticsReport {
    std::vector<Diagnostic> issues;
    bool clean() const { return issues.empty(); }
    bool has(DiagCode c) const {
        for (const Diagnostic& d : issues)
            if (d.code == c) return true;
        return false;
    }
};

// Pure diagnostics, never throws. Boxes are considered in-canvas when every
// edge lands inside [-0.02, 1.02], the slack absorbing half-bin rounding.
DiagnosticsReport validate_layout(const Layout& layout, int capacity = 16);

}  // namespace ppg
