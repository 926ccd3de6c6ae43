#pragma once

#include "ppg/layout/types.hpp"

namespace ppg {

// floor(clamp(v, 0, 1-eps) * K) with eps = 1e-6; monotone in v.
int quantize_geometry(double v, int bins);

// Bin-center rule: (bin + 0.5) / K.
double dequantize_geometry(int bin, int bins);

// Layout -> timestep-0 token grid. Pad slots get the PAD category and
// geometry bin 0. Throws std::invalid_argument on non-finite geometry,
// naming the element index.
TokenGrid quantize_layout(const Layout& layout, const AttributeVocabulary& vocab);

// Token grid -> layout; requires t == 0 and no residual MASK tokens
// (throws std::runtime_error naming attribute and slot otherwise).
// Pad rows are dropped.
Layout dequantize_tokens(const TokenGrid& grid, const AttributeVocabulary& vocab,
                         double canvas_aspect = 750.0 / 513.0);

}  // namespace ppg
