#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppg/image.hpp"
#include "ppg/layout/types.hpp"
#include "ppg/layout/validate.hpp"

namespace ppg {

// One dataset row. The product image is an RGBA cutout; its alpha plane is
// the product mask, and the ground-truth product box is the tightest
// rectangle around the mask's nonzero pixels.
struct PosterRecord {
    std::string id;
    int canvas_w_px = 0;
    int canvas_h_px = 0;
    ImageU8 product_image;  // RGBA
    Layout ground_truth;
    std::vector<std::string> texts;
    std::string embedding_path;  // may be empty; bundles are loaded on demand

    double canvas_aspect() const { return double(canvas_h_px) / canvas_w_px; }
};

// Annotation JSON schema (one file per poster):
//   { "id": str, "canvas": [w_px, h_px],
//     "elements": [ { "category": "text"|"underlay"|"product",
//                     "box": [cx, cy, w, h], "text": str? } ],
//     "product_mask": relpath, "product_image": relpath,
//     "embeddings": relpath }
std::string annotation_to_json(const PosterRecord& rec, const std::string& image_rel,
                               const std::string& mask_rel, const std::string& emb_rel);

struct DatasetLoadReport {
    int loaded  = 0;
    int skipped = 0;
    std::vector<std::string> errors;
};

// Loads every *.json annotation in the directory, sorted by record id.
// Malformed annotations are skipped with a reason; a missing or unreadable
// product mask is fatal for that record only.
std::vector<PosterRecord> load_dataset(const std::string& dir, DatasetLoadReport* report = nullptr);

// Tightest pixel rectangle around nonzero alpha, in normalized canvas
// coordinates for a cutout pasted at (x_px, y_px).
Element product_box_from_mask(const ImageU8& cutout, int x_px, int y_px, int canvas_w, int canvas_h);

// Embedding bundle file: magic "PRE1", u32 L_T, u32 L_I, u32 d, then
// little-endian f32 rows of e_T followed by e_I.
void save_embedding_bundle(const std::string& path, const EmbeddingBundle& bundle);
EmbeddingBundle load_embedding_bundle(const std::string& path);

}  // namespace ppg
