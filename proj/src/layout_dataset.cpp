#include "ppg/layout/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <json.hpp>

#include "ppg/common.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ppg {

std::string annotation_to_json(const PosterRecord& rec, const std::string& image_rel,
                               const std::string& mask_rel, const std::string& emb_rel) {
    json doc;
    doc["id"]     = rec.id;
    doc["canvas"] = {rec.canvas_w_px, rec.canvas_h_px};
    json elems    = json::array();
    for (const Element& e : rec.ground_truth.elements) {
        if (e.is_pad()) continue;
        json je;
        je["category"] = category_name(e.category);
        je["box"]      = {e.center_x, e.center_y, e.width, e.height};
        if (e.text_content) je["text"] = *e.text_content;
        elems.push_back(je);
    }
    doc["elements"]      = elems;
    doc["product_image"] = image_rel;
    doc["product_mask"]  = mask_rel;
    doc["embeddings"]    = emb_rel;
    return doc.dump(2) + "\n";
}

namespace {

PosterRecord parse_record(const fs::path& ann_path) {
    json doc = json::parse(read_file_bytes(ann_path.string()));
    PosterRecord rec;
    rec.id = doc.at("id").get<std::string>();
    auto canvas = doc.at("canvas");
    rec.canvas_w_px = canvas.at(0).get<int>();
    rec.canvas_h_px = canvas.at(1).get<int>();
    if (rec.canvas_w_px <= 0 || rec.canvas_h_px <= 0)
        throw std::runtime_error("invalid canvas size");
    rec.ground_truth.canvas_aspect = rec.canvas_aspect();

    for (const json& je : doc.at("elements")) {
        Element e;
        auto cat = category_from_name(je.at("category").get<std::string>());
        if (!cat) throw std::runtime_error("unknown category " + je.at("category").dump());
        e.category = *cat;
        auto box   = je.at("box");
        e.center_x = box.at(0).get<double>();
        e.center_y = box.at(1).get<double>();
        e.width    = box.at(2).get<double>();
        e.height   = box.at(3).get<double>();
        if (je.contains("text")) {
            e.text_content = je.at("text").get<std::string>();
            rec.texts.push_back(*e.text_content);
        }
        rec.ground_truth.elements.push_back(e);
    }

    fs::path dir = ann_path.parent_path();
    std::string image_rel = doc.at("product_image").get<std::string>();
    std::string mask_rel  = doc.at("product_mask").get<std::string>();
    if (doc.contains("embeddings") && !doc.at("embeddings").is_null())
        rec.embedding_path = (dir / doc.at("embeddings").get<std::string>()).string();

    fs::path mask_path = dir / mask_rel;
    if (!fs::exists(mask_path))
        throw std::runtime_error("missing product mask " + mask_path.string());
    ImageU8 image = load_png((dir / image_rel).string());
    ImageU8 mask  = load_png(mask_path.string());
    if (mask.width != image.width || mask.height != image.height)
        throw std::runtime_error("product mask size differs from product image");

    // fold the mask into the cutout's alpha plane
    ImageU8 rgba(image.width, image.height, 4);
    for (int y = 0; y < image.height; ++y)
        for (int x = 0; x < image.width; ++x) {
            const uint8_t* s = image.at(x, y);
            uint8_t* d       = rgba.at(x, y);
            if (image.channels == 1) {
                d[0] = d[1] = d[2] = s[0];
            } else {
                d[0] = s[0];
                d[1] = s[1];
                d[2] = s[2];
            }
            uint8_t m = mask.channels >= 1 ? mask.at(x, y)[0] : 255;
            uint8_t a = image.channels == 4 ? s[3] : 255;
            d[3]      = uint8_t(std::min(int(m), int(a)));
        }
    rec.product_image = std::move(rgba);
    return rec;
}

}  // namespace

std::vector<PosterRecord> load_dataset(const std::string& dir, DatasetLoadReport* report) {
    DatasetLoadReport local;
    DatasetLoadReport& rep = report ? *report : local;
    std::vector<PosterRecord> records;
    if (!fs::exists(dir)) return records;

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const fs::path& f : files) {
        try {
            PosterRecord rec = parse_record(f);
            DiagnosticsReport diag = validate_layout(rec.ground_truth);
            if (diag.has(DiagCode::MissingProduct) || diag.has(DiagCode::DuplicateProduct) ||
                diag.has(DiagCode::NonFiniteGeometry)) {
                rep.skipped++;
                rep.errors.push_back(f.filename().string() + ": " + diag.issues.front().message);
                continue;
            }
            records.push_back(std::move(rec));
            rep.loaded++;
        } catch (const std::exception& ex) {
            rep.skipped++;
            rep.errors.push_back(f.filename().string() + ": " + ex.what());
        }
    }
    std::sort(records.begin(), records.end(),
              [](const PosterRecord& a, const PosterRecord& b) { return a.id < b.id; });
    return records;
}

Element product_box_from_mask(const ImageU8& cutout, int x_px, int y_px, int canvas_w,
                              int canvas_h) {
    int min_x = cutout.width, max_x = -1, min_y = cutout.height, max_y = -1;
    for (int y = 0; y < cutout.height; ++y)
        for (int x = 0; x < cutout.width; ++x)
            if (cutout.at(x, y)[cutout.channels - 1] != 0) {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
    if (max_x < 0) throw std::runtime_error("product mask has no nonzero pixels");
    double l = double(x_px + min_x), r = double(x_px + max_x + 1);
    double t = double(y_px + min_y), b = double(y_px + max_y + 1);
    return Element::box(Category::Product, (l + r) / 2 / canvas_w, (t + b) / 2 / canvas_h,
                        (r - l) / canvas_w, (b - t) / canvas_h);
}

void save_embedding_bundle(const std::string& path, const EmbeddingBundle& bundle) {
    ByteWriter w;
    w.bytes("PRE1", 4);
    w.u32(uint32_t(bundle.text_rows.size()));
    w.u32(uint32_t(bundle.image_rows.size()));
    w.u32(uint32_t(bundle.dim));
    auto dump_rows = [&](const std::vector<std::vector<float>>& rows) {
        for (const auto& row : rows) {
            if (int(row.size()) != bundle.dim)
                throw std::invalid_argument("embedding row width differs from bundle dim");
            for (float v : row) w.f32(v);
        }
    };
    dump_rows(bundle.text_rows);
    dump_rows(bundle.image_rows);
    write_file_bytes(path, w.buf.data(), w.buf.size());
}

EmbeddingBundle load_embedding_bundle(const std::string& path) {
    std::vector<uint8_t> bytes = read_file_bytes(path);
    ByteReader r(bytes.data(), bytes.size());
    if (r.str(4) != "PRE1") throw std::runtime_error("bad embedding magic in " + path);
    uint32_t lt = r.u32(), li = r.u32(), d = r.u32();
    EmbeddingBundle bundle;
    bundle.dim = int(d);
    auto read_rows = [&](uint32_t count) {
        std::vector<std::vector<float>> rows(count);
        for (auto& row : rows) {
            row.resize(d);
            for (uint32_t i = 0; i < d; ++i) {
                row[i] = r.f32();
                if (!std::isfinite(row[i]))
                    throw std::runtime_error("non-finite embedding value in " + path);
            }
        }
        return rows;
    };
    bundle.text_rows  = read_rows(lt);
    bundle.image_rows = read_rows(li);
    return bundle;
}

}  // namespace ppg
