#pragma once

// Point-set documents, structured verdict reports and PGM export.
//
// A point-set document is JSON of the form
//     {"dim": 2, "points": [[0, 0], [1, 1]]}
// Every vector must have length `dim`; duplicate points are rejected.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "digitopo/adjacency.hpp"
#include "digitopo/lattice.hpp"
#include "digitopo/manifold.hpp"

namespace digitopo::io {

using Json = nlohmann::ordered_json;

inline Point parse_point(const std::string& text, int n) {
    std::vector<int> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw Error("malformed point '" + text + "'");
        }
        if (used != item.size()) throw Error("malformed point '" + text + "'");
        coords.push_back(v);
    }
    if (static_cast<int>(coords.size()) != n) {
        throw Error("point '" + text + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                    std::to_string(n));
    }
    return Point(std::span<const int>(coords.data(), coords.size()));
}

inline Json to_json(const detail::IntVec& v) { return Json(std::vector<int>(v.coords().begin(), v.coords().end())); }

inline Json to_document(const PointSet& s) {
    Json pts = Json::array();
    for (const auto& p : s) pts.push_back(to_json(p));
    return Json{{"dim", s.dim()}, {"points", std::move(pts)}};
}

inline PointSet from_document(const Json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points")) {
        throw Error("point-set document needs fields 'dim' and 'points'");
    }
    if (!doc["dim"].is_number_integer()) throw Error("'dim' must be an integer");
    const int n = doc["dim"].get<int>();
    require_dimension(n);
    if (!doc["points"].is_array()) throw Error("'points' must be a list");
    PointSet s(n);
    for (const auto& v : doc["points"]) {
        if (!v.is_array() || static_cast<int>(v.size()) != n) {
            throw Error("every point must be a list of " + std::to_string(n) + " integers");
        }
        std::vector<int> coords;
        for (const auto& c : v) {
            if (!c.is_number_integer()) throw Error("point coordinates must be integers");
            coords.push_back(c.get<int>());
        }
        const auto p = Point(std::span<const int>(coords.data(), coords.size()));
        if (!s.insert(p)) throw Error("duplicate point " + p.str());
    }
    return s;
}

inline PointSet parse_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed point-set document: ") + e.what());
    }
    return from_document(doc);
}

inline PointSet load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

inline Json to_json(const Cube& c) {
    return Json{{"anchor", to_json(c.anchor())}, {"axes", c.axes()}};
}

inline Json to_json(const ComponentPartition& part) {
    Json blocks = Json::array();
    for (const auto& b : part.blocks) blocks.push_back(to_document(b));
    Json out{{"count", part.size()}, {"blocks", std::move(blocks)}};
    out["unbounded"] = part.unbounded ? Json(*part.unbounded) : Json(nullptr);
    return out;
}

inline Json to_json(const SeparationWitness& w) {
    return Json{{"cube", to_json(w.cube)},
                {"base", to_json(w.decomposition.base)},
                {"first", to_json(w.decomposition.first)},
                {"second", to_json(w.decomposition.second)},
                {"component", to_document(w.component)},
                {"offender", to_json(w.offender)}};
}

inline Json to_json(const ManifoldVerdict& v) {
    Json out{{"holds", v.holds}};
    if (!v.failure) return out;
    const auto& f = *v.failure;
    Json w{{"axiom", static_cast<int>(f.axiom)}, {"name", axiom_name(f.axiom)}};
    if (f.component_count) w["component_count"] = *f.component_count;
    if (f.cube) w["cube"] = to_json(*f.cube);
    if (f.point) w["point"] = to_json(*f.point);
    if (f.neighbor) w["neighbor"] = to_json(*f.neighbor);
    if (f.separation) w["separation"] = to_json(*f.separation);
    out["failure"] = std::move(w);
    return out;
}

inline Json to_json(const DoublePoint& d) {
    return Json{{"p", to_json(d.p)}, {"q", to_json(d.q)}, {"r", to_json(d.r)}, {"shift", to_json(d.shift)}};
}

/// The offending manifold candidate beta(reference) is embedded as a
/// point-set document so the witness can be re-checked directly.
inline Json to_json(const GoodPairVerdict& v, const AdjacencyPair& pair) {
    Json out{{"holds", v.holds}};
    if (!v.failure) return out;
    const auto& f = *v.failure;
    Json w{{"reference", to_json(f.reference)}, {"set", to_document(neighbors(pair.beta, f.reference))}};
    if (f.manifold) w["manifold"] = to_json(*f.manifold);
    if (f.double_point) w["double_point"] = to_json(*f.double_point);
    out["failure"] = std::move(w);
    return out;
}

inline Json to_json(const JordanReport& r) {
    Json boundary = Json::array();
    for (const auto& [p, ok] : r.boundary) boundary.push_back(Json{{"point", to_json(p)}, {"adjacent_to_all", ok}});
    return Json{{"component_count", r.component_count()},
                {"bounds_all", r.bounds_all()},
                {"complement", to_json(r.complement)},
                {"boundary", std::move(boundary)}};
}

/// Binary PGM (P5, maxval 255): one pixel per lattice point of the window,
/// members of `s` black (0), others white (255). Row 0 is the largest y.
inline std::string render_pgm(const PointSet& s, const Window& w) {
    if (s.dim() != 2 || w.dim() != 2) throw Error("rendering requires dimension 2");
    const int width = w.extent(0);
    const int height = w.extent(1);
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    for (int row = 0; row < height; ++row) {
        const int y = w.hi()[1] - row;
        for (int col = 0; col < width; ++col) {
            const int x = w.lo()[0] + col;
            out.push_back(s.contains(Point{x, y}) ? '\0' : '\xff');
        }
    }
    return out;
}

}  // namespace digitopo::io
