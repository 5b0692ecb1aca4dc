#include <json.hpp>

#include "stern/lattice.hpp"

namespace stern {

using nlohmann::json;

namespace {

std::string shape_name(const TriPatch& p) {
    if (p.shape() == PatchShape::hex) return "hex";
    return p.orientation() == Orientation::up ? "triangle-up" : "triangle-down";
}

json header(const Ring& ring, std::string_view shape, int order) {
    return json{{"modulus", ring.modulus()}, {"shape", shape}, {"order", order}};
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

std::vector<std::vector<Value>> read_rows(const json& doc, const Ring& ring) {
    if (!doc.contains("rows") || !doc["rows"].is_array()) bad("missing \"rows\" array");
    std::vector<std::vector<Value>> rows;
    for (const auto& row : doc["rows"]) {
        if (!row.is_array()) bad("each row must be an array");
        auto& out = rows.emplace_back();
        for (const auto& v : row) {
            if (!v.is_number_integer()) bad("row entries must be integers");
            out.push_back(ring.reduce(v.get<std::int64_t>()));
        }
    }
    return rows;
}

void fill(TriPatch& p, const std::vector<std::vector<Value>>& rows) {
    if (rows.size() != static_cast<std::size_t>(p.j_max() - p.j_min() + 1)) bad("row count does not match shape");
    for (int j = p.j_min(); j <= p.j_max(); ++j) {
        const auto& row = rows[static_cast<std::size_t>(j - p.j_min())];
        if (row.size() != static_cast<std::size_t>(p.i_max(j) - p.i_min(j) + 1)) bad("row length does not match shape");
        for (int i = p.i_min(j); i <= p.i_max(j); ++i) p.ref(i, j) = row[static_cast<std::size_t>(i - p.i_min(j))];
    }
}

}  // namespace

std::string to_json(const AnyPatch& patch) {
    json doc = std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, TriPatch>) {
                json d = header(p.ring(), shape_name(p), p.order());
                d["rows"] = p.rows();
                return d;
            } else if constexpr (std::is_same_v<T, SquarePatch>) {
                json d = header(p.ring(), "square", p.order());
                d["rows"] = p.rows();
                return d;
            } else if constexpr (std::is_same_v<T, SegPatch>) {
                json d = header(p.ring, "segment", p.order);
                d["rows"] = json::array({p.values});
                return d;
            } else {
                json d = header(p.ring, "right-triangle", p.order);
                d["rows"] = json::array({p.values});
                d["points"] = p.points;
                d["triangles"] = p.triangles;
                return d;
            }
        },
        patch);
    return doc.dump();
}

namespace {

AnyPatch parse_doc(const json& doc) {
    if (!doc.is_object() || !doc.contains("modulus") || !doc.contains("shape")) bad("expected an object with modulus and shape");
    const Ring ring(doc["modulus"].get<std::uint32_t>());
    const int order = doc.value("order", 0);
    const std::string shape = doc["shape"].get<std::string>();
    const auto rows = read_rows(doc, ring);
    if (rows.empty()) bad("no rows");

    if (shape == "triangle-up" || shape == "triangle-down") {
        TriPatch p = TriPatch::triangle(ring, shape == "triangle-up" ? Orientation::up : Orientation::down,
                                        static_cast<int>(rows.size()) - 1, order);
        fill(p, rows);
        return p;
    }
    if (shape == "hex") {
        if (rows.size() % 2 == 0) bad("hex patch needs an odd row count");
        TriPatch p = TriPatch::hex(ring, static_cast<int>(rows.size() / 2), order);
        fill(p, rows);
        return p;
    }
    if (shape == "square") {
        SquarePatch p(ring, static_cast<int>(rows.size()) - 1, order);
        for (int j = 0; j <= p.side(); ++j) {
            const auto& row = rows[static_cast<std::size_t>(j)];
            if (row.size() != rows.size()) bad("square rows must all have side + 1 entries");
            for (int i = 0; i <= p.side(); ++i) p.ref(i, j) = row[static_cast<std::size_t>(i)];
        }
        return p;
    }
    if (shape == "segment") {
        return SegPatch{ring, order, rows.front()};
    }
    if (shape == "right-triangle") {
        RightTriangleMesh m{ring, order, {}, rows.front(), {}};
        try {
            m.points = doc.at("points").get<decltype(m.points)>();
            m.triangles = doc.at("triangles").get<decltype(m.triangles)>();
        } catch (const json::exception& e) {
            bad(e.what());
        }
        if (m.points.size() != m.values.size()) bad("points and values differ in length");
        for (const auto& t : m.triangles)
            for (auto idx : t)
                if (idx >= m.points.size()) bad("triangle refers to a missing point");
        return m;
    }
    bad("unknown shape \"" + shape + "\"");
}

}  // namespace

AnyPatch patch_from_json(const std::string& text) {
    try {
        return parse_doc(json::parse(text));
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

}  // namespace stern
