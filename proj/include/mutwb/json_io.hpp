#pragma once
// JSON forms of the library's values.
//
//   matrix         {"rows": r, "cols": c, "data": [[...], ...]}
//   exchange       matrix form plus "labels"
//   quiver         {"vertices": [...], "arrows": [["u", "v", m], ...]}
//   triangulation  {"m": 6, "diagonals": [[0, 2], [0, 3], [0, 4]]}
//   triangles      {"new": [...], "old": [...], "alpha": matrix, "beta": matrix}
//
// Integers are read from JSON numbers or decimal strings. On output any
// integer beyond 2^53 in magnitude is written as a decimal string.

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutwb/errors.hpp"
#include "mutwb/exchange.hpp"
#include "mutwb/genmut.hpp"
#include "mutwb/intlinalg.hpp"
#include "mutwb/typea.hpp"

namespace mutwb::json_io {

using json = nlohmann::json;

inline constexpr std::int64_t kMaxExactDouble = std::int64_t{1} << 53;

inline json to_json(const Integer& x) {
    if (abs(x) <= kMaxExactDouble) return json(x.convert_to<std::int64_t>());
    return json(x.str());
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start) throw Error(Errc::Parse, "empty integer string");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw Error(Errc::Parse, "not an integer: \"" + s + "\"");
        return Integer(s);
    }
    throw Error(Errc::Parse, "expected an integer, got " + j.dump());
}

inline json to_json(std::span<const Integer> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline json to_json(const IntMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(to_json(m.row(i)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw Error(Errc::Parse, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw Error(Errc::Parse, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::size_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw Error(Errc::Parse, std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

inline std::vector<std::string> string_list(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw Error(Errc::Parse, std::string("field \"") + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string()) throw Error(Errc::Parse, std::string("field \"") + key + "\" must hold strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

}  // namespace detail

inline IntMatrix matrix_from_json(const json& j) {
    const std::size_t rows = detail::count_field(j, "rows");
    const std::size_t cols = detail::count_field(j, "cols");
    const json& data = detail::field(j, "data");
    if (!data.is_array() || data.size() != rows)
        throw Error(Errc::Parse, "\"data\" must hold " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || row.size() != cols)
            throw Error(Errc::Parse, "row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(row[k]);
    }
    return m;
}

inline std::vector<Integer> vector_from_json(const json& j) {
    if (!j.is_array()) throw Error(Errc::Parse, "expected an integer array");
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

inline json to_json(const ExchangeMatrix& b) {
    json j = to_json(b.matrix());
    j["labels"] = b.labels();
    return j;
}

/// "labels" is optional and defaults to "0", "1", ...
inline ExchangeMatrix exchange_from_json(const json& j) {
    IntMatrix m = matrix_from_json(j);
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = detail::string_list(j, "labels");
    return ExchangeMatrix(std::move(m), std::move(labels));
}

inline json to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows()) arrows.push_back(json::array({a.source, a.target, to_json(a.multiplicity)}));
    return {{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

inline Quiver quiver_from_json(const json& j) {
    std::vector<std::string> vertices = detail::string_list(j, "vertices");
    const json& arrows = detail::field(j, "arrows");
    if (!arrows.is_array()) throw Error(Errc::Parse, "\"arrows\" must be an array");
    std::vector<Arrow> out;
    for (const auto& a : arrows) {
        if (!a.is_array() || a.size() != 3 || !a[0].is_string() || !a[1].is_string())
            throw Error(Errc::Parse, "arrow must be [source, target, multiplicity], got " + a.dump());
        out.push_back({a[0].get<std::string>(), a[1].get<std::string>(), integer_from_json(a[2])});
    }
    return Quiver(std::move(vertices), std::move(out));
}

inline json to_json(const typea::Diagonal& d) { return json::array({d.low, d.high}); }

inline typea::Diagonal diagonal_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw Error(Errc::Parse, "diagonal must be [a, b], got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

inline json to_json(const typea::Triangulation& t) {
    json d = json::array();
    for (const auto& x : t.diagonals()) d.push_back(to_json(x));
    return {{"m", t.polygon_size()}, {"diagonals", std::move(d)}};
}

inline typea::Triangulation triangulation_from_json(const json& j) {
    const json& m = detail::field(j, "m");
    if (!m.is_number_integer()) throw Error(Errc::Parse, "\"m\" must be an integer");
    const json& d = detail::field(j, "diagonals");
    if (!d.is_array()) throw Error(Errc::Parse, "\"diagonals\" must be an array");
    std::vector<typea::Diagonal> diagonals;
    for (const auto& x : d) diagonals.push_back(diagonal_from_json(x));
    return typea::validate(m.get<int>(), std::move(diagonals));
}

inline json to_json(const typea::FlipMove& f) {
    return {{"removed", to_json(f.removed)}, {"inserted", to_json(f.inserted)}};
}

inline json to_json(const ApproxTriangleData& d) {
    return {{"new", d.new_labels}, {"old", d.old_labels}, {"alpha", to_json(d.alpha)}, {"beta", to_json(d.beta)}};
}

inline ApproxTriangleData triangles_from_json(const json& j) {
    return {detail::string_list(j, "new"), detail::string_list(j, "old"), matrix_from_json(detail::field(j, "alpha")),
            matrix_from_json(detail::field(j, "beta"))};
}

inline json to_json(const TMatrix& t) {
    json j = to_json(t.t);
    j["new"] = t.new_labels;
    j["old"] = t.old_labels;
    return j;
}

inline json to_json(const AbelianGroupDescriptor& g) {
    return {{"free_rank", g.free_rank}, {"torsion", to_json(g.torsion)}, {"text", g.to_string()}};
}

inline json to_json(const SnfResult& s) {
    return {{"U", to_json(s.u)}, {"D", to_json(s.d)}, {"V", to_json(s.v)}, {"diagonal", to_json(s.diagonal())}};
}

/// Parses text, turning JSON syntax errors into Errc::Parse.
inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
}

}  // namespace mutwb::json_io
