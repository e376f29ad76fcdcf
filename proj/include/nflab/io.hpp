#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nflab/complex.hpp"

namespace nflab::io {

// Faces as parsed, before maximal-face reduction. `reduced` is set when the
// input listed non-maximal or duplicate faces.
struct ParsedComplex {
    SimplicialComplex complex;
    bool reduced = false;
};

inline nlohmann::ordered_json facet_to_json(VertexSet f) { return nlohmann::ordered_json(f.vertices()); }

// {"n": 5, "facets": [[1,2],[2,3,4]]}; {∅} is {"n": 3, "facets": [[]]}.
inline nlohmann::ordered_json to_json(const SimplicialComplex& c) {
    nlohmann::ordered_json facets = nlohmann::ordered_json::array();
    for (VertexSet f : c.facets()) facets.push_back(facet_to_json(f));
    return nlohmann::ordered_json{{"n", c.n()}, {"facets", std::move(facets)}};
}

namespace detail {

inline ParsedComplex finish(int n, std::vector<VertexSet> faces) {
    const std::size_t given = faces.size();
    SimplicialComplex c = SimplicialComplex::from_faces(n, std::move(faces));
    return ParsedComplex{c, c.facet_count() != given};
}

template <typename Json>
int parse_n(const Json& n) {
    if (!n.is_number_integer()) throw Error("field \"n\": expected an integer");
    const auto value = n.template get<long long>();
    if (value < 1 || value > kMaxVertices) {
        throw Error("field \"n\": " + std::to_string(value) + " outside 1.." + std::to_string(kMaxVertices));
    }
    return static_cast<int>(value);
}

}  // namespace detail

template <typename Json>
ParsedComplex from_json(const Json& doc) {
    if (!doc.is_object()) throw Error("complex document: expected a JSON object");
    if (!doc.contains("n")) throw Error("field \"n\": missing");
    if (!doc.contains("facets")) throw Error("field \"facets\": missing");
    const int n = detail::parse_n(doc.at("n"));
    const auto& facets = doc.at("facets");
    if (!facets.is_array()) throw Error("field \"facets\": expected an array of arrays");
    std::vector<VertexSet> faces;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& f = facets[i];
        const std::string where = "field \"facets[" + std::to_string(i) + "]\"";
        if (!f.is_array()) throw Error(where + ": expected an array of vertices");
        VertexSet s;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw Error(where + ": vertices must be integers");
            const auto vertex = v.template get<long long>();
            if (vertex < 1 || vertex > n) {
                throw Error(where + ": vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(n));
            }
            s.insert(static_cast<int>(vertex));
        }
        faces.push_back(s);
    }
    if (faces.empty()) throw Error("field \"facets\": void complex not supported");
    return detail::finish(n, std::move(faces));
}

inline ParsedComplex from_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    return from_json(doc);
}

// Compact line format: "5: 1 2 | 2 3 4 | 2 5 | 4 5". "3:" alone is {∅}.
inline std::string to_line(const SimplicialComplex& c) {
    std::string out = std::to_string(c.n()) + ":";
    if (c.is_empty_face()) return out;
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
        if (i) out += " |";
        for (int v : c.facets()[i].vertices()) out += " " + std::to_string(v);
    }
    return out;
}

inline ParsedComplex from_line(std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw Error("line format: missing ':' after n");
    int n = 0;
    {
        std::istringstream head{std::string(line.substr(0, colon))};
        std::string extra;
        if (!(head >> n) || (head >> extra)) throw Error("line format: n must be a single integer");
        if (n < 1 || n > kMaxVertices) {
            throw Error("line format: n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
        }
    }
    const std::string_view body = line.substr(colon + 1);
    if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return detail::finish(n, {VertexSet{}});

    std::vector<VertexSet> faces;
    std::size_t start = 0;
    while (start <= body.size()) {
        const auto bar = body.find('|', start);
        const std::string_view chunk = body.substr(start, bar == std::string_view::npos ? body.npos : bar - start);
        std::istringstream in{std::string(chunk)};
        VertexSet s;
        std::string token;
        while (in >> token) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw Error("line format: bad vertex '" + token + "'");
            }
            if (v < 1 || v > n) throw Error("line format: vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            s.insert(v);
        }
        faces.push_back(s);
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return detail::finish(n, std::move(faces));
}

// JSON when the first non-blank character is '{', the line format otherwise.
inline ParsedComplex parse_document(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw Error("empty complex document");
    if (text[first] == '{') return from_json_text(text);
    const auto end = text.find_last_not_of(" \t\r\n");
    return from_line(text.substr(first, end - first + 1));
}

}  // namespace nflab::io
