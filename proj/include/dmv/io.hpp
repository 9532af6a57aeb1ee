#ifndef DMV_IO_HPP
#define DMV_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dmv/polyhedron.hpp"
#include "dmv/pwl.hpp"
#include "dmv/qmap.hpp"

// File formats. Rationals travel as canonical "p/q" (or "p") strings, so
// round-trips are bit-exact.
//
//   PwlFunc:       {"dim": n, "cells": [{"h_rep": [{"a": [...], "b": r}],
//                   "piece": {"coeffs": [...], "constant": r}}]}
//   RatPolyhedron: {"ambient_dim": n, "pieces": [{"h_rep": [...],
//                   "vertices": [[...], ...]}]}
//   QMap:          {"domain": P, "codomain": Q, "components": [PwlFunc...]}

namespace dmv {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) { return to_string(r); }
inline Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(rational_to_json(c));
    return a;
}
inline Vec vec_from_json(const json& j) {
    Vec v;
    for (const auto& c : j) v.push_back(rational_from_json(c));
    return v;
}

inline json hrep_to_json(const HRep& h) {
    json a = json::array();
    for (const auto& hs : h) a.push_back({{"a", vec_to_json(hs.a)}, {"b", rational_to_json(hs.b)}});
    return a;
}
inline HRep hrep_from_json(const json& j) {
    HRep h;
    for (const auto& c : j) h.push_back({vec_from_json(c.at("a")), rational_from_json(c.at("b"))});
    return h;
}

inline json pwl_to_json(const PwlFunc& f) {
    json cells = json::array();
    for (const auto& c : f.cells()) {
        cells.push_back({{"h_rep", hrep_to_json(c.h_rep())},
                         {"piece",
                          {{"coeffs", vec_to_json(c.piece.coeffs)},
                           {"constant", rational_to_json(c.piece.constant)}}}});
    }
    return {{"dim", f.dim()}, {"cells", cells}};
}

inline PwlFunc pwl_from_json(const json& j) {
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<Cell> cells;
    for (const auto& jc : j.at("cells")) {
        HRep h = hrep_from_json(jc.at("h_rep"));
        AffinePiece p{vec_from_json(jc.at("piece").at("coeffs")),
                      rational_from_json(jc.at("piece").at("constant"))};
        auto poly = make_polytope(std::move(h), n);  // vertices recomputed, deterministic
        if (!poly) throw std::invalid_argument("pwl cell with empty polytope");
        cells.push_back(Cell{std::move(*poly), std::move(p)});
    }
    return PwlFunc(n, std::move(cells));
}

inline json polyhedron_to_json(const RatPolyhedron& p) {
    json pieces = json::array();
    for (const auto& piece : p.pieces()) {
        json verts = json::array();
        for (const auto& v : piece.vertices) verts.push_back(vec_to_json(v));
        pieces.push_back({{"h_rep", hrep_to_json(piece.h_rep)}, {"vertices", verts}});
    }
    return {{"ambient_dim", p.ambient_dim()}, {"pieces", pieces}};
}

inline RatPolyhedron polyhedron_from_json(const json& j) {
    const std::size_t n = j.at("ambient_dim").get<std::size_t>();
    std::vector<Polytope> pieces;
    for (const auto& jp : j.at("pieces")) {
        Polytope poly;
        poly.h_rep = hrep_from_json(jp.at("h_rep"));
        for (const auto& v : jp.at("vertices")) poly.vertices.push_back(vec_from_json(v));
        if (poly.vertices.empty()) poly.vertices = vertex_enumerate(poly.h_rep, n);
        pieces.push_back(std::move(poly));
    }
    return RatPolyhedron(n, std::move(pieces));
}

inline json qmap_to_json(const QMap& m) {
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(pwl_to_json(c));
    return {{"domain", polyhedron_to_json(m.domain)},
            {"codomain", polyhedron_to_json(m.codomain)},
            {"components", comps}};
}

inline QMap qmap_from_json(const json& j) {
    std::vector<PwlFunc> comps;
    for (const auto& c : j.at("components")) comps.push_back(pwl_from_json(c));
    return QMap{polyhedron_from_json(j.at("domain")), polyhedron_from_json(j.at("codomain")),
                std::move(comps)};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace dmv

#endif
