#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "conevol/cone_measure.hpp"
#include "conevol/errors.hpp"
#include "conevol/lifting.hpp"
#include "conevol/linalg.hpp"
#include "conevol/polytope.hpp"
#include "conevol/rational.hpp"
#include "conevol/subspace.hpp"

// JSON interchange. All rationals travel as canonical literal strings
// ("p/q", "/q" omitted for integers) so documents round-trip bit-exactly;
// integer JSON numbers are accepted on input for convenience.

namespace conevol {

using json = nlohmann::json;

inline ExactScalar rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return ExactScalar(j.get<long long>());
    throw ParseError("expected a rational literal, got: " + j.dump());
}

inline json vector_to_json(const Vector& v) {
    json arr = json::array();
    for (int i = 0; i < v.dim(); ++i) arr.push_back(rational_literal(v[i]));
    return arr;
}

inline Vector vector_from_json(const json& j, int expect_dim = -1) {
    if (!j.is_array() || j.empty())
        throw ParseError("expected a non-empty coordinate array");
    std::vector<ExactScalar> c;
    c.reserve(j.size());
    for (const auto& x : j) c.push_back(rational_from_json(x));
    Vector v(std::move(c));
    if (expect_dim >= 0 && v.dim() != expect_dim)
        throw ParseError("coordinate array of length " + std::to_string(v.dim()) +
                         ", expected " + std::to_string(expect_dim));
    return v;
}

inline json polytope_to_json(const Polytope& p) {
    json doc;
    doc["dim"] = p.dim();
    json verts = json::array();
    for (const Vector& v : p.vertices()) verts.push_back(vector_to_json(v));
    doc["vertices"] = std::move(verts);
    json facets = json::array();
    for (const Facet& f : p.facets()) {
        json fj;
        fj["a"] = vector_to_json(f.polar_vertex);
        fj["incident"] = f.incident;
        facets.push_back(std::move(fj));
    }
    doc["facets"] = std::move(facets);
    return doc;
}

/// Reads a polytope document. Only "dim" and "vertices" are required; the
/// facet structure is recomputed from the vertices, which both validates
/// the document and keeps output canonical.
inline Polytope polytope_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices"))
        throw ParseError("polytope document needs \"dim\" and \"vertices\"");
    if (!doc["dim"].is_number_integer())
        throw ParseError("\"dim\" must be an integer");
    const int n = doc["dim"].get<int>();
    if (n < 1) throw ParseError("\"dim\" must be positive");
    if (!doc["vertices"].is_array() || doc["vertices"].empty())
        throw ParseError("\"vertices\" must be a non-empty array");
    std::vector<Vector> pts;
    pts.reserve(doc["vertices"].size());
    for (const auto& vj : doc["vertices"]) pts.push_back(vector_from_json(vj, n));
    return convex_hull(pts);
}

inline json measure_to_json(const ConeVolumeMeasure& mu) {
    json doc;
    json atoms = json::array();
    for (const auto& atom : mu.atoms) {
        json aj;
        aj["a"] = vector_to_json(atom.a);
        aj["w"] = rational_literal(atom.w);
        atoms.push_back(std::move(aj));
    }
    doc["atoms"] = std::move(atoms);
    doc["total"] = rational_literal(mu.total);
    return doc;
}

inline json diagnosis_to_json(const Diagnosis& d) {
    json doc;
    doc["case"] = to_string(d.kind);
    doc["confirmed"] = d.confirmed;
    if (d.base_facet) doc["base_facet"] = *d.base_facet;
    if (d.apex_vertex) doc["apex_vertex"] = *d.apex_vertex;
    if (d.apex_point) doc["apex_point"] = vector_to_json(*d.apex_point);
    if (!d.complement_atoms.empty()) doc["complement_atoms"] = d.complement_atoms;
    if (!d.complement_basis.empty()) {
        json basis = json::array();
        for (const Vector& b : d.complement_basis) basis.push_back(vector_to_json(b));
        doc["complement_basis"] = std::move(basis);
    }
    if (!d.note.empty()) doc["note"] = d.note;
    return doc;
}

inline json report_to_json(const AuditReport& report) {
    json doc;
    doc["kind"] = to_string(report.kind);
    doc["pass"] = report.pass;
    doc["max_ratio"] = rational_literal(report.max_ratio);
    json rows = json::array();
    for (const AuditRow& row : report.rows) {
        json rj;
        rj["generators"] = row.candidate.generators;
        rj["dim"] = row.candidate.dim;
        rj["lhs"] = rational_literal(row.lhs);
        rj["rhs"] = rational_literal(row.rhs);
        rj["tight"] = row.tight;
        if (row.diagnosis) rj["diagnosis"] = diagnosis_to_json(*row.diagnosis);
        rows.push_back(std::move(rj));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

inline json tower_report_json(const LiftTower& tower, const ChainBounds& bounds) {
    json doc;
    json levels = json::array();
    for (int j = 0; j <= tower.depth(); ++j) {
        const LiftLevel& lv = tower.chain->levels[static_cast<std::size_t>(j)];
        json lj;
        lj["j"] = j;
        lj["dim"] = lv.poly.dim();
        lj["volume"] = rational_literal(lv.measure.total);
        std::vector<int> tracked;
        tracked.reserve(tower.tracked.size());
        for (int i : tower.tracked)
            tracked.push_back(lv.facet_map[static_cast<std::size_t>(i)]);
        std::sort(tracked.begin(), tracked.end());
        lj["tracked"] = std::move(tracked);
        lj["cone_volume"] = rational_literal(star_pyramid_volume(tower, j));
        if (j >= 1)
            lj["bound"] =
                rational_literal(bounds.bounds[static_cast<std::size_t>(j - 1)].second);
        levels.push_back(std::move(lj));
    }
    doc["levels"] = std::move(levels);
    doc["limit_bound"] = rational_literal(bounds.limit);
    doc["measure"] = rational_literal(bounds.measure);
    return doc;
}

} // namespace conevol
