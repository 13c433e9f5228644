#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conevol/errors.hpp"
#include "conevol/linalg.hpp"
#include "conevol/rational.hpp"

namespace conevol {

/// One inequality <normal, x> <= offset of a hull, together with the indices
/// of all input points lying on the hyperplane.
struct SupportingHyperplane {
    Vector normal;
    ExactScalar offset;
    std::vector<int> incident;
};

/// A facet of a polytope in the <a, x> <= 1 normalization: `polar_vertex` is
/// the vector a (a vertex of the polar body), `incident` the sorted indices
/// of the vertices with <a, v> = 1.
struct Facet {
    Vector polar_vertex;
    std::vector<int> incident;
};

namespace detail {

inline bool next_combination(std::vector<int>& idx, int m) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < m - (k - i)) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

inline bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

} // namespace detail

/// All facet-defining hyperplanes of conv(pts), by brute force: every
/// d-subset of points determines at most one hyperplane; it supports the
/// hull iff all points lie on one side. Coplanar subsets merge into a single
/// entry. The points must affinely span R^d.
inline std::vector<SupportingHyperplane>
facet_hyperplanes(const std::vector<Vector>& pts) {
    const int d = pts.front().dim();
    const int m = static_cast<int>(pts.size());
    if (m < d + 1)
        throw DegeneracyError("facet enumeration needs at least d+1 points");

    // Canonical key of an oriented hyperplane: divide by |first nonzero
    // normal entry| so positively proportional pairs coincide.
    auto canonical_key = [d](const Vector& normal, const ExactScalar& offset) {
        int fn = 0;
        while (fn < d && normal[fn] == 0) ++fn;
        ExactScalar s = normal[fn] < 0 ? -normal[fn] : normal[fn];
        std::vector<ExactScalar> key;
        key.reserve(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i < d; ++i) key.push_back(normal[i] / s);
        key.push_back(offset / s);
        return key;
    };

    std::map<std::vector<ExactScalar>, SupportingHyperplane> found;
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        // Subsets inside an already-found facet would rediscover it.
        bool covered = false;
        for (const auto& entry : found) {
            const std::vector<int>& inc = entry.second.incident;
            if (std::all_of(idx.begin(), idx.end(),
                            [&inc](int i) { return detail::sorted_contains(inc, i); })) {
                covered = true;
                break;
            }
        }
        if (covered) continue;

        std::vector<Vector> subset;
        subset.reserve(idx.size());
        for (int i : idx) subset.push_back(pts[static_cast<std::size_t>(i)]);
        auto plane = hyperplane_through(subset);
        if (!plane) continue;
        auto& [normal, offset] = *plane;

        bool below = true, above = true;
        std::vector<int> incident;
        for (int i = 0; i < m; ++i) {
            ExactScalar s = dot(normal, pts[static_cast<std::size_t>(i)]) - offset;
            if (s == 0)
                incident.push_back(i);
            else if (s > 0)
                below = false;
            else
                above = false;
            if (!below && !above) break;
        }
        if (!below && !above) continue;
        if (!below) {
            normal = -normal;
            offset = -offset;
        }
        auto key = canonical_key(normal, offset);
        if (found.count(key)) continue;
        found.emplace(std::move(key),
                      SupportingHyperplane{std::move(normal), std::move(offset),
                                           std::move(incident)});
    } while (detail::next_combination(idx, m));

    std::vector<SupportingHyperplane> out;
    out.reserve(found.size());
    for (auto& [key, hp] : found) out.push_back(std::move(hp));
    return out;
}

/// Deduplicated, lexicographically sorted input points plus their hull data.
struct HullData {
    std::vector<Vector> points;                    // sorted unique input points
    std::vector<SupportingHyperplane> hyperplanes; // incident indexes `points`
    std::vector<int> vertex_positions;             // ascending positions of extreme points
};

/// General hull structure with no origin requirement. Throws DegeneracyError
/// when the points do not span the ambient space.
inline HullData hull_structure(const std::vector<Vector>& input) {
    if (input.empty()) throw DomainError("hull of an empty point set");
    const int n = input.front().dim();
    for (const Vector& p : input) require_same_dim(p, input.front());

    HullData h;
    h.points = input;
    std::sort(h.points.begin(), h.points.end());
    h.points.erase(std::unique(h.points.begin(), h.points.end()), h.points.end());

    if (affine_hull(h.points).dim != n)
        throw DegeneracyError("points span a lower-dimensional set");

    h.hyperplanes = facet_hyperplanes(h.points);

    // A point of the hull is a vertex iff its active constraints have rank n.
    for (int i = 0; i < static_cast<int>(h.points.size()); ++i) {
        SpanBuilder active(n);
        for (const auto& hp : h.hyperplanes)
            if (detail::sorted_contains(hp.incident, i)) active.insert(hp.normal);
        if (active.dim() == n) h.vertex_positions.push_back(i);
    }
    return h;
}

/// Triangulates conv(pts[subset]) into simplices of its own affine
/// dimension, returned as (dim+1)-tuples of indices into `pts`. Fans from
/// the lowest index of each face, recursively.
inline std::vector<std::vector<int>>
triangulate_subset(const std::vector<Vector>& pts, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    std::vector<Vector> sub_pts;
    sub_pts.reserve(subset.size());
    for (int i : subset) sub_pts.push_back(pts[static_cast<std::size_t>(i)]);

    AffineHull hull = affine_hull(sub_pts);
    const int d = hull.dim;
    if (static_cast<int>(subset.size()) == d + 1) return {subset};

    // Coordinates within the face's own affine hull; full-dimensional there.
    Matrix basis_cols = Matrix::from_columns(hull.basis, hull.base.dim());
    std::vector<Vector> coords;
    coords.reserve(sub_pts.size());
    for (const Vector& p : sub_pts) {
        auto sol = rank_and_solve(basis_cols, p - hull.base);
        coords.push_back(std::move(*sol.solution));
    }

    std::vector<std::vector<int>> out;
    for (const auto& face : facet_hyperplanes(coords)) {
        if (detail::sorted_contains(face.incident, 0)) continue; // anchor on this face
        std::vector<int> face_subset;
        face_subset.reserve(face.incident.size());
        for (int k : face.incident) face_subset.push_back(subset[static_cast<std::size_t>(k)]);
        for (auto& simplex : triangulate_subset(pts, std::move(face_subset))) {
            std::vector<int> s;
            s.reserve(simplex.size() + 1);
            s.push_back(subset.front());
            s.insert(s.end(), simplex.begin(), simplex.end());
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// Volume of the n-simplex conv({apex} ∪ base).
inline ExactScalar simplex_volume(const std::vector<Vector>& pts,
                                  const std::vector<int>& base, const Vector& apex) {
    std::vector<Vector> rows;
    rows.reserve(base.size());
    for (int i : base) rows.push_back(pts[static_cast<std::size_t>(i)] - apex);
    ExactScalar det = determinant(Matrix(std::move(rows)));
    if (det < 0) det = -det;
    return det / ExactScalar(factorial(apex.dim()));
}

namespace detail {

// Shared fan decomposition: cones from anchor_pos over every facet whose
// hyperplane misses the anchor partition the hull.
template <typename Visit>
inline void fan_simplices(const std::vector<Vector>& pts,
                          const std::vector<SupportingHyperplane>& hyperplanes,
                          int anchor_pos, Visit&& visit) {
    for (const auto& hp : hyperplanes) {
        if (sorted_contains(hp.incident, anchor_pos)) continue;
        for (const auto& simplex : triangulate_subset(pts, hp.incident))
            visit(simplex);
    }
}

} // namespace detail

/// Exact volume of conv(points); no origin requirement.
inline ExactScalar hull_volume_of(const HullData& h) {
    const Vector& anchor = h.points.front();
    ExactScalar vol = 0;
    detail::fan_simplices(h.points, h.hyperplanes, 0, [&](const std::vector<int>& s) {
        vol += simplex_volume(h.points, s, anchor);
    });
    return vol;
}

inline ExactScalar hull_volume(const std::vector<Vector>& points) {
    return hull_volume_of(hull_structure(points));
}

/// Exact centroid of conv(points): volume-weighted average of the fan
/// simplices' centroids.
inline Vector hull_centroid_of(const HullData& h) {
    const int n = h.points.front().dim();
    const Vector& anchor = h.points.front();
    ExactScalar vol = 0;
    Vector weighted = Vector::zero(n);
    detail::fan_simplices(h.points, h.hyperplanes, 0, [&](const std::vector<int>& s) {
        ExactScalar v = simplex_volume(h.points, s, anchor);
        Vector c = anchor;
        for (int i : s) c = c + h.points[static_cast<std::size_t>(i)];
        weighted = weighted + (v / ExactScalar(n + 1)) * c;
        vol += v;
    });
    return (ExactScalar(1) / vol) * weighted;
}

inline Vector hull_centroid(const std::vector<Vector>& points) {
    return hull_centroid_of(hull_structure(points));
}

/// Full-dimensional polytope with the origin interior, in dual
/// representation: irredundant vertices plus facets <a_i, x> <= 1 carrying
/// their polar vertices a_i and incident vertex lists. Canonical order
/// (vertices and facets sorted lexicographically) makes equality structural.
class Polytope {
public:
    Polytope() = default;

    int dim() const { return dim_; }
    const std::vector<Vector>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    /// Assembles a polytope from parts that are already geometrically
    /// consistent (used by operations that transform an existing polytope);
    /// reorders everything into canonical form. Use check_invariants() to
    /// audit the result.
    static Polytope from_parts(int dim, std::vector<Vector> vertices,
                               std::vector<Facet> facets) {
        const int m = static_cast<int>(vertices.size());
        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return vertices[static_cast<std::size_t>(a)] < vertices[static_cast<std::size_t>(b)];
        });
        std::vector<int> new_pos(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            new_pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

        Polytope p;
        p.dim_ = dim;
        p.vertices_.reserve(vertices.size());
        for (int i : order) p.vertices_.push_back(std::move(vertices[static_cast<std::size_t>(i)]));
        for (Facet& f : facets) {
            for (int& v : f.incident) v = new_pos[static_cast<std::size_t>(v)];
            std::sort(f.incident.begin(), f.incident.end());
        }
        std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
            return a.polar_vertex < b.polar_vertex;
        });
        p.facets_ = std::move(facets);
        return p;
    }

    /// Verifies every representation invariant; throws Error on violation.
    void check_invariants() const {
        if (dim_ < 1) throw Error("polytope dimension must be positive");
        if (vertex_count() < dim_ + 1 || facet_count() < dim_ + 1)
            throw Error("a full-dimensional polytope needs at least dim+1 vertices and facets");
        for (const Vector& v : vertices_)
            if (v.dim() != dim_) throw DimensionError("vertex of wrong dimension");
        if (!std::is_sorted(vertices_.begin(), vertices_.end()))
            throw Error("vertices not in canonical order");
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw Error("duplicate vertices");
        if (affine_hull(vertices_).dim != dim_)
            throw DegeneracyError("vertices do not span the ambient space");

        for (std::size_t i = 0; i + 1 < facets_.size(); ++i)
            if (!(facets_[i].polar_vertex < facets_[i + 1].polar_vertex))
                throw Error("facets not in canonical order");

        for (const Facet& f : facets_) {
            if (f.polar_vertex.dim() != dim_)
                throw DimensionError("facet polar vertex of wrong dimension");
            if (f.incident.empty() || !std::is_sorted(f.incident.begin(), f.incident.end()))
                throw Error("facet incident list not sorted");
            for (int k = 0; k < vertex_count(); ++k) {
                ExactScalar s = dot(f.polar_vertex, vertices_[static_cast<std::size_t>(k)]);
                bool inc = detail::sorted_contains(f.incident, k);
                if (inc && s != 1)
                    throw Error("incident vertex not on the facet hyperplane");
                if (!inc && s >= 1)
                    throw Error(s == 1 ? "missing incidence" : "vertex outside a facet halfspace");
            }
            std::vector<Vector> face_pts;
            face_pts.reserve(f.incident.size());
            for (int k : f.incident) face_pts.push_back(vertices_[static_cast<std::size_t>(k)]);
            if (affine_hull(face_pts).dim != dim_ - 1)
                throw Error("facet does not span a hyperplane");
        }

        // Extremality: each vertex must be the unique solution of its active
        // facet equations.
        for (int k = 0; k < vertex_count(); ++k) {
            SpanBuilder active(dim_);
            for (const Facet& f : facets_)
                if (detail::sorted_contains(f.incident, k)) active.insert(f.polar_vertex);
            if (active.dim() != dim_) throw Error("vertex is not extreme");
        }
    }

    friend bool operator==(const Polytope& a, const Polytope& b) {
        if (a.dim_ != b.dim_ || a.vertices_ != b.vertices_ ||
            a.facets_.size() != b.facets_.size())
            return false;
        for (std::size_t i = 0; i < a.facets_.size(); ++i)
            if (a.facets_[i].polar_vertex != b.facets_[i].polar_vertex ||
                a.facets_[i].incident != b.facets_[i].incident)
                return false;
        return true;
    }

private:
    int dim_ = 0;
    std::vector<Vector> vertices_;
    std::vector<Facet> facets_;
};

/// Is x in the polytope (boundary included)?
inline bool contains_point(const Polytope& p, const Vector& x) {
    require_same_dim(x, Vector::zero(p.dim()));
    for (const Facet& f : p.facets())
        if (dot(f.polar_vertex, x) > 1) return false;
    return true;
}

/// Convex hull in the <a, x> <= 1 normalization. The input must span R^n
/// and have the origin strictly inside; duplicates and non-extreme points
/// are filtered out.
inline Polytope convex_hull(const std::vector<Vector>& points) {
    HullData h = hull_structure(points);
    const int n = h.points.front().dim();

    for (const auto& hp : h.hyperplanes)
        if (hp.offset <= 0)
            throw NormalizationError(
                "the origin is not an interior point; translate the body first "
                "(e.g. by its centroid)");

    std::vector<int> pos_of(h.points.size(), -1);
    std::vector<Vector> vertices;
    vertices.reserve(h.vertex_positions.size());
    for (std::size_t i = 0; i < h.vertex_positions.size(); ++i) {
        pos_of[static_cast<std::size_t>(h.vertex_positions[i])] = static_cast<int>(i);
        vertices.push_back(h.points[static_cast<std::size_t>(h.vertex_positions[i])]);
    }

    std::vector<Facet> facets;
    facets.reserve(h.hyperplanes.size());
    for (const auto& hp : h.hyperplanes) {
        Facet f;
        f.polar_vertex = (ExactScalar(1) / hp.offset) * hp.normal;
        for (int i : hp.incident)
            if (pos_of[static_cast<std::size_t>(i)] >= 0)
                f.incident.push_back(pos_of[static_cast<std::size_t>(i)]);
        std::sort(f.incident.begin(), f.incident.end());
        facets.push_back(std::move(f));
    }
    return Polytope::from_parts(n, std::move(vertices), std::move(facets));
}

/// Exact volume via the canonical fan triangulation from vertex 0.
inline ExactScalar volume(const Polytope& p) {
    const Vector& anchor = p.vertices().front();
    ExactScalar vol = 0;
    for (const Facet& f : p.facets()) {
        if (detail::sorted_contains(f.incident, 0)) continue;
        for (const auto& simplex : triangulate_subset(p.vertices(), f.incident))
            vol += simplex_volume(p.vertices(), simplex, anchor);
    }
    return vol;
}

/// Exact centroid (volume-weighted average of fan-simplex centroids).
inline Vector centroid(const Polytope& p) {
    const int n = p.dim();
    const Vector& anchor = p.vertices().front();
    ExactScalar vol = 0;
    Vector weighted = Vector::zero(n);
    for (const Facet& f : p.facets()) {
        if (detail::sorted_contains(f.incident, 0)) continue;
        for (const auto& simplex : triangulate_subset(p.vertices(), f.incident)) {
            ExactScalar v = simplex_volume(p.vertices(), simplex, anchor);
            Vector c = anchor;
            for (int i : simplex) c = c + p.vertices()[static_cast<std::size_t>(i)];
            weighted = weighted + (v / ExactScalar(n + 1)) * c;
            vol += v;
        }
    }
    return (ExactScalar(1) / vol) * weighted;
}

inline bool is_centered(const Polytope& p) { return centroid(p).is_zero(); }

/// Translates the body so its centroid is the origin. The facet polar
/// vertices transform as a -> a / (1 - <a, c>); idempotent.
inline Polytope center(const Polytope& p) {
    Vector c = centroid(p);
    if (c.is_zero()) return p;
    std::vector<Vector> vertices;
    vertices.reserve(p.vertices().size());
    for (const Vector& v : p.vertices()) vertices.push_back(v - c);
    std::vector<Facet> facets = p.facets();
    for (Facet& f : facets) {
        ExactScalar rescale = 1 - dot(f.polar_vertex, c); // > 0: c is interior
        f.polar_vertex = (ExactScalar(1) / rescale) * f.polar_vertex;
    }
    return Polytope::from_parts(p.dim(), std::move(vertices), std::move(facets));
}

/// Polar dual: vertices become facets and facets become vertices, with the
/// incidence relation transposed. polar(polar(p)) == p.
inline Polytope polar(const Polytope& p) {
    std::vector<Vector> vertices;
    vertices.reserve(p.facets().size());
    for (const Facet& f : p.facets()) vertices.push_back(f.polar_vertex);

    std::vector<Facet> facets;
    facets.reserve(p.vertices().size());
    for (int j = 0; j < p.vertex_count(); ++j) {
        Facet f;
        f.polar_vertex = p.vertices()[static_cast<std::size_t>(j)];
        for (int i = 0; i < p.facet_count(); ++i)
            if (detail::sorted_contains(p.facets()[static_cast<std::size_t>(i)].incident, j))
                f.incident.push_back(i);
        facets.push_back(std::move(f));
    }
    return Polytope::from_parts(p.dim(), std::move(vertices), std::move(facets));
}

/// All (apex vertex, base facet) pairs such that every facet other than the
/// base contains the apex. Empty if the polytope is not a pyramid.
inline std::vector<std::pair<int, int>> is_pyramid(const Polytope& p) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < p.vertex_count(); ++v) {
        int missing = -1;
        int missing_count = 0;
        for (int i = 0; i < p.facet_count(); ++i) {
            if (!detail::sorted_contains(p.facets()[static_cast<std::size_t>(i)].incident, v)) {
                missing = i;
                if (++missing_count > 1) break;
            }
        }
        if (missing_count == 1) pairs.emplace_back(v, missing);
    }
    return pairs;
}

} // namespace conevol
