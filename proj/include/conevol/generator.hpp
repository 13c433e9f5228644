#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conevol/errors.hpp"
#include "conevol/linalg.hpp"
#include "conevol/polytope.hpp"
#include "conevol/splitmix64.hpp"

namespace conevol {

/// Recipe for a reproducible random polytope. Vertices are sampled with
/// integer coordinates, which keeps the polar vertices and everything
/// downstream small rationals.
struct GenSpec {
    int dim = 2;
    int vertex_count = 6; // points sampled; the hull may use fewer
    int coord_range = 5;  // coordinates drawn from [-range, range]
    std::uint64_t seed = 0;
    bool symmetrize = false; // append antipodes, making P = -P
    bool center = true;      // translate the hull to its centroid
};

namespace detail {

// Builds the normalized polytope from general hull data whose offsets are
// all positive after subtracting <normal, shift>.
inline Polytope normalize_hull(const HullData& h, const Vector& shift) {
    const int n = h.points.front().dim();
    std::vector<int> pos_of(h.points.size(), -1);
    std::vector<Vector> vertices;
    vertices.reserve(h.vertex_positions.size());
    for (std::size_t i = 0; i < h.vertex_positions.size(); ++i) {
        pos_of[static_cast<std::size_t>(h.vertex_positions[i])] = static_cast<int>(i);
        vertices.push_back(h.points[static_cast<std::size_t>(h.vertex_positions[i])] - shift);
    }
    std::vector<Facet> facets;
    facets.reserve(h.hyperplanes.size());
    for (const auto& hp : h.hyperplanes) {
        ExactScalar offset = hp.offset - dot(hp.normal, shift);
        if (offset <= 0)
            throw NormalizationError("the origin is not interior after the shift");
        Facet f;
        f.polar_vertex = (ExactScalar(1) / offset) * hp.normal;
        for (int i : hp.incident)
            if (pos_of[static_cast<std::size_t>(i)] >= 0)
                f.incident.push_back(pos_of[static_cast<std::size_t>(i)]);
        std::sort(f.incident.begin(), f.incident.end());
        facets.push_back(std::move(f));
    }
    return Polytope::from_parts(n, std::move(vertices), std::move(facets));
}

} // namespace detail

/// Deterministic random centered polytope: a pure function of the spec.
/// Degenerate samples (lower-dimensional, or origin not interior when
/// centering is off) are rejected and resampled within a fixed budget.
inline Polytope generate(const GenSpec& spec) {
    if (spec.dim < 1) throw DomainError("dimension must be positive");
    if (spec.vertex_count < spec.dim + 1)
        throw DomainError("need at least dim+1 points");
    if (spec.coord_range < 1) throw DomainError("coordinate range must be positive");

    constexpr int kAttempts = 64;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        SplitMix64 rng(SplitMix64::at(spec.seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Vector> pts;
        pts.reserve(static_cast<std::size_t>(spec.vertex_count) * (spec.symmetrize ? 2 : 1));
        for (int i = 0; i < spec.vertex_count; ++i) {
            std::vector<ExactScalar> c(static_cast<std::size_t>(spec.dim));
            for (auto& x : c)
                x = ExactScalar(rng.next_in_range(-spec.coord_range, spec.coord_range));
            pts.push_back(Vector(std::move(c)));
        }
        if (spec.symmetrize) {
            const std::size_t m = pts.size();
            for (std::size_t i = 0; i < m; ++i) pts.push_back(-pts[i]);
        }
        try {
            HullData h = hull_structure(pts);
            Vector shift = spec.center ? hull_centroid_of(h) : Vector::zero(spec.dim);
            return detail::normalize_hull(h, shift);
        } catch (const DegeneracyError&) {
        } catch (const NormalizationError&) {
            // center=false and the sample missed the origin; resample.
        }
    }
    throw GenerationError("no valid polytope after " + std::to_string(kAttempts) +
                          " attempts; enlarge the range or vertex count");
}

/// Named corpus of canonical bodies with exact coordinates:
///   cube_N            [-1,1]^N                       (N = 2..5)
///   crosspolytope_N   conv{±e_i}                     (N = 2..6)
///   centered_simplex_N conv{e_1,...,e_N, -(1,...,1)} (N = 2..6)
///   square_pyramid_3  conv{(±1,±1,0),(0,0,1)} centered
///   noncentered_triangle conv{(1,0),(0,1),(-1/2,-1/2)}
inline Polytope canonical(const std::string& name) {
    auto parse_suffix = [&](const std::string& prefix, int lo, int hi) -> int {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return -1;
        std::string suffix = name.substr(prefix.size());
        if (suffix.empty() || suffix.size() > 2) return -1;
        for (char ch : suffix)
            if (ch < '0' || ch > '9') return -1;
        int n = std::stoi(suffix);
        if (n < lo || n > hi)
            throw LookupError("canonical body '" + name + "': dimension out of range [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return n;
    };

    if (int n = parse_suffix("cube_", 2, 5); n > 0) {
        std::vector<Vector> pts;
        pts.reserve(std::size_t{1} << n);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<ExactScalar> c(static_cast<std::size_t>(n));
            for (int d = 0; d < n; ++d)
                c[static_cast<std::size_t>(d)] = (mask >> d) & 1 ? 1 : -1;
            pts.push_back(Vector(std::move(c)));
        }
        return convex_hull(pts);
    }
    if (int n = parse_suffix("crosspolytope_", 2, 6); n > 0) {
        std::vector<Vector> pts;
        for (int d = 0; d < n; ++d) {
            pts.push_back(Vector::unit(n, d));
            pts.push_back(-Vector::unit(n, d));
        }
        return convex_hull(pts);
    }
    if (int n = parse_suffix("centered_simplex_", 2, 6); n > 0) {
        std::vector<Vector> pts;
        for (int d = 0; d < n; ++d) pts.push_back(Vector::unit(n, d));
        pts.push_back(Vector(std::vector<ExactScalar>(static_cast<std::size_t>(n),
                                                      ExactScalar(-1))));
        return convex_hull(pts);
    }
    if (name == "square_pyramid_3") {
        std::vector<Vector> pts;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                pts.push_back(Vector(std::vector<ExactScalar>{ExactScalar(sx),
                                                              ExactScalar(sy), 0}));
        pts.push_back(Vector(std::vector<ExactScalar>{0, 0, 1}));
        HullData h = hull_structure(pts);
        return detail::normalize_hull(h, hull_centroid_of(h));
    }
    if (name == "noncentered_triangle") {
        std::vector<Vector> pts;
        pts.push_back(Vector(std::vector<ExactScalar>{1, 0}));
        pts.push_back(Vector(std::vector<ExactScalar>{0, 1}));
        pts.push_back(Vector(std::vector<ExactScalar>{ExactScalar(-1) / 2,
                                                      ExactScalar(-1) / 2}));
        return convex_hull(pts);
    }
    throw LookupError("unknown canonical body: '" + name + "'");
}

} // namespace conevol
