#pragma once

#include <algorithm>
#include <vector>

#include "conevol/errors.hpp"
#include "conevol/linalg.hpp"
#include "conevol/polytope.hpp"
#include "conevol/rational.hpp"

namespace conevol {

/// The cone volume measure of a polytope as an atomic measure: one atom per
/// facet, located at the facet's polar vertex a_i, weighted by the exact
/// volume of the cone conv(F_i ∪ {0}). Atoms follow the facet order of the
/// source polytope, so atom index == facet index.
///
/// Atoms are indexed by the polar vertices themselves rather than the unit
/// normals a_i/|a_i|: normalizing would introduce square roots, while every
/// quantity the audits compare (weights, subspace membership) is rational in
/// the a_i, and the central projection is a bijection on atoms.
struct ConeVolumeMeasure {
    struct Atom {
        Vector a;
        ExactScalar w;
    };
    int dim = 0;
    std::vector<Atom> atoms;
    ExactScalar total; // == sum of weights == volume of the source polytope
};

/// Cone volume measure of p. Each weight is obtained by triangulating the
/// facet and summing full-dimensional simplex volumes with apex 0, so no
/// root extraction is ever needed.
inline ConeVolumeMeasure cone_volumes(const Polytope& p) {
    const int n = p.dim();
    ConeVolumeMeasure mu;
    mu.dim = n;
    mu.total = 0;
    const Vector origin = Vector::zero(n);
    for (const Facet& f : p.facets()) {
        ExactScalar w = 0;
        for (const auto& simplex : triangulate_subset(p.vertices(), f.incident))
            w += simplex_volume(p.vertices(), simplex, origin);
        mu.total += w;
        mu.atoms.push_back({f.polar_vertex, std::move(w)});
    }
    return mu;
}

/// Support function h_p(u) = max over vertices of <u, v>.
inline ExactScalar support_value(const Polytope& p, const Vector& u) {
    if (u.is_zero()) throw DomainError("support function of the zero direction");
    require_same_dim(u, Vector::zero(p.dim()));
    ExactScalar best = dot(u, p.vertices().front());
    for (std::size_t i = 1; i < p.vertices().size(); ++i) {
        ExactScalar s = dot(u, p.vertices()[i]);
        if (s > best) best = std::move(s);
    }
    return best;
}

/// Total weight of the atoms whose polar vertex lies in the given affine
/// (base + span) or linear (base 0) subspace. Exact membership; an empty
/// intersection gives 0.
inline ExactScalar measure_on_affine(const ConeVolumeMeasure& mu, const AffineHull& hull) {
    SpanBuilder span(hull.base.dim());
    for (const Vector& b : hull.basis) span.insert(b);
    ExactScalar s = 0;
    for (const auto& atom : mu.atoms)
        if (span.contains(atom.a - hull.base)) s += atom.w;
    return s;
}

/// Sorted atom indices lying in the subspace.
inline std::vector<int> atoms_in_hull(const ConeVolumeMeasure& mu, const AffineHull& hull) {
    SpanBuilder span(hull.base.dim());
    for (const Vector& b : hull.basis) span.insert(b);
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mu.atoms.size()); ++i)
        if (span.contains(mu.atoms[static_cast<std::size_t>(i)].a - hull.base))
            out.push_back(i);
    return out;
}

/// The affine function f_ω(x) = Σ_{i∈ω} w_i (1 - <x, a_i>): the cone volume
/// measure of the translate p - x evaluated on the facet directions ω.
/// x must lie in p.
inline ExactScalar translated_weight(const Polytope& p, const std::vector<int>& omega,
                                     const Vector& x) {
    for (int i : omega)
        if (i < 0 || i >= p.facet_count())
            throw DomainError("facet index out of range: " + std::to_string(i));
    if (!contains_point(p, x))
        throw DomainError("translated_weight: point lies outside the polytope");
    ConeVolumeMeasure mu = cone_volumes(p);
    ExactScalar s = 0;
    for (int i : omega) {
        const auto& atom = mu.atoms[static_cast<std::size_t>(i)];
        s += atom.w * (1 - dot(x, atom.a));
    }
    return s;
}

} // namespace conevol
