#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "conevol/cone_measure.hpp"
#include "conevol/errors.hpp"
#include "conevol/linalg.hpp"
#include "conevol/polytope.hpp"
#include "conevol/subspace.hpp"

namespace conevol {

// Each lift adds a dimension and the exact hull cost grows combinatorially,
// so towers are capped. Small depths already certify the dimension-uniform
// invariants.
inline constexpr int kDefaultDepthCap = 4;

/// The embedding R^k -> R^{k+1}, a |-> ((k+2)/(k+1) a, -1/(k+1)). It sends
/// outer normal vectors of a body to outer normal vectors of its lift.
inline Vector phi_embed(const Vector& a) {
    const int k = a.dim();
    if (k < 1) throw DimensionError("phi_embed needs a positive-dimensional argument");
    std::vector<ExactScalar> c;
    c.reserve(static_cast<std::size_t>(k) + 1);
    ExactScalar scale = ExactScalar(k + 2) / (k + 1);
    for (int i = 0; i < k; ++i) c.push_back(scale * a[i]);
    c.push_back(ExactScalar(-1) / (k + 1));
    return Vector(std::move(c));
}

/// The iterated embedding psi: phi_{base_dim+levels-1} ∘ ... ∘ phi_{base_dim}
/// applied to a vector of dimension base_dim; the identity for levels == 0.
inline Vector psi_embed(int base_dim, int levels, Vector a) {
    if (a.dim() != base_dim)
        throw DimensionError("psi_embed argument has the wrong dimension");
    for (int j = 0; j < levels; ++j) a = phi_embed(a);
    return a;
}

/// One pyramid lift: conv(p x {1} ∪ {-(n+1) e_{n+1}}) in R^{n+1}. Preserves
/// centeredness and scales the volume by (n+2)/(n+1); the facet polar
/// vertices of the lift are {phi(a_i)} ∪ {e_{n+1}}. The facets are obtained
/// by enumeration, not by formula, so the correspondence stays checkable.
inline Polytope lift_once(const Polytope& p, bool allow_noncentered = false) {
    if (!allow_noncentered && !is_centered(p))
        throw PreconditionError("lift_once requires a centered polytope "
                                "(or the allow-noncentered override)");
    const int n = p.dim();
    std::vector<Vector> lifted;
    lifted.reserve(p.vertices().size() + 1);
    for (const Vector& v : p.vertices()) {
        std::vector<ExactScalar> c = v.coords();
        c.push_back(1);
        lifted.push_back(Vector(std::move(c)));
    }
    lifted.push_back(ExactScalar(-(n + 1)) * Vector::unit(n + 1, n));
    return convex_hull(lifted);
}

/// One level of a lift chain: the j-fold lift together with its cone volume
/// measure and the facet correspondence to the base.
struct LiftLevel {
    int j = 0;
    Polytope poly;
    ConeVolumeMeasure measure;
    // facet_map[i] = index of the level facet whose polar vertex is the
    // psi-image of base facet i's polar vertex. Identity at level 0.
    std::vector<int> facet_map;
};

/// Lift chain K^(0), ..., K^(J); independent of any tracked subspace, so one
/// chain serves every track over the same base body.
struct LiftChain {
    int base_dim = 0;
    int depth = 0;
    std::vector<LiftLevel> levels; // levels[j] has j extra dimensions
};

inline LiftChain build_chain(const Polytope& p, int depth,
                             int depth_cap = kDefaultDepthCap,
                             bool allow_noncentered = false) {
    if (depth < 0) throw DomainError("lift depth must be non-negative");
    if (depth > depth_cap)
        throw CapError("lift depth " + std::to_string(depth) +
                       " exceeds the cap of " + std::to_string(depth_cap));
    LiftChain chain;
    chain.base_dim = p.dim();
    chain.depth = depth;

    LiftLevel base;
    base.j = 0;
    base.poly = p;
    base.measure = cone_volumes(p);
    base.facet_map.resize(static_cast<std::size_t>(p.facet_count()));
    for (int i = 0; i < p.facet_count(); ++i) base.facet_map[static_cast<std::size_t>(i)] = i;
    chain.levels.push_back(std::move(base));

    for (int j = 1; j <= depth; ++j) {
        const LiftLevel& prev = chain.levels.back();
        LiftLevel level;
        level.j = j;
        level.poly = lift_once(prev.poly, allow_noncentered);
        level.measure = cone_volumes(level.poly);
        level.facet_map.resize(static_cast<std::size_t>(p.facet_count()));
        for (int i = 0; i < p.facet_count(); ++i) {
            Vector image = phi_embed(
                prev.poly.facets()[static_cast<std::size_t>(prev.facet_map[static_cast<std::size_t>(i)])]
                    .polar_vertex);
            int found = -1;
            for (int k = 0; k < level.poly.facet_count(); ++k) {
                if (level.poly.facets()[static_cast<std::size_t>(k)].polar_vertex == image) {
                    found = k;
                    break;
                }
            }
            if (found < 0)
                throw Error("lift facet correspondence broken: phi-image of a facet "
                            "polar vertex is not a facet of the lift");
            level.facet_map[static_cast<std::size_t>(i)] = found;
        }
        chain.levels.push_back(std::move(level));
    }
    return chain;
}

/// A lift tower: a chain plus a tracked facet set F^(j) and the linear
/// subspaces L^(j) spanned by the psi-images of the tracked subspace A.
struct LiftTower {
    std::shared_ptr<const LiftChain> chain;
    SubspaceCandidate candidate;     // A = hull of the tracked atoms
    std::vector<int> tracked;        // base facet indices, sorted
    std::vector<AffineHull> subspaces; // subspaces[j] = L^(j); [0] is A itself

    int depth() const { return chain->depth; }
    int base_dim() const { return chain->base_dim; }
};

/// L^(j) = lin(psi(A)), computed as the span of the psi-images of an affine
/// spanning set of A. Has dimension dim(A) + 1 for every j >= 1.
inline AffineHull lifted_subspace(const AffineHull& a, int base_dim, int j) {
    std::vector<Vector> spanning;
    spanning.push_back(psi_embed(base_dim, j, a.base));
    for (const Vector& b : a.basis)
        spanning.push_back(psi_embed(base_dim, j, a.base + b));
    return linear_hull(spanning, base_dim + j);
}

inline LiftTower build_tower(std::shared_ptr<const LiftChain> chain,
                             const SubspaceCandidate& a,
                             std::vector<int> tracked) {
    LiftTower tower;
    tower.candidate = a;
    std::sort(tracked.begin(), tracked.end());
    const int facet_count = chain->levels.front().poly.facet_count();
    for (int i : tracked)
        if (i < 0 || i >= facet_count)
            throw DomainError("tracked facet index out of range: " + std::to_string(i));
    tower.tracked = std::move(tracked);
    tower.subspaces.push_back(a.hull);
    for (int j = 1; j <= chain->depth; ++j)
        tower.subspaces.push_back(lifted_subspace(a.hull, chain->base_dim, j));
    tower.chain = std::move(chain);
    return tower;
}

/// Tower over a candidate subspace: the tracked facets are the candidate's
/// generator atoms.
inline LiftTower build_tower(const Polytope& p, const SubspaceCandidate& a, int depth,
                             int depth_cap = kDefaultDepthCap,
                             bool allow_noncentered = false) {
    auto chain = std::make_shared<const LiftChain>(
        build_chain(p, depth, depth_cap, allow_noncentered));
    return build_tower(std::move(chain), a, a.generators);
}

/// Tower over an arbitrary facet subset; the associated subspace A is the
/// affine hull of the tracked polar vertices.
inline LiftTower build_tower_over_facets(std::shared_ptr<const LiftChain> chain,
                                         std::vector<int> tracked) {
    const ConeVolumeMeasure& mu = chain->levels.front().measure;
    std::sort(tracked.begin(), tracked.end());
    std::vector<Vector> pts;
    pts.reserve(tracked.size());
    for (int i : tracked) {
        if (i < 0 || i >= static_cast<int>(mu.atoms.size()))
            throw DomainError("tracked facet index out of range: " + std::to_string(i));
        pts.push_back(mu.atoms[static_cast<std::size_t>(i)].a);
    }
    if (pts.empty()) throw DomainError("a tower needs at least one tracked facet");
    SubspaceCandidate c;
    c.kind = SubspaceKind::Affine;
    c.hull = affine_hull(pts);
    c.dim = c.hull.dim;
    c.generators = atoms_in_hull(mu, c.hull);
    return build_tower(std::move(chain), c, std::move(tracked));
}

/// H^{n+j} measure of the tracked cone C^(j) = [F^(j), 0]: the sum of the
/// tracked facets' cone volumes at level j. Equal to the level-0 value for
/// every j (the lift preserves tracked cone volume).
inline ExactScalar star_pyramid_volume(const LiftTower& tower, int level) {
    if (level < 0 || level > tower.depth())
        throw DomainError("tower level out of range");
    const LiftLevel& lv = tower.chain->levels[static_cast<std::size_t>(level)];
    ExactScalar s = 0;
    for (int i : tower.tracked)
        s += lv.measure.atoms[static_cast<std::size_t>(lv.facet_map[static_cast<std::size_t>(i)])].w;
    return s;
}

/// The chain of upper bounds the lift argument produces, each computed two
/// ways that must agree exactly:
///   bound_j = (dim A + 1)/(n+j) · vol(K^(j))
///           = (dim A + 1)(n+j+1) / ((n+j)(n+1)) · vol(K)
/// The bounds decrease strictly in j toward the affine-inequality limit
/// (dim A + 1)/(n+1) · vol(K).
struct ChainBounds {
    std::vector<std::pair<int, ExactScalar>> bounds; // (j, bound_j), j = 1..J
    ExactScalar limit;
    ExactScalar measure; // tracked cone volume at level 0
    int subspace_dim = 0;
};

inline ChainBounds chain_bounds(const LiftTower& tower) {
    if (tower.depth() < 1)
        throw PreconditionError("chain_bounds requires a tower of depth >= 1");
    const int n = tower.base_dim();
    const int da = tower.candidate.dim;
    const ExactScalar& base_vol = tower.chain->levels.front().measure.total;

    ChainBounds out;
    out.subspace_dim = da;
    out.measure = star_pyramid_volume(tower, 0);
    out.limit = ExactScalar(da + 1) / (n + 1) * base_vol;
    for (int j = 1; j <= tower.depth(); ++j) {
        const ExactScalar& lift_vol =
            tower.chain->levels[static_cast<std::size_t>(j)].measure.total;
        ExactScalar from_lift = ExactScalar(da + 1) / (n + j) * lift_vol;
        ExactScalar closed_form = ExactScalar((da + 1) * (n + j + 1)) /
                                  ExactScalar((n + j) * (n + 1)) * base_vol;
        if (from_lift != closed_form)
            throw Error("lift volume disagrees with the closed form at level " +
                        std::to_string(j));
        out.bounds.emplace_back(j, std::move(from_lift));
    }
    return out;
}

} // namespace conevol
