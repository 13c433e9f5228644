#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conevol/cone_measure.hpp"
#include "conevol/errors.hpp"
#include "conevol/linalg.hpp"
#include "conevol/polytope.hpp"

namespace conevol {

inline constexpr int kDefaultAtomCap = 20;

enum class SubspaceKind { Linear, Affine };

inline const char* to_string(SubspaceKind k) {
    return k == SubspaceKind::Linear ? "linear" : "affine";
}

/// A candidate subspace: the linear or affine hull of a subset of atoms,
/// with `generators` the maximal set of atom indices contained in it.
struct SubspaceCandidate {
    SubspaceKind kind = SubspaceKind::Affine;
    std::vector<int> generators;
    AffineHull hull;
    int dim = 0;
};

/// Every distinct proper hull of a nonempty atom subset, each listed once
/// with its maximal generator set, ordered by (dim, generators).
///
/// The theorems quantify over all subspaces, but the measure is atomic: the
/// left side depends only on which atoms lie in the subspace, and replacing
/// a subspace by the hull of its atoms can only lower the dimension (hence
/// the right side). Checking the hulls of atom subsets is therefore an
/// exhaustive, strictest finite audit.
///
/// Hulls are enumerated as closure flats: starting from single atoms, each
/// flat is extended by one outside atom at a time, which reaches every flat
/// because a flat is the closure of any maximal independent subset of its
/// members. Subset enumeration is exponential in the atom count, so counts
/// above `atom_cap` are a hard error.
inline std::vector<SubspaceCandidate>
enumerate_candidates(const ConeVolumeMeasure& mu, SubspaceKind kind,
                     int atom_cap = kDefaultAtomCap) {
    const int m = static_cast<int>(mu.atoms.size());
    const int n = mu.dim;
    if (m == 0) throw DomainError("measure has no atoms");
    if (atom_cap > 64) throw DomainError("atom caps above 64 are not supported");
    if (m > atom_cap)
        throw CapError("candidate enumeration over " + std::to_string(m) +
                       " atoms exceeds the cap of " + std::to_string(atom_cap));

    const bool affine = kind == SubspaceKind::Affine;
    const int max_dim = n - 1;

    struct Flat {
        std::vector<int> members;
        std::uint64_t mask;
        int dim;
        Vector base; // affine: lowest member atom; linear: 0
        SpanBuilder span;
    };

    auto atom = [&](int i) -> const Vector& { return mu.atoms[static_cast<std::size_t>(i)].a; };

    auto close = [&](const Vector& base, const SpanBuilder& span) {
        Flat f{{}, 0, span.dim(), base, span};
        for (int j = 0; j < m; ++j) {
            if (f.span.contains(atom(j) - base)) {
                f.members.push_back(j);
                f.mask |= std::uint64_t{1} << j;
            }
        }
        return f;
    };

    std::vector<Flat> flats;
    std::map<std::uint64_t, bool> seen;

    for (int i = 0; i < m; ++i) {
        SpanBuilder span(n);
        Vector base = Vector::zero(n);
        if (affine)
            base = atom(i);
        else
            span.insert(atom(i));
        if (span.dim() > max_dim) continue; // n = 1: lin{a} is already everything
        Flat f = close(base, span);
        if (!seen.emplace(f.mask, true).second) continue;
        flats.push_back(std::move(f));
    }

    for (std::size_t head = 0; head < flats.size(); ++head) {
        if (flats[head].dim + 1 > max_dim) continue;
        for (int q = 0; q < m; ++q) {
            if (flats[head].mask & (std::uint64_t{1} << q)) continue;
            SpanBuilder span = flats[head].span;
            span.insert(atom(q) - flats[head].base);
            Flat f = close(flats[head].base, span);
            if (!seen.emplace(f.mask, true).second) continue;
            flats.push_back(std::move(f));
        }
    }

    std::vector<SubspaceCandidate> out;
    out.reserve(flats.size());
    for (const Flat& f : flats) {
        SubspaceCandidate c;
        c.kind = kind;
        c.generators = f.members;
        std::vector<Vector> pts;
        pts.reserve(f.members.size());
        for (int i : f.members) pts.push_back(atom(i));
        c.hull = affine ? affine_hull(pts) : linear_hull(pts, n);
        c.dim = c.hull.dim;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const SubspaceCandidate& a, const SubspaceCandidate& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.generators < b.generators;
    });
    return out;
}

/// Outcome of the equality-case analysis for one tight audit row.
struct Diagnosis {
    enum class Case {
        PyramidWithBase,       // affine, dim 0: body should be a pyramid over that facet
        PyramidWithApex,       // affine hyperplane supporting the polar body
        ComplementarySubspace, // linear: complementary subspace holding the rest
        Uncharacterized        // every other tight configuration
    };
    Case kind = Case::Uncharacterized;
    bool confirmed = false;
    std::optional<int> base_facet;      // pyramid cases: the base facet index
    std::optional<int> apex_vertex;     // pyramid cases: the apex vertex index
    std::optional<Vector> apex_point;   // PyramidWithApex: v_A
    std::vector<int> complement_atoms;  // ComplementarySubspace: atoms outside L
    std::vector<Vector> complement_basis;
    std::string note;
};

inline const char* to_string(Diagnosis::Case c) {
    switch (c) {
        case Diagnosis::Case::PyramidWithBase: return "pyramid_with_base";
        case Diagnosis::Case::PyramidWithApex: return "pyramid_with_apex";
        case Diagnosis::Case::ComplementarySubspace: return "complementary_subspace";
        default: return "uncharacterized_equality";
    }
}

struct AuditRow {
    SubspaceCandidate candidate;
    ExactScalar lhs;
    ExactScalar rhs;
    ExactScalar ratio;
    bool tight = false;
    std::optional<Diagnosis> diagnosis;
};

struct AuditReport {
    SubspaceKind kind = SubspaceKind::Affine;
    int dim = 0;
    bool pass = false;
    ExactScalar max_ratio;
    std::vector<AuditRow> rows;
    std::vector<int> tight_rows; // indices into rows

    const AuditRow* first_violation() const {
        for (const AuditRow& r : rows)
            if (r.lhs > r.rhs) return &r;
        return nullptr;
    }
};

struct AuditOptions {
    bool allow_noncentered = false;
    int atom_cap = kDefaultAtomCap;
};

/// Verifies the subspace concentration inequality of the requested kind for
/// every candidate hull:
///   linear: Σ_{a_i ∈ L} w_i <= (dim L / n) · vol(p)
///   affine: Σ_{a_i ∈ A} w_i <= ((dim A + 1)/(n+1)) · vol(p)
/// The theorems assume a centered body; auditing a non-centered one (to
/// exhibit counterexamples) requires the override option.
inline AuditReport check_scc(const Polytope& p, SubspaceKind kind,
                             const AuditOptions& opts = {}) {
    if (!opts.allow_noncentered && !is_centered(p))
        throw PreconditionError(
            "the audit requires a centered polytope; center() it first or pass "
            "the allow-noncentered override");

    const int n = p.dim();
    ConeVolumeMeasure mu = cone_volumes(p);
    AuditReport report;
    report.kind = kind;
    report.dim = n;
    report.pass = true;
    report.max_ratio = 0;

    for (SubspaceCandidate& c : enumerate_candidates(mu, kind, opts.atom_cap)) {
        AuditRow row;
        row.lhs = 0;
        for (int i : c.generators) row.lhs += mu.atoms[static_cast<std::size_t>(i)].w;
        row.rhs = kind == SubspaceKind::Linear
                      ? ExactScalar(c.dim) / n * mu.total
                      : ExactScalar(c.dim + 1) / (n + 1) * mu.total;
        row.ratio = row.rhs == 0 ? ExactScalar(0) : row.lhs / row.rhs;
        row.tight = row.lhs == row.rhs;
        if (row.lhs > row.rhs) report.pass = false;
        if (row.ratio > report.max_ratio) report.max_ratio = row.ratio;
        row.candidate = std::move(c);
        if (row.tight) report.tight_rows.push_back(static_cast<int>(report.rows.size()));
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace detail {

inline Diagnosis diagnose_tight(const Polytope& p, const ConeVolumeMeasure& mu,
                                const SubspaceCandidate& c) {
    const int n = p.dim();
    Diagnosis d;

    if (c.kind == SubspaceKind::Linear) {
        // Equality clause of the symmetric existence theorem: look for a
        // complementary linear subspace holding every atom outside L.
        d.kind = Diagnosis::Case::ComplementarySubspace;
        SpanBuilder combined(n);
        for (const Vector& b : c.hull.basis) combined.insert(b);
        SpanBuilder rest(n);
        for (int i = 0; i < static_cast<int>(mu.atoms.size()); ++i) {
            if (std::binary_search(c.generators.begin(), c.generators.end(), i)) continue;
            d.complement_atoms.push_back(i);
            const Vector& a = mu.atoms[static_cast<std::size_t>(i)].a;
            bool enlarged_rest = rest.insert(a);
            bool independent_of_l = combined.insert(a);
            if (enlarged_rest && !independent_of_l) {
                // lin(rest) meets L nontrivially: no complement can contain it.
                d.confirmed = false;
                d.note = "the atoms outside L span a subspace that intersects L";
                return d;
            }
        }
        // Extend lin(rest) to a full complement of L with coordinate axes.
        for (const Vector& b : rest.echelon_rows()) d.complement_basis.push_back(b);
        for (int axis = 0; axis < n && combined.dim() < n; ++axis) {
            Vector e = Vector::unit(n, axis);
            if (combined.insert(e)) {
                rest.insert(e);
                d.complement_basis.push_back(std::move(e));
            }
        }
        d.confirmed = combined.dim() == n;
        if (!d.confirmed) d.note = "internal: could not complete the complement";
        return d;
    }

    if (c.dim == 0) {
        // A = {a}: the body should be a pyramid whose base is the facet with
        // polar vertex a.
        d.kind = Diagnosis::Case::PyramidWithBase;
        int facet = c.generators.front(); // atom index == facet index
        d.base_facet = facet;
        for (const auto& [apex, base] : is_pyramid(p)) {
            if (base == facet) {
                d.confirmed = true;
                d.apex_vertex = apex;
                break;
            }
        }
        if (!d.confirmed) d.note = "no apex vertex lies on every other facet";
        return d;
    }

    if (c.dim == n - 1) {
        // A supporting hyperplane of the polar body, spanned by its
        // vertices: solve <v_A, a> = 1 on the hull; supporting means
        // <v_A, a_j> <= 1 for every atom. The body should then be a pyramid
        // with apex v_A.
        std::vector<Vector> rows;
        rows.reserve(static_cast<std::size_t>(n));
        std::vector<ExactScalar> rhs_coords(static_cast<std::size_t>(n));
        rows.push_back(c.hull.base);
        rhs_coords[0] = 1;
        for (const Vector& b : c.hull.basis) rows.push_back(b);
        auto sol = rank_and_solve(Matrix(std::move(rows)), Vector(std::move(rhs_coords)));
        if (!sol.solution) {
            d.note = "the hyperplane passes through the origin and cannot support the polar body";
            return d;
        }
        Vector v_a = std::move(*sol.solution);
        for (const auto& atomrec : mu.atoms) {
            if (dot(v_a, atomrec.a) > 1) {
                d.note = "the hyperplane does not support the polar body";
                return d;
            }
        }
        d.kind = Diagnosis::Case::PyramidWithApex;
        d.apex_point = v_a;
        for (int k = 0; k < p.vertex_count(); ++k) {
            if (p.vertices()[static_cast<std::size_t>(k)] == v_a) {
                for (const auto& [apex, base] : is_pyramid(p)) {
                    if (apex == k) {
                        d.confirmed = true;
                        d.apex_vertex = k;
                        d.base_facet = base;
                        break;
                    }
                }
                break;
            }
        }
        if (!d.confirmed) d.note = "v_A is not an apex of the body";
        return d;
    }

    // The equality cases of intermediate dimensions are open; report them
    // without guessing.
    d.kind = Diagnosis::Case::Uncharacterized;
    return d;
}

} // namespace detail

/// Equality-case analysis for a tight audit row (precondition: row.tight).
inline Diagnosis equality_diagnosis(const Polytope& p, const SubspaceCandidate& c,
                                    const AuditRow& row) {
    if (!row.tight)
        throw PreconditionError("equality_diagnosis requires a tight row");
    ConeVolumeMeasure mu = cone_volumes(p);
    return detail::diagnose_tight(p, mu, c);
}

/// check_scc plus a diagnosis attached to every tight row.
inline AuditReport diagnose_scc(const Polytope& p, SubspaceKind kind,
                                const AuditOptions& opts = {}) {
    AuditReport report = check_scc(p, kind, opts);
    ConeVolumeMeasure mu = cone_volumes(p);
    for (int idx : report.tight_rows) {
        AuditRow& row = report.rows[static_cast<std::size_t>(idx)];
        row.diagnosis = detail::diagnose_tight(p, mu, row.candidate);
    }
    return report;
}

} // namespace conevol
