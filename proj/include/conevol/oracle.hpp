#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "conevol/cone_measure.hpp"
#include "conevol/errors.hpp"
#include "conevol/linalg.hpp"
#include "conevol/polytope.hpp"
#include "conevol/splitmix64.hpp"
#include "conevol/subspace.hpp"

namespace conevol {

// Statistical oracles. These deliberately work in floating point and are
// never used inside the exact kernels; they exist to cross-check them.

struct OracleConfig {
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = 0;
    std::pair<Vector, Vector> bounding_box; // (lower corner, upper corner)
};

/// Config with the tight axis-aligned bounding box of p.
inline OracleConfig default_oracle_config(const Polytope& p, std::uint64_t samples,
                                          std::uint64_t seed) {
    const int n = p.dim();
    Vector lo = p.vertices().front();
    Vector hi = lo;
    for (const Vector& v : p.vertices()) {
        for (int d = 0; d < n; ++d) {
            if (v[d] < lo[d]) lo[d] = v[d];
            if (v[d] > hi[d]) hi[d] = v[d];
        }
    }
    return OracleConfig{samples, seed, {std::move(lo), std::move(hi)}};
}

struct McVolume {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Hit-or-miss volume estimate. Sample k draws its coordinates from the
/// counter-based stream at indices k*n..k*n+n-1, so hit counts (and hence
/// the estimate) are bit-identical for a fixed seed no matter how the
/// sample range is chunked.
inline McVolume mc_volume(const Polytope& p, const OracleConfig& cfg) {
    const int n = p.dim();
    const auto& [lo, hi] = cfg.bounding_box;
    if (lo.dim() != n || hi.dim() != n)
        throw DimensionError("bounding box dimension mismatch");
    if (cfg.sample_count < 1) throw DomainError("sample_count must be positive");
    for (const Vector& v : p.vertices())
        for (int d = 0; d < n; ++d)
            if (v[d] < lo[d] || v[d] > hi[d])
                throw PreconditionError("bounding box does not contain the polytope");

    std::vector<double> lo_d(static_cast<std::size_t>(n)), width(static_cast<std::size_t>(n));
    double box_vol = 1.0;
    for (int d = 0; d < n; ++d) {
        lo_d[static_cast<std::size_t>(d)] = lo[d].convert_to<double>();
        double w = (hi[d] - lo[d]).convert_to<double>();
        width[static_cast<std::size_t>(d)] = w;
        box_vol *= w;
    }
    std::vector<std::vector<double>> normals;
    normals.reserve(p.facets().size());
    for (const Facet& f : p.facets()) {
        std::vector<double> a(static_cast<std::size_t>(n));
        for (int d = 0; d < n; ++d) a[static_cast<std::size_t>(d)] = f.polar_vertex[d].convert_to<double>();
        normals.push_back(std::move(a));
    }

    constexpr std::uint64_t kChunk = 1 << 14;
    const std::uint64_t num_chunks = (cfg.sample_count + kChunk - 1) / kChunk;
    std::uint64_t hits = 0;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::uint64_t chunk = 0; chunk < num_chunks; ++chunk) {
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, cfg.sample_count);
        std::uint64_t chunk_hits = 0;
        for (std::uint64_t k = begin; k < end; ++k) {
            for (int d = 0; d < n; ++d)
                x[static_cast<std::size_t>(d)] =
                    lo_d[static_cast<std::size_t>(d)] +
                    SplitMix64::unit_at(cfg.seed, k * static_cast<std::uint64_t>(n) +
                                                      static_cast<std::uint64_t>(d)) *
                        width[static_cast<std::size_t>(d)];
            bool inside = true;
            for (const auto& a : normals) {
                double s = 0;
                for (int d = 0; d < n; ++d)
                    s += a[static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)];
                if (s > 1.0) {
                    inside = false;
                    break;
                }
            }
            if (inside) ++chunk_hits;
        }
        hits += chunk_hits;
    }

    McVolume out;
    out.hits = hits;
    out.samples = cfg.sample_count;
    double f = static_cast<double>(hits) / static_cast<double>(cfg.sample_count);
    out.estimate = box_vol * f;
    out.std_error = box_vol * std::sqrt(f * (1.0 - f) / static_cast<double>(cfg.sample_count));
    return out;
}

struct SampledRatio {
    ExactScalar lhs;
    ExactScalar rhs;
    ExactScalar ratio;
    int dim = 0;
};

/// Evaluates one explicit subspace against the inequality of the given
/// kind. The subspace is base + span(dirs); its effective dimension is the
/// rank of dirs. For linear kind pass base = 0.
inline SampledRatio audit_one_subspace(const ConeVolumeMeasure& mu, SubspaceKind kind,
                                       const Vector& base, const std::vector<Vector>& dirs) {
    const int n = mu.dim;
    SpanBuilder span(n);
    for (const Vector& d : dirs) span.insert(d);
    SampledRatio out;
    out.dim = span.dim();
    out.lhs = 0;
    for (const auto& atom : mu.atoms)
        if (span.contains(atom.a - base)) out.lhs += atom.w;
    out.rhs = kind == SubspaceKind::Linear
                  ? ExactScalar(out.dim) / n * mu.total
                  : ExactScalar(out.dim + 1) / (n + 1) * mu.total;
    out.ratio = out.rhs == 0 ? ExactScalar(0) : out.lhs / out.rhs;
    return out;
}

/// Samples random proper subspaces (rational base points and direction
/// bases) and returns the worst lhs/rhs ratio seen. Sound w.r.t. the
/// candidate enumeration: the result can never exceed the enumerated
/// maximum ratio, because restricting to the hull of the contained atoms
/// only shrinks the right-hand side.
inline ExactScalar brute_force_audit(const ConeVolumeMeasure& mu, SubspaceKind kind,
                                     int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be positive");
    const int n = mu.dim;
    ExactScalar worst = 0;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(SplitMix64::at(seed, static_cast<std::uint64_t>(t)));
        auto rational = [&rng]() {
            std::int64_t num = rng.next_in_range(-12, 12);
            std::int64_t den = rng.next_in_range(1, 4);
            return ExactScalar(num) / ExactScalar(den);
        };
        auto rational_vector = [&]() {
            std::vector<ExactScalar> c(static_cast<std::size_t>(n));
            for (auto& x : c) x = rational();
            return Vector(std::move(c));
        };

        int d;
        Vector base;
        if (kind == SubspaceKind::Linear) {
            d = n <= 1 ? 0 : 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
            base = Vector::zero(n);
        } else {
            d = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            base = rational_vector();
        }
        std::vector<Vector> dirs;
        dirs.reserve(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) dirs.push_back(rational_vector());

        SampledRatio r = audit_one_subspace(mu, kind, base, dirs);
        if (r.ratio > worst) worst = std::move(r.ratio);
    }
    return worst;
}

} // namespace conevol
