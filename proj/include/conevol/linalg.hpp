#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "conevol/errors.hpp"
#include "conevol/rational.hpp"

namespace conevol {

/// Dense exact vector. Immutable by convention: operations return fresh
/// values and never mutate their arguments.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<ExactScalar> coords) : c_(std::move(coords)) {}

    static Vector zero(int dim) {
        return Vector(std::vector<ExactScalar>(static_cast<std::size_t>(dim)));
    }

    static Vector unit(int dim, int axis) {
        Vector v = zero(dim);
        v.c_[static_cast<std::size_t>(axis)] = 1;
        return v;
    }

    int dim() const { return static_cast<int>(c_.size()); }
    const ExactScalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    ExactScalar& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<ExactScalar>& coords() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const ExactScalar& x) { return x == 0; });
    }

    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return a.c_ != b.c_; }

    /// Lexicographic order; the canonical order used for all sorting.
    friend bool operator<(const Vector& a, const Vector& b) {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(),
                                            b.c_.end());
    }

private:
    std::vector<ExactScalar> c_;
};

inline void require_same_dim(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim())
        throw DimensionError("vector dimensions differ: " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
}

inline Vector operator+(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    std::vector<ExactScalar> c(a.coords());
    for (int i = 0; i < b.dim(); ++i) c[static_cast<std::size_t>(i)] += b[i];
    return Vector(std::move(c));
}

inline Vector operator-(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    std::vector<ExactScalar> c(a.coords());
    for (int i = 0; i < b.dim(); ++i) c[static_cast<std::size_t>(i)] -= b[i];
    return Vector(std::move(c));
}

inline Vector operator-(const Vector& a) {
    std::vector<ExactScalar> c(a.coords());
    for (auto& x : c) x = -x;
    return Vector(std::move(c));
}

inline Vector operator*(const ExactScalar& s, const Vector& a) {
    std::vector<ExactScalar> c(a.coords());
    for (auto& x : c) x *= s;
    return Vector(std::move(c));
}

inline ExactScalar dot(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    ExactScalar s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

/// Dense exact matrix, stored as a list of equal-length rows.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::vector<Vector> rows) : rows_(std::move(rows)) {
        for (const Vector& r : rows_)
            if (r.dim() != col_count())
                throw DimensionError("matrix rows have unequal lengths");
    }

    static Matrix identity(int n) {
        std::vector<Vector> rows;
        rows.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rows.push_back(Vector::unit(n, i));
        return Matrix(std::move(rows));
    }

    static Matrix from_columns(const std::vector<Vector>& cols, int row_dim) {
        std::vector<Vector> rows;
        rows.reserve(static_cast<std::size_t>(row_dim));
        for (int i = 0; i < row_dim; ++i) {
            std::vector<ExactScalar> r;
            r.reserve(cols.size());
            for (const Vector& c : cols) r.push_back(c[i]);
            rows.push_back(Vector(std::move(r)));
        }
        return Matrix(std::move(rows));
    }

    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return rows_.empty() ? 0 : rows_.front().dim(); }
    const Vector& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<Vector>& rows() const { return rows_; }

private:
    std::vector<Vector> rows_;
};

namespace detail {

// Workhorse: in-place fraction-ful Gaussian elimination on a row-major grid.
// Pivot rule: among the nonzero entries of the current column, take the one
// with the smallest bit size (ties to the lowest row). Deterministic, and
// keeps intermediate values small on the integer-heavy inputs we see.
struct Elimination {
    std::vector<std::vector<ExactScalar>> a;
    std::vector<int> pivot_cols; // one entry per pivot row, ascending
    int sign = 1;                // parity of row swaps

    explicit Elimination(const Matrix& m, const Vector* rhs = nullptr) {
        a.reserve(static_cast<std::size_t>(m.row_count()));
        for (int i = 0; i < m.row_count(); ++i) {
            std::vector<ExactScalar> row = m.row(i).coords();
            if (rhs) row.push_back((*rhs)[i]);
            a.push_back(std::move(row));
        }
    }

    int rows() const { return static_cast<int>(a.size()); }
    int cols() const { return a.empty() ? 0 : static_cast<int>(a.front().size()); }

    // Reduces columns [0, col_limit) to row echelon form.
    void run(int col_limit) {
        int r = static_cast<int>(pivot_cols.size());
        for (int c = r == 0 ? 0 : pivot_cols.back() + 1; c < col_limit && r < rows(); ++c) {
            int best = -1;
            std::size_t best_bits = 0;
            for (int i = r; i < rows(); ++i) {
                const ExactScalar& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                if (v == 0) continue;
                std::size_t bits = bit_length(v);
                if (best < 0 || bits < best_bits) {
                    best = i;
                    best_bits = bits;
                }
            }
            if (best < 0) continue;
            if (best != r) {
                std::swap(a[static_cast<std::size_t>(best)], a[static_cast<std::size_t>(r)]);
                sign = -sign;
            }
            const std::size_t rc = static_cast<std::size_t>(r);
            for (int i = r + 1; i < rows(); ++i) {
                std::size_t ic = static_cast<std::size_t>(i);
                if (a[ic][static_cast<std::size_t>(c)] == 0) continue;
                ExactScalar f = a[ic][static_cast<std::size_t>(c)] / a[rc][static_cast<std::size_t>(c)];
                for (int k = c; k < cols(); ++k) {
                    std::size_t kc = static_cast<std::size_t>(k);
                    a[ic][kc] -= f * a[rc][kc];
                }
            }
            pivot_cols.push_back(c);
            ++r;
        }
    }
};

} // namespace detail

/// Exact determinant. Throws DimensionError on non-square input.
inline ExactScalar determinant(const Matrix& m) {
    if (m.row_count() != m.col_count())
        throw DimensionError("determinant requires a square matrix");
    if (m.row_count() == 0) return 1;
    detail::Elimination e(m);
    e.run(m.col_count());
    if (static_cast<int>(e.pivot_cols.size()) < m.row_count()) return 0;
    ExactScalar d = e.sign;
    for (int i = 0; i < m.row_count(); ++i)
        d *= e.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.pivot_cols[static_cast<std::size_t>(i)])];
    return d;
}

struct SolveReport {
    int rank = 0;
    // Present iff a rhs was supplied and the system is consistent; free
    // variables are set to zero. Satisfies m * solution = rhs exactly.
    std::optional<Vector> solution;
};

/// Exact rank, and (when rhs is given) one exact solution of m*x = rhs.
/// An inconsistent system yields an empty solution, not an error.
inline SolveReport rank_and_solve(const Matrix& m,
                                  const std::optional<Vector>& rhs = std::nullopt) {
    if (rhs && rhs->dim() != m.row_count())
        throw DimensionError("rhs length must equal the matrix row count");
    detail::Elimination e(m, rhs ? &*rhs : nullptr);
    e.run(m.col_count());
    SolveReport out;
    out.rank = static_cast<int>(e.pivot_cols.size());
    if (!rhs) return out;

    // Consistent iff no nonzero entry remains in the rhs column below the
    // pivot rows.
    const std::size_t rhs_col = static_cast<std::size_t>(m.col_count());
    for (int i = out.rank; i < e.rows(); ++i)
        if (e.a[static_cast<std::size_t>(i)][rhs_col] != 0) return out;

    Vector x = Vector::zero(m.col_count());
    for (int i = out.rank - 1; i >= 0; --i) {
        const std::size_t ic = static_cast<std::size_t>(i);
        int pc = e.pivot_cols[static_cast<std::size_t>(i)];
        ExactScalar s = e.a[ic][rhs_col];
        for (int k = pc + 1; k < m.col_count(); ++k)
            s -= e.a[ic][static_cast<std::size_t>(k)] * x[k];
        x[pc] = s / e.a[ic][static_cast<std::size_t>(pc)];
    }
    out.solution = std::move(x);
    return out;
}

/// Echelon basis of a linear span with exact membership tests. Inserted
/// vectors are reduced against the existing rows; a vector extends the span
/// iff a nonzero residue remains.
class SpanBuilder {
public:
    explicit SpanBuilder(int ambient_dim) : ambient_(ambient_dim) {}

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    bool contains(const Vector& v) const { return reduce(v).is_zero(); }

    /// Returns true if v enlarged the span.
    bool insert(const Vector& v) {
        Vector r = reduce(v);
        int pc = 0;
        while (pc < ambient_ && r[pc] == 0) ++pc;
        if (pc == ambient_) return false;
        ExactScalar inv = ExactScalar(1) / r[pc];
        Vector unit_row = inv * r;
        // Keep the basis fully reduced so `reduce` is a single sweep.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            ExactScalar f = rows_[i][pc];
            if (f != 0) rows_[i] = rows_[i] - f * unit_row;
        }
        std::size_t insert_at = 0;
        while (insert_at < pivots_.size() && pivots_[insert_at] < pc) ++insert_at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(insert_at), std::move(unit_row));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(insert_at), pc);
        return true;
    }

    const std::vector<Vector>& echelon_rows() const { return rows_; }

private:
    Vector reduce(const Vector& v) const {
        if (v.dim() != ambient_)
            throw DimensionError("span member has wrong dimension");
        Vector r = v;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            ExactScalar f = r[pivots_[i]];
            if (f != 0) r = r - f * rows_[i];
        }
        return r;
    }

    int ambient_;
    std::vector<Vector> rows_;
    std::vector<int> pivots_;
};

/// Affine (or, with base 0, linear) subspace given by a base point and an
/// independent direction basis.
struct AffineHull {
    int dim = 0;
    Vector base;
    std::vector<Vector> basis;
};

/// Affine hull of a non-empty point set. The returned basis is the subset of
/// difference vectors (points[i] - points[0]) that first enlarged the span,
/// in input order.
inline AffineHull affine_hull(const std::vector<Vector>& points) {
    if (points.empty()) throw DomainError("affine_hull of an empty point set");
    const int n = points.front().dim();
    AffineHull h;
    h.base = points.front();
    SpanBuilder span(n);
    for (std::size_t i = 1; i < points.size(); ++i) {
        require_same_dim(points[i], h.base);
        Vector d = points[i] - h.base;
        if (span.insert(d)) h.basis.push_back(std::move(d));
    }
    h.dim = static_cast<int>(h.basis.size());
    return h;
}

/// Linear hull of a vector set; basis members are input vectors.
inline AffineHull linear_hull(const std::vector<Vector>& vectors, int ambient_dim) {
    AffineHull h;
    h.base = Vector::zero(ambient_dim);
    SpanBuilder span(ambient_dim);
    for (const Vector& v : vectors)
        if (span.insert(v)) h.basis.push_back(v);
    h.dim = static_cast<int>(h.basis.size());
    return h;
}

inline bool hull_contains(const AffineHull& h, const Vector& p) {
    SpanBuilder span(h.base.dim());
    for (const Vector& b : h.basis) span.insert(b);
    return span.contains(p - h.base);
}

/// The unique hyperplane {x : <normal, x> = offset} through d points of R^d,
/// or nullopt if the points are affinely dependent. Scale is arbitrary.
inline std::optional<std::pair<Vector, ExactScalar>>
hyperplane_through(const std::vector<Vector>& pts) {
    const int d = pts.front().dim();
    if (static_cast<int>(pts.size()) != d)
        throw DimensionError("hyperplane_through needs exactly d points in R^d");
    // Solve <c, p_i> - c0 = 0: the kernel of the d x (d+1) matrix [p_i | -1]
    // must be one-dimensional.
    std::vector<Vector> rows;
    rows.reserve(pts.size());
    for (const Vector& p : pts) {
        std::vector<ExactScalar> r = p.coords();
        r.push_back(-1);
        rows.push_back(Vector(std::move(r)));
    }
    detail::Elimination e{Matrix(std::move(rows))};
    e.run(d + 1);
    if (static_cast<int>(e.pivot_cols.size()) != d) return std::nullopt;

    // One free column; set its coordinate to 1 and back-substitute.
    std::vector<bool> is_pivot(static_cast<std::size_t>(d) + 1, false);
    for (int pc : e.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;

    std::vector<ExactScalar> x(static_cast<std::size_t>(d) + 1);
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int i = d - 1; i >= 0; --i) {
        const std::size_t ic = static_cast<std::size_t>(i);
        int pc = e.pivot_cols[ic];
        ExactScalar s = 0;
        for (int k = pc + 1; k <= d; ++k)
            s -= e.a[ic][static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(pc)] = s / e.a[ic][static_cast<std::size_t>(pc)];
    }
    ExactScalar offset = x.back();
    x.pop_back();
    return std::make_pair(Vector(std::move(x)), std::move(offset));
}

} // namespace conevol
