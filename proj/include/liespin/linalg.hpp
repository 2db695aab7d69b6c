#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liespin/matrix.hpp"

namespace liespin {

/// Thrown when a metric has no orthonormal frame representable over Q(sqrt2).
struct UnsupportedMetricError : std::runtime_error {
    explicit UnsupportedMetricError(const std::string& what) : std::runtime_error(what) {}
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

/// Reduced row echelon form. Pivot choice: first nonzero entry in column order,
/// pivots normalized to 1, eliminated above and below. Canonical for a given row space.
inline RrefResult rref(Matrix m) {
    RrefResult out;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = lead; r < rows; ++r) {
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != lead) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
        }
        const Scalar inv = m(lead, col).inverse();
        for (std::size_t j = col; j < cols; ++j) m(lead, j) = inv * m(lead, j);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, col).is_zero()) continue;
            const Scalar f = m(r, col);
            for (std::size_t j = col; j < cols; ++j) m(r, j) = m(r, j) - f * m(lead, j);
        }
        out.pivot_columns.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_columns.size();
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Exact basis of the kernel, one vector per free column, canonical order.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    const RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivot_columns) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) {
            v[r.pivot_columns[k]] = -r.reduced(k, free);
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Solves A x = b exactly; nullopt when inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
    const RrefResult r = rref(aug);
    Vector x(a.cols(), Scalar(0));
    for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) {
        if (r.pivot_columns[k] == a.cols()) return std::nullopt;  // pivot in the b column
        x[r.pivot_columns[k]] = r.reduced(k, a.cols());
    }
    return x;
}

inline Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Matrix::identity(n));
    const RrefResult r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] >= n)) {
        throw std::invalid_argument("inverse: matrix is singular");
    }
    return r.reduced.block(0, n, n, n);
}

struct FormSignature {
    std::size_t neg = 0;   // p
    std::size_t pos = 0;   // q
    std::size_t zero = 0;  // z
    bool operator==(const FormSignature&) const = default;
};

struct CongruenceDiagonalization {
    Matrix basis_change;          // P with P^T G P diagonal
    std::vector<Scalar> diagonal; // real scalars
};

/// Symmetric Gaussian congruence over the real subfield; a zero diagonal with a
/// nonzero off-diagonal entry is repaired by the hyperbolic completion e_k + e_j.
inline CongruenceDiagonalization congruence_diagonalize(const Matrix& g0) {
    if (!g0.is_square()) throw std::invalid_argument("congruence_diagonalize: matrix not square");
    if (!g0.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: matrix not symmetric");
    if (!g0.is_real()) throw std::invalid_argument("congruence_diagonalize: entries must lie in Q(sqrt2)");
    const std::size_t n = g0.rows();
    Matrix g = g0;
    Matrix p = Matrix::identity(n);

    // e_col' = e_col + f*e_src applied to G (both sides) and P.
    auto add_col = [&](std::size_t col, std::size_t src, const Scalar& f) {
        for (std::size_t i = 0; i < n; ++i) g(i, col) += f * g(i, src);
        for (std::size_t j = 0; j < n; ++j) g(col, j) += f * g(src, j);
        for (std::size_t i = 0; i < n; ++i) p(i, col) += f * p(i, src);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < n; ++i) std::swap(g(i, x), g(i, y));
        for (std::size_t j = 0; j < n; ++j) std::swap(g(x, j), g(y, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(p(i, x), p(i, y));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (g(k, k).is_zero()) {
            std::size_t d = n;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!g(j, j).is_zero()) {
                    d = j;
                    break;
                }
            }
            if (d < n) {
                swap_cols(k, d);
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (!g(k, j).is_zero()) {
                        off = j;
                        break;
                    }
                }
                if (off == n) continue;  // row/column already clean, diagonal stays zero
                add_col(k, off, Scalar(1));
            }
        }
        const Scalar pivot = g(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k || g(k, j).is_zero()) continue;
            add_col(j, k, -(g(k, j) / pivot));
        }
    }

    CongruenceDiagonalization out;
    out.basis_change = std::move(p);
    out.diagonal.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.diagonal.push_back(g(k, k));
    return out;
}

/// Sylvester inertia (negatives, positives, zeros) of a real symmetric form.
inline FormSignature form_signature(const Matrix& g) {
    const CongruenceDiagonalization d = congruence_diagonalize(g);
    FormSignature s;
    for (const Scalar& v : d.diagonal) {
        const int sig = v.sign();
        if (sig < 0) ++s.neg;
        else if (sig > 0) ++s.pos;
        else ++s.zero;
    }
    return s;
}

struct OrthonormalFrame {
    Matrix frame;  // columns f_k with f^T G f = diag(-1..., +1...)
    std::size_t neg = 0;
    std::size_t pos = 0;
};

/// Exact orthonormal frame over Q(sqrt2), negatives first. Throws
/// UnsupportedMetricError when a diagonal value has no square root in the field.
inline OrthonormalFrame exact_orthonormal_frame(const Matrix& g) {
    CongruenceDiagonalization d = congruence_diagonalize(g);
    const std::size_t n = g.rows();
    std::vector<std::size_t> negs, poss;
    for (std::size_t k = 0; k < n; ++k) {
        const int sig = d.diagonal[k].sign();
        if (sig == 0) {
            throw UnsupportedMetricError("exact_orthonormal_frame: form is degenerate");
        }
        const Scalar mag = sig > 0 ? d.diagonal[k] : -d.diagonal[k];
        const auto root = Scalar::sqrt_real(mag);
        if (!root) {
            throw UnsupportedMetricError("exact_orthonormal_frame: diagonal value " +
                                         d.diagonal[k].str() + " has no square root in Q(sqrt2)");
        }
        const Scalar inv = root->inverse();
        for (std::size_t i = 0; i < n; ++i) {
            d.basis_change(i, k) = inv * d.basis_change(i, k);
        }
        (sig < 0 ? negs : poss).push_back(k);
    }
    OrthonormalFrame out;
    out.neg = negs.size();
    out.pos = poss.size();
    out.frame = Matrix(n, n);
    std::size_t col = 0;
    for (std::size_t k : negs) out.frame.set_column(col++, d.basis_change.column(k));
    for (std::size_t k : poss) out.frame.set_column(col++, d.basis_change.column(k));
    return out;
}

/// A subspace of Q(i,sqrt2)^n kept in reduced row echelon form, so equal
/// subspaces compare equal element-wise.
class RowSpan {
public:
    explicit RowSpan(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vector>& basis() const { return rows_; }

    bool contains(const Vector& v) const { return vector_is_zero(reduce(v)); }

    /// Adds a vector; true when the span grew.
    bool add(const Vector& v) {
        Vector r = reduce(v);
        std::size_t lead = ambient_;
        for (std::size_t k = 0; k < ambient_; ++k) {
            if (!r[k].is_zero()) {
                lead = k;
                break;
            }
        }
        if (lead == ambient_) return false;
        r = vector_scale(r[lead].inverse(), r);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (!rows_[k][lead].is_zero()) {
                rows_[k] = vector_sub(rows_[k], vector_scale(rows_[k][lead], r));
            }
        }
        const auto where = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
        const std::size_t pos = static_cast<std::size_t>(where - pivots_.begin());
        pivots_.insert(where, lead);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
        return true;
    }

    bool operator==(const RowSpan& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
    }

private:
    Vector reduce(Vector v) const {
        if (v.size() != ambient_) throw std::invalid_argument("RowSpan: vector length mismatch");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Scalar& c = v[pivots_[k]];
            if (!c.is_zero()) v = vector_sub(v, vector_scale(c, rows_[k]));
        }
        return v;
    }

    std::size_t ambient_;
    std::vector<Vector> rows_;          // RREF rows
    std::vector<std::size_t> pivots_;   // strictly increasing
};

inline RowSpan span_of_vectors(std::size_t ambient, const std::vector<Vector>& vs) {
    RowSpan s(ambient);
    for (const auto& v : vs) s.add(v);
    return s;
}

/// Canonical echelonized basis of the span of a set of vectors.
inline std::vector<Vector> echelon_basis(std::size_t ambient, const std::vector<Vector>& vs) {
    return span_of_vectors(ambient, vs).basis();
}

/// A space of square matrices with exact span, membership and closure queries.
class OperatorSpan {
public:
    explicit OperatorSpan(std::size_t ambient_dim)
        : n_(ambient_dim), span_(ambient_dim * ambient_dim) {}

    static OperatorSpan span_of(std::size_t ambient_dim, const std::vector<Matrix>& generators) {
        OperatorSpan s(ambient_dim);
        for (const auto& g : generators) s.add(g);
        return s;
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return span_.dim(); }

    bool contains(const Matrix& m) const { return span_.contains(flatten_checked(m)); }

    bool add(const Matrix& m) {
        if (span_.add(flatten_checked(m))) {
            return true;
        }
        return false;
    }

    /// Canonical reduced basis, unflattened.
    std::vector<Matrix> basis() const {
        std::vector<Matrix> out;
        out.reserve(span_.dim());
        for (const auto& row : span_.basis()) {
            Matrix m(n_, n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) m(i, j) = row[i * n_ + j];
            out.push_back(std::move(m));
        }
        return out;
    }

    bool operator==(const OperatorSpan& o) const { return n_ == o.n_ && span_ == o.span_; }
    bool operator!=(const OperatorSpan& o) const { return !(*this == o); }

    bool is_abelian() const {
        const auto b = basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (!commutator(b[i], b[j]).is_zero()) return false;
        return true;
    }

private:
    Vector flatten_checked(const Matrix& m) const {
        if (m.rows() != n_ || m.cols() != n_) {
            throw std::invalid_argument("OperatorSpan: operator shape " + m.shape_str() +
                                        " does not match ambient dimension " + std::to_string(n_));
        }
        return m.flatten();
    }

    std::size_t n_;
    RowSpan span_;
};

/// Smallest span containing s and closed under the matrix commutator.
inline OperatorSpan bracket_closure(const OperatorSpan& s) {
    OperatorSpan out = s;
    std::vector<Matrix> work = s.basis();
    while (!work.empty()) {
        std::vector<Matrix> fresh;
        const std::vector<Matrix> current = out.basis();
        for (const auto& w : work) {
            for (const auto& b : current) {
                Matrix c = commutator(w, b);
                if (out.add(c)) fresh.push_back(std::move(c));
            }
        }
        work = std::move(fresh);
    }
    return out;
}

}  // namespace liespin
