#pragma once

#include <string>
#include <vector>

#include "liespin/linalg.hpp"
#include "liespin/matrix.hpp"

namespace liespin {

/// Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
class StructureConstants {
public:
    StructureConstants() : dim_(0) {}
    explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Scalar(0)) {}

    std::size_t dim() const { return dim_; }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[index(i, j, k)];
    }

    /// Sets [e_i, e_j] and, by antisymmetry, [e_j, e_i].
    void set_bracket(std::size_t i, std::size_t j, const Vector& value) {
        if (value.size() != dim_) throw std::invalid_argument("StructureConstants::set_bracket: bad length");
        for (std::size_t k = 0; k < dim_; ++k) {
            c_[index(i, j, k)] = value[k];
            c_[index(j, i, k)] = -value[k];
        }
    }

    void add_to_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        c_[index(i, j, k)] += v;
        c_[index(j, i, k)] -= v;
    }

    Vector bracket_basis(std::size_t i, std::size_t j) const {
        Vector out(dim_);
        for (std::size_t k = 0; k < dim_; ++k) out[k] = c_[index(i, j, k)];
        return out;
    }

    Vector bracket(const Vector& x, const Vector& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("StructureConstants::bracket: bad vector length");
        Vector out(dim_, Scalar(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Scalar& ck = c_[index(i, j, k)];
                    if (!ck.is_zero()) out[k] += f * ck;
                }
            }
        }
        return out;
    }

    bool operator==(const StructureConstants& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw std::out_of_range("StructureConstants: index out of range");
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_;
    std::vector<Scalar> c_;
};

/// Lie algebra with a non-degenerate ad-invariant scalar product.
struct MetricLieAlgebra {
    std::vector<std::string> labels;
    StructureConstants structure;
    Matrix metric;

    std::size_t dim() const { return structure.dim(); }
    Vector bracket(const Vector& x, const Vector& y) const { return structure.bracket(x, y); }
};

/// Same data, but the invariant form may degenerate (the h-factor of a double extension).
struct DegenerateFormAlgebra {
    std::vector<std::string> labels;
    StructureConstants structure;
    Matrix metric;

    std::size_t dim() const { return structure.dim(); }
    Vector bracket(const Vector& x, const Vector& y) const { return structure.bracket(x, y); }
};

template <typename A>
concept LieAlgebraLike = requires(const A& a) {
    { a.labels } -> std::convertible_to<std::vector<std::string>>;
    { a.structure } -> std::convertible_to<StructureConstants>;
    { a.metric } -> std::convertible_to<Matrix>;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    bool ok() const { return violations.empty(); }
};

namespace detail {

template <LieAlgebraLike A>
inline void validate_common(const A& a, ValidationReport& report) {
    const std::size_t n = a.dim();
    if (a.labels.size() != n) {
        report.violations.push_back("labels: expected " + std::to_string(n) + " labels, got " +
                                    std::to_string(a.labels.size()));
    }
    if (a.metric.rows() != n || a.metric.cols() != n) {
        report.violations.push_back("metric: shape " + a.metric.shape_str() + " does not match dim " +
                                    std::to_string(n));
        return;
    }
    if (!a.metric.is_symmetric()) report.violations.push_back("metric: not symmetric");
    if (!a.metric.is_real()) report.violations.push_back("metric: entries must lie in Q(sqrt2)");

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (a.structure.at(i, j, k) != -a.structure.at(j, i, k)) {
                    report.violations.push_back("antisymmetry: c[" + std::to_string(i) + "][" +
                                                std::to_string(j) + "][" + std::to_string(k) +
                                                "] != -c[j][i][k]");
                    i = j = n - 1;
                    break;
                }
            }
        }
    }

    for (std::size_t i = 0; i + 2 < n + 0; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector jac = vector_add(
                    a.bracket(a.structure.bracket_basis(i, j), unit_vector(n, k)),
                    vector_add(a.bracket(a.structure.bracket_basis(j, k), unit_vector(n, i)),
                               a.bracket(a.structure.bracket_basis(k, i), unit_vector(n, j))));
                if (!vector_is_zero(jac)) {
                    report.violations.push_back("jacobi: fails on basis triple (" + std::to_string(i) +
                                                "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
            }
        }
    }

    // <[x,y],z> + <y,[x,z]> = 0 on all basis triples.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs = form_value(a.metric, a.structure.bracket_basis(i, j), unit_vector(n, k)) +
                             form_value(a.metric, unit_vector(n, j), a.structure.bracket_basis(i, k));
                if (!lhs.is_zero()) {
                    report.violations.push_back(
                        "invariance: <[e" + std::to_string(i) + ",e" + std::to_string(j) + "],e" +
                        std::to_string(k) + "> + <e" + std::to_string(j) + ",[e" + std::to_string(i) +
                        ",e" + std::to_string(k) + "]> != 0");
                    i = j = n - 1;
                    break;
                }
            }
        }
    }
}

}  // namespace detail

inline ValidationReport validate(const MetricLieAlgebra& a) {
    ValidationReport report;
    detail::validate_common(a, report);
    if (a.metric.rows() == a.dim() && a.metric.cols() == a.dim() && rank(a.metric) != a.dim()) {
        report.violations.push_back("metric: form is degenerate (rank " +
                                    std::to_string(rank(a.metric)) + " < " + std::to_string(a.dim()) +
                                    ")");
    }
    return report;
}

inline ValidationReport validate(const DegenerateFormAlgebra& a) {
    ValidationReport report;
    detail::validate_common(a, report);
    return report;
}

/// Matrix of y -> [x, y] in the algebra basis.
template <LieAlgebraLike A>
inline Matrix ad_operator(const A& a, const Vector& x) {
    const std::size_t n = a.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, a.bracket(x, unit_vector(n, j)));
    return m;
}

template <LieAlgebraLike A>
inline std::vector<Matrix> ad_basis(const A& a) {
    std::vector<Matrix> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(ad_operator(a, unit_vector(a.dim(), i)));
    return out;
}

/// B(x, y) = trace(ad x . ad y).
template <LieAlgebraLike A>
inline Matrix killing_form(const A& a) {
    const std::size_t n = a.dim();
    const std::vector<Matrix> ads = ad_basis(a);
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Scalar t(0);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) t += ads[i](r, s) * ads[j](s, r);
            b(i, j) = t;
            b(j, i) = t;
        }
    }
    return b;
}

/// Canonical echelonized basis of [a, a].
template <LieAlgebraLike A>
inline std::vector<Vector> derived_subalgebra(const A& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) gens.push_back(a.structure.bracket_basis(i, j));
    return echelon_basis(n, gens);
}

/// Canonical basis of {x : ad x = 0}, via the kernel of the stacked ad-representation.
template <LieAlgebraLike A>
inline std::vector<Vector> center(const A& a) {
    const std::size_t n = a.dim();
    Matrix stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) stacked(j * n + k, i) = a.structure.at(i, j, k);
    return kernel_basis(stacked);
}

struct DerivationReport {
    std::vector<std::string> violations;
    bool leibniz_ok = true;
    bool antisymmetry_ok = true;
    bool ok() const { return violations.empty(); }
};

/// Checks A[x,y] = [Ax,y] + [x,Ay] and <Ax,y> + <x,Ay> = 0 on all basis pairs.
template <LieAlgebraLike A>
inline DerivationReport is_metric_derivation(const A& a, const Matrix& op) {
    DerivationReport report;
    const std::size_t n = a.dim();
    if (op.rows() != n || op.cols() != n) {
        report.violations.push_back("operator shape " + op.shape_str() + " does not match dim " +
                                    std::to_string(n));
        report.leibniz_ok = report.antisymmetry_ok = false;
        return report;
    }
    for (std::size_t i = 0; i < n && report.leibniz_ok; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = op.apply(a.structure.bracket_basis(i, j));
            const Vector rhs = vector_add(a.bracket(op.column(i), unit_vector(n, j)),
                                          a.bracket(unit_vector(n, i), op.column(j)));
            if (!vector_is_zero(vector_sub(lhs, rhs))) {
                report.leibniz_ok = false;
                report.violations.push_back("leibniz: fails on basis pair (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
                break;
            }
        }
    }
    if (!(op.transpose() * a.metric + a.metric * op).is_zero()) {
        report.antisymmetry_ok = false;
        report.violations.push_back("antisymmetry: A^T G + G A != 0");
    }
    return report;
}

/// Solution space of the antisymmetric-derivation equations, as an operator span.
template <LieAlgebraLike A>
inline OperatorSpan antisymmetric_derivations(const A& a) {
    const std::size_t n = a.dim();
    // Unknown D (n x n, row-major). Equations: Leibniz on basis pairs and D^T G + G D = 0.
    const std::size_t unknowns = n * n;
    std::vector<Vector> eqs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // D [e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, one equation per output index k.
            const Vector bij = a.structure.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector eq(unknowns, Scalar(0));
                for (std::size_t c = 0; c < n; ++c) eq[k * n + c] += bij[c];
                for (std::size_t r = 0; r < n; ++r) {
                    // [D e_i, e_j]_k = sum_r D_{r i} c[r][j][k]
                    eq[r * n + i] -= a.structure.at(r, j, k);
                    eq[r * n + j] -= a.structure.at(i, r, k);
                }
                eqs.push_back(std::move(eq));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // (D^T G + G D)_{ij} = sum_r D_{r i} G_{r j} + G_{i r} D_{r j}
            Vector eq(unknowns, Scalar(0));
            for (std::size_t r = 0; r < n; ++r) {
                eq[r * n + i] += a.metric(r, j);
                eq[r * n + j] += a.metric(i, r);
            }
            eqs.push_back(std::move(eq));
        }
    }
    Matrix system(eqs.size(), unknowns);
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = eqs[r][c];
    OperatorSpan out(n);
    for (const Vector& v : kernel_basis(system)) {
        Matrix d(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d(i, j) = v[i * n + j];
        out.add(d);
    }
    return out;
}

}  // namespace liespin
