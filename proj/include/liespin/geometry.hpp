#pragma once

#include <optional>

#include "liespin/extensions.hpp"

namespace liespin {

/// R(x,y)z = -(1/4) [[x,y],z].
template <LieAlgebraLike A>
inline Vector curvature(const A& a, const Vector& x, const Vector& y, const Vector& z) {
    return vector_scale(Scalar(Rational(-1, 4)), a.bracket(a.bracket(x, y), z));
}

/// Ric = -(1/4) B, computed basis-free from the Killing form.
template <LieAlgebraLike A>
inline Matrix ricci(const A& a) {
    return killing_form(a) * Scalar(Rational(-1, 4));
}

/// Curvature-trace Ricci, Ric(x,y) = sum_j eps_j <R(f_j,x)y, f_j> over an exact
/// orthonormal frame. Exists only when the metric admits one over Q(sqrt2);
/// used as an independent cross-check of the Killing route.
template <LieAlgebraLike A>
inline std::optional<Matrix> ricci_from_curvature_trace(const A& a) {
    const std::size_t n = a.dim();
    OrthonormalFrame frame;
    try {
        frame = exact_orthonormal_frame(a.metric);
    } catch (const UnsupportedMetricError&) {
        return std::nullopt;
    }
    Matrix ric(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            Scalar sum(0);
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar eps = j < frame.neg ? Scalar(-1) : Scalar(1);
                const Vector fj = frame.frame.column(j);
                sum += eps * form_value(a.metric,
                                        curvature(a, fj, unit_vector(n, x), unit_vector(n, y)), fj);
            }
            ric(x, y) = sum;
            ric(y, x) = sum;
        }
    }
    return ric;
}

/// Metric trace of the Ricci form.
template <LieAlgebraLike A>
inline Scalar scalar_curvature(const A& a) {
    return (inverse(a.metric) * ricci(a)).trace();
}

struct GeometryFlags {
    bool flat = false;
    bool ricci_flat = false;
    bool ricci_2step_nilpotent = false;
    bool einstein = false;
    std::optional<Scalar> einstein_constant;
};

struct CurvatureReport {
    Matrix ricci;
    Scalar scalar;
    GeometryFlags flags;
};

template <LieAlgebraLike A>
inline bool is_flat(const A& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector bij = a.structure.bracket_basis(i, j);
            if (vector_is_zero(bij)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!vector_is_zero(a.bracket(bij, unit_vector(n, k)))) return false;
        }
    return true;
}

template <LieAlgebraLike A>
inline CurvatureReport classify(const A& a) {
    CurvatureReport report{ricci(a), scalar_curvature(a), {}};
    report.flags.flat = is_flat(a);
    report.flags.ricci_flat = report.ricci.is_zero();
    const Matrix ric_endo = inverse(a.metric) * report.ricci;
    report.flags.ricci_2step_nilpotent = (ric_endo * ric_endo).is_zero();
    // Einstein: Ric = kappa * g, solved exactly.
    if (report.flags.ricci_flat) {
        report.flags.einstein = true;
        report.flags.einstein_constant = Scalar(0);
    } else {
        const std::size_t n = a.dim();
        std::optional<Scalar> kappa;
        for (std::size_t i = 0; i < n && !kappa; ++i)
            for (std::size_t j = 0; j < n && !kappa; ++j)
                if (!a.metric(i, j).is_zero()) kappa = report.ricci(i, j) / a.metric(i, j);
        if (kappa && report.ricci == a.metric * *kappa) {
            report.flags.einstein = true;
            report.flags.einstein_constant = kappa;
        }
    }
    return report;
}

/// The four structural blocks of the Killing form of a double extension,
/// evaluated once from the block formulas and once from the assembled algebra.
struct ExtensionKillingBlocks {
    Matrix formula_gg;      // B_g
    Matrix formula_hh;      // tr_g(pi . pi) + 2 B_h
    Matrix formula_gh;      // tr_g(ad_g(X_k) . pi(H_a))
    Matrix killing_gg;
    Matrix killing_hh;
    Matrix killing_gh;
    Matrix killing_hstar_rows;  // rows of B_d indexed by h*, expected zero
    Matrix ricci_hh;            // -(1/4) of the Killing h x h block

    bool consistent() const {
        return formula_gg == killing_gg && formula_hh == killing_hh && formula_gh == killing_gh &&
               killing_hstar_rows.is_zero();
    }
};

inline ExtensionKillingBlocks extension_killing_blocks(const ExtensionData& e) {
    const std::size_t r = e.h.dim();
    const std::size_t n = e.g.dim();
    ExtensionKillingBlocks out;
    out.formula_gg = killing_form(e.g);
    const Matrix bh = killing_form(e.h);
    out.formula_hh = Matrix(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            out.formula_hh(a, b) = (e.pi[a] * e.pi[b]).trace() + 2 * bh(a, b);
    out.formula_gh = Matrix(n, r);
    const std::vector<Matrix> ads = ad_basis(e.g);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < r; ++a) out.formula_gh(k, a) = (ads[k] * e.pi[a]).trace();

    const MetricLieAlgebra d = double_extend(e);
    const Matrix bd = killing_form(d);
    out.killing_gg = bd.block(r, r, n, n);
    out.killing_hh = bd.block(r + n, r + n, r, r);
    out.killing_gh = bd.block(r, r + n, n, r);
    out.killing_hstar_rows = bd.block(0, 0, r, 2 * r + n);
    out.ricci_hh = out.killing_hh * Scalar(Rational(-1, 4));
    return out;
}

}  // namespace liespin
