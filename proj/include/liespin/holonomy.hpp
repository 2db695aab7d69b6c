#pragma once

#include <stdexcept>
#include <vector>

#include "liespin/extensions.hpp"

namespace liespin {

struct HolonomyResult {
    OperatorSpan span;
    bool abelian = false;
    std::size_t dimension = 0;
};

/// hol = ad([a, a]), the span of ad(z) over a basis of the derived subalgebra.
/// The span is already closed under the commutator ([a,a] is an ideal) and
/// consists of metric-antisymmetric operators; both facts are asserted.
template <LieAlgebraLike A>
inline HolonomyResult holonomy_algebra(const A& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> gens;
    for (const Vector& z : derived_subalgebra(a)) gens.push_back(ad_operator(a, z));
    HolonomyResult out{OperatorSpan::span_of(n, gens), false, 0};
    for (const Matrix& op : out.span.basis()) {
        if (!(op.transpose() * a.metric + a.metric * op).is_zero()) {
            throw std::logic_error("holonomy_algebra: operator is not metric-antisymmetric");
        }
    }
    if (bracket_closure(out.span) != out.span) {
        throw std::logic_error("holonomy_algebra: span is not closed under the commutator");
    }
    out.dimension = out.span.dim();
    out.abelian = out.span.is_abelian();
    return out;
}

/**
 * The holonomy generators of a double extension, instantiated over basis
 * choices: ad of [X_i, X_j] (with its cocycle part), ad of [H_a, H_b], ad of
 * the coadjoint orbit elements [H_a, alpha_b], and ad of pi(H_a) X_k. Must
 * span exactly ad([d, d]).
 */
inline OperatorSpan extension_holonomy_generators(const ExtensionData& e) {
    const MetricLieAlgebra d = double_extend(e);
    const std::size_t r = e.h.dim();
    const std::size_t n = e.g.dim();
    const std::size_t total = 2 * r + n;
    const auto idx_alpha = [r](std::size_t j) { return r - 1 - j; };  // 0-based j
    const auto idx_x = [r](std::size_t k) { return r + k; };
    const auto idx_h = [r, n](std::size_t a) { return r + n + a; };

    OperatorSpan span(total);
    // Y = [Y_1, Y_2]_g over basis pairs; the bracket in d carries the beta term.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            span.add(ad_operator(d, d.structure.bracket_basis(idx_x(i), idx_x(j))));
    // H over [h, h].
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            span.add(ad_operator(d, d.structure.bracket_basis(idx_h(a), idx_h(b))));
    // alpha over ad*(h) h*.
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            span.add(ad_operator(d, d.structure.bracket_basis(idx_h(a), idx_alpha(b))));
    // X over pi(h) g.
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t k = 0; k < n; ++k)
            span.add(ad_operator(d, d.structure.bracket_basis(idx_h(a), idx_x(k))));
    return span;
}

/// True iff every holonomy basis operator maps the subspace into itself.
inline bool invariant_subspace_check(const HolonomyResult& hr,
                                     const std::vector<Vector>& subspace_basis) {
    if (subspace_basis.empty()) return true;
    RowSpan s(subspace_basis.front().size());
    for (const Vector& v : subspace_basis) s.add(v);
    for (const Matrix& op : hr.span.basis()) {
        for (const Vector& v : subspace_basis) {
            if (!s.contains(op.apply(v))) return false;
        }
    }
    return true;
}

}  // namespace liespin
