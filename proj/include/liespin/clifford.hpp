#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "liespin/linalg.hpp"
#include "liespin/matrix.hpp"

namespace liespin {

namespace cliff {

inline Matrix u_factor() {
    Matrix m(2, 2);
    m(0, 0) = Scalar::i();
    m(1, 1) = -Scalar::i();
    return m;
}
inline Matrix v_factor() {
    Matrix m(2, 2);
    m(0, 1) = Scalar::i();
    m(1, 0) = Scalar::i();
    return m;
}
inline Matrix t_factor() {
    Matrix m(2, 2);
    m(0, 1) = -Scalar::i();
    m(1, 0) = Scalar::i();
    return m;
}

/// Tensor chain with `factor` at 1-based position `pos` (counted from the
/// right), T below, E above: E x ... x E x factor x T x ... x T.
inline Matrix tensor_slot(std::size_t m, std::size_t pos, const Matrix& factor) {
    Matrix out = Matrix::identity(1);
    for (std::size_t level = m; level >= 1; --level) {
        if (level > pos) out = Matrix::kron(out, Matrix::identity(2));
        else if (level == pos) out = Matrix::kron(out, factor);
        else out = Matrix::kron(out, t_factor());
        if (level == 1) break;
    }
    return out;
}

}  // namespace cliff

/**
 * Explicit Clifford generators for an orthonormal basis with the given sign
 * list kappa (kappa_j = <e_j, e_j>), built by the tensor-product recipe:
 * gamma_{2j-1} = tau U at slot j, gamma_{2j} = tau V at slot j, with a factor
 * i (tau) whenever kappa = -1; in odd dimension the last generator is the
 * first component tau * (i T x ... x T).
 */
struct CliffordRep {
    std::vector<int> kappa;      // signs in generator order
    std::vector<Matrix> gamma;   // 2^m x 2^m matrices
    std::size_t m = 0;           // tensor factors

    std::size_t dimension() const { return kappa.size(); }
    std::size_t spinor_dim() const { return std::size_t(1) << m; }
    std::size_t neg_count() const {
        std::size_t p = 0;
        for (int k : kappa) p += (k < 0);
        return p;
    }
};

inline CliffordRep clifford_from_signs(const std::vector<int>& kappa) {
    for (int k : kappa) {
        if (k != 1 && k != -1) throw std::invalid_argument("clifford_from_signs: signs must be +-1");
    }
    CliffordRep rep;
    rep.kappa = kappa;
    const std::size_t n = kappa.size();
    rep.m = n / 2;
    const auto tau = [&](std::size_t j) { return kappa[j] == -1 ? Scalar::i() : Scalar(1); };
    for (std::size_t j = 0; j < n; ++j) {
        if (j + 1 == n && n % 2 == 1) {
            // first component of the odd-dimensional isomorphism
            Matrix chain = Matrix::identity(1);
            for (std::size_t k = 0; k < rep.m; ++k) chain = Matrix::kron(chain, cliff::t_factor());
            rep.gamma.push_back(chain * (tau(j) * Scalar::i()));
        } else {
            const std::size_t pos = j / 2 + 1;
            const Matrix& factor = (j % 2 == 0) ? cliff::u_factor() : cliff::v_factor();
            rep.gamma.push_back(cliff::tensor_slot(rep.m, pos, factor) * tau(j));
        }
    }
    return rep;
}

/// Signature (neg, pos) with all negative signs first.
inline CliffordRep clifford_generators(std::size_t neg, std::size_t pos) {
    std::vector<int> kappa(neg, -1);
    kappa.insert(kappa.end(), pos, 1);
    return clifford_from_signs(kappa);
}

/// gamma_i gamma_j + gamma_j gamma_i = -2 kappa_i delta_ij.
inline bool clifford_relations_hold(const CliffordRep& rep) {
    const std::size_t n = rep.dimension();
    const Matrix id = Matrix::identity(rep.spinor_dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Matrix anti = rep.gamma[i] * rep.gamma[j] + rep.gamma[j] * rep.gamma[i];
            const Matrix expect = (i == j) ? id * Scalar(-2 * rep.kappa[i]) : Matrix(id.rows(), id.cols());
            if (anti != expect) return false;
        }
    }
    return true;
}

/// Clifford matrix of a vector given by orthonormal-frame coordinates.
inline Matrix clifford_vector(const CliffordRep& rep, const Vector& coords) {
    if (coords.size() != rep.dimension())
        throw std::invalid_argument("clifford_vector: coordinate length mismatch");
    Matrix out(rep.spinor_dim(), rep.spinor_dim());
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) out = out + rep.gamma[k] * coords[k];
    }
    return out;
}

/// The spin lift (1/4) sum_i kappa_i gamma(e_i) gamma(A e_i) of an
/// antisymmetric operator; satisfies [lift(A), gamma(v)] = gamma(A v).
inline Matrix spin_lift(const CliffordRep& rep, const Matrix& a) {
    const std::size_t n = rep.dimension();
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("spin_lift: operator shape does not match the representation");
    Matrix k_diag(n, n);
    for (std::size_t i = 0; i < n; ++i) k_diag(i, i) = Scalar(rep.kappa[i]);
    if (!(a.transpose() * k_diag + k_diag * a).is_zero()) {
        throw std::invalid_argument("spin_lift: operator is not antisymmetric for diag(kappa)");
    }
    Matrix out(rep.spinor_dim(), rep.spinor_dim());
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix image = clifford_vector(rep, a.column(i));
        out = out + rep.gamma[i] * image * Scalar(rep.kappa[i]);
    }
    return out * Scalar(Rational(1, 4));
}

/// Joint kernel dimension of the spin lifts of a family of antisymmetric operators.
inline std::size_t annihilator_dim(const CliffordRep& rep, const std::vector<Matrix>& ops) {
    const std::size_t dim = rep.spinor_dim();
    if (ops.empty()) return dim;
    Matrix stacked(dim * ops.size(), dim);
    for (std::size_t k = 0; k < ops.size(); ++k) stacked.set_block(k * dim, 0, spin_lift(rep, ops[k]));
    return dim - rank(stacked);
}

/// Joint kernel dimension of already-lifted spinor operators.
inline std::size_t joint_kernel_dim(std::size_t spinor_dim, const std::vector<Matrix>& lifted) {
    if (lifted.empty()) return spinor_dim;
    Matrix stacked(spinor_dim * lifted.size(), spinor_dim);
    for (std::size_t k = 0; k < lifted.size(); ++k) stacked.set_block(k * spinor_dim, 0, lifted[k]);
    return spinor_dim - rank(stacked);
}

/// Index of the basis spinor u(eps_m, ..., eps_1): lexicographic in
/// (eps_m, ..., eps_1) with +1 < -1, so eps_j occupies bit j-1. The argument
/// stores eps_j at position j-1.
inline std::size_t spinor_index(const std::vector<int>& eps) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        if (eps[j] == -1) idx |= (std::size_t(1) << j);
    }
    return idx;
}

inline std::vector<int> spinor_signs(std::size_t index, std::size_t m) {
    std::vector<int> eps(m);
    for (std::size_t j = 0; j < m; ++j) eps[j] = (index >> j) & 1 ? -1 : 1;
    return eps;
}

/// Columns are the tensor spinors u(eps_m, ..., eps_1) in standard coordinates,
/// with u(eps) = (1, -eps i)/sqrt2 and the lexicographic enumeration above.
inline Matrix spinor_u_basis(std::size_t m) {
    Matrix u2(2, 2);
    u2(0, 0) = Scalar::inv_sqrt2();
    u2(0, 1) = Scalar::inv_sqrt2();
    u2(1, 0) = -Scalar::i() * Scalar::inv_sqrt2();
    u2(1, 1) = Scalar::i() * Scalar::inv_sqrt2();
    Matrix out = Matrix::identity(1);
    for (std::size_t k = 0; k < m; ++k) out = Matrix::kron(out, u2);
    return out;
}

}  // namespace liespin
