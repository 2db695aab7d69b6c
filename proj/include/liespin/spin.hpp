#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "liespin/clifford.hpp"
#include "liespin/geometry.hpp"
#include "liespin/holonomy.hpp"

namespace liespin {

/**
 * Spin machinery for an algebra whose stored basis has the adapted metric
 * shape (alpha_r, ..., alpha_1 | middle | H_1, ..., H_r): alpha_j pairs with
 * H_j, <H_i, H_j> = c_j delta_ij, and the middle block admits an exact
 * orthonormal frame. Clifford generator slots 2j-1, 2j hold the pair
 *   e_{2j-1} = (H_j - (c_j/2 + 1) alpha_j)/sqrt2,
 *   e_{2j}   = (H_j - (c_j/2 - 1) alpha_j)/sqrt2,
 * and the middle frame occupies the remaining slots, so the spinor module
 * factors with the pair indices eps_1..eps_r on the low tensor positions.
 */
class SpinSetup {
public:
    SpinSetup(const MetricLieAlgebra& d, std::size_t r) : r_(r), metric_(d.metric) {
        const std::size_t total = d.dim();
        if (total < 2 * r) throw std::invalid_argument("SpinSetup: dimension too small for r pairs");
        n_ = total - 2 * r;
        const Matrix& g = d.metric;
        c_.resize(r_);
        for (std::size_t a = 1; a <= r_; ++a) c_[a - 1] = g(idx_h(a), idx_h(a));
        for (std::size_t a = 1; a <= r_; ++a) {
            for (std::size_t b = 1; b <= r_; ++b) {
                const Scalar want = a == b ? Scalar(1) : Scalar(0);
                if (g(idx_alpha(a), idx_h(b)) != want || !g(idx_alpha(a), idx_alpha(b)).is_zero() ||
                    (a != b && !g(idx_h(a), idx_h(b)).is_zero())) {
                    throw std::invalid_argument("SpinSetup: metric lacks the adapted pair structure");
                }
            }
            for (std::size_t k = 0; k < n_; ++k) {
                if (!g(idx_alpha(a), idx_mid(k)).is_zero() || !g(idx_h(a), idx_mid(k)).is_zero()) {
                    throw std::invalid_argument("SpinSetup: pairs are not orthogonal to the middle block");
                }
            }
        }
        const OrthonormalFrame f = exact_orthonormal_frame(g.block(r_, r_, n_, n_));
        middle_frame_ = f.frame;
        middle_frame_inv_ = n_ ? inverse(f.frame) : Matrix(0, 0);
        middle_neg_ = f.neg;

        std::vector<int> kappa;
        for (std::size_t j = 0; j < r_; ++j) {
            kappa.push_back(-1);
            kappa.push_back(1);
        }
        std::vector<int> kappa_mid;
        for (std::size_t k = 0; k < n_; ++k) kappa_mid.push_back(k < f.neg ? -1 : 1);
        kappa.insert(kappa.end(), kappa_mid.begin(), kappa_mid.end());
        rep_ = clifford_from_signs(kappa);
        middle_rep_ = clifford_from_signs(kappa_mid);

        gamma_alpha_.reserve(r_);
        gamma_h_.reserve(r_);
        for (std::size_t j = 1; j <= r_; ++j) {
            const Matrix& odd = rep_.gamma[2 * j - 2];
            const Matrix& even = rep_.gamma[2 * j - 1];
            Matrix ga = (even - odd) * Scalar::inv_sqrt2();
            Matrix gh = (odd + even) * Scalar::inv_sqrt2() + ga * (c_[j - 1] * Scalar::half());
            gamma_alpha_.push_back(std::move(ga));
            gamma_h_.push_back(std::move(gh));
        }
    }

    std::size_t pairs() const { return r_; }
    std::size_t middle_dim() const { return n_; }
    std::size_t total_dim() const { return 2 * r_ + n_; }
    std::size_t spinor_dim() const { return rep_.spinor_dim(); }
    const CliffordRep& rep() const { return rep_; }
    const CliffordRep& middle_rep() const { return middle_rep_; }
    const std::vector<Scalar>& pair_values() const { return c_; }
    const Matrix& middle_frame() const { return middle_frame_; }
    std::size_t middle_neg() const { return middle_neg_; }
    int middle_kappa(std::size_t k) const { return k < middle_neg_ ? -1 : 1; }

    std::size_t idx_alpha(std::size_t j) const { return r_ - j; }          // 1-based j
    std::size_t idx_mid(std::size_t k) const { return r_ + k; }            // 0-based k
    std::size_t idx_h(std::size_t j) const { return r_ + n_ + j - 1; }     // 1-based j

    const Matrix& gamma_alpha(std::size_t j) const { return gamma_alpha_[j - 1]; }
    const Matrix& gamma_H(std::size_t j) const { return gamma_h_[j - 1]; }
    /// Clifford matrix of the k-th middle frame vector (0-based).
    const Matrix& gamma_middle(std::size_t k) const { return rep_.gamma[2 * r_ + k]; }

    /// Clifford matrix of a middle vector given in middle coordinates.
    Matrix gamma_of_middle(const Vector& x) const {
        const Vector coords = middle_frame_inv_.apply(x);
        Matrix out(spinor_dim(), spinor_dim());
        for (std::size_t k = 0; k < n_; ++k) {
            if (!coords[k].is_zero()) out = out + gamma_middle(k) * coords[k];
        }
        return out;
    }

    /// Clifford matrix of an arbitrary vector in stored coordinates.
    Matrix gamma_of(const Vector& v) const {
        if (v.size() != total_dim()) throw std::invalid_argument("SpinSetup::gamma_of: bad length");
        Vector mid(n_);
        for (std::size_t k = 0; k < n_; ++k) mid[k] = v[idx_mid(k)];
        Matrix out = gamma_of_middle(mid);
        for (std::size_t j = 1; j <= r_; ++j) {
            const Scalar& a = v[idx_alpha(j)];
            const Scalar& h = v[idx_h(j)];
            if (!a.is_zero()) out = out + gamma_alpha_[j - 1] * a;
            if (!h.is_zero()) out = out + gamma_h_[j - 1] * h;
        }
        return out;
    }

    /// Stored-coordinate vector of the k-th middle frame vector.
    Vector middle_frame_stored(std::size_t k) const {
        Vector v(total_dim(), Scalar(0));
        for (std::size_t i = 0; i < n_; ++i) v[idx_mid(i)] = middle_frame_(i, k);
        return v;
    }

    /**
     * The adapted lift
     *   (1/4) sum_j (H_j A(alpha_j) + alpha_j A(H_j) - c_j alpha_j A(alpha_j))
     *   + (1/4) sum_k kappa_k X_k A(X_k)
     * of a metric-antisymmetric operator in stored coordinates; all products
     * are Clifford products.
     */
    Matrix adapted_lift(const Matrix& a) const {
        const std::size_t total = total_dim();
        if (a.rows() != total || a.cols() != total)
            throw std::invalid_argument("SpinSetup::adapted_lift: operator shape mismatch");
        if (!(a.transpose() * metric_ + metric_ * a).is_zero())
            throw std::invalid_argument(
                "SpinSetup::adapted_lift: operator is not metric-antisymmetric");
        Matrix out(spinor_dim(), spinor_dim());
        for (std::size_t j = 1; j <= r_; ++j) {
            const Matrix ga_img = gamma_of(a.column(idx_alpha(j)));
            const Matrix gh_img = gamma_of(a.column(idx_h(j)));
            out = out + gamma_h_[j - 1] * ga_img + gamma_alpha_[j - 1] * gh_img -
                  gamma_alpha_[j - 1] * ga_img * c_[j - 1];
        }
        for (std::size_t k = 0; k < n_; ++k) {
            const Matrix img = gamma_of(a.apply(middle_frame_stored(k)));
            out = out + gamma_middle(k) * img * Scalar(middle_kappa(k));
        }
        return out * Scalar(Rational(1, 4));
    }

    /// Change of basis between stored coordinates and the Clifford slot frame.
    Matrix slot_frame() const {
        const std::size_t total = total_dim();
        Matrix f(total, total);
        for (std::size_t j = 1; j <= r_; ++j) {
            // e_{2j-1} and e_{2j} in stored coordinates
            Vector odd(total, Scalar(0)), even(total, Scalar(0));
            odd[idx_h(j)] = Scalar::inv_sqrt2();
            odd[idx_alpha(j)] = -(c_[j - 1] * Scalar::half() + Scalar(1)) * Scalar::inv_sqrt2();
            even[idx_h(j)] = Scalar::inv_sqrt2();
            even[idx_alpha(j)] = -(c_[j - 1] * Scalar::half() - Scalar(1)) * Scalar::inv_sqrt2();
            f.set_column(2 * j - 2, odd);
            f.set_column(2 * j - 1, even);
        }
        for (std::size_t k = 0; k < n_; ++k) f.set_column(2 * r_ + k, middle_frame_stored(k));
        return f;
    }

private:
    std::size_t r_ = 0, n_ = 0;
    Matrix metric_;
    std::vector<Scalar> c_;
    Matrix middle_frame_, middle_frame_inv_;
    std::size_t middle_neg_ = 0;
    CliffordRep rep_, middle_rep_;
    std::vector<Matrix> gamma_alpha_, gamma_h_;
};

/// Mixed spinor basis: standard coordinates on the middle factor, the u(eps)
/// tensor basis on the pair factor.
inline Matrix mixed_spinor_basis(const SpinSetup& setup) {
    return Matrix::kron(Matrix::identity(setup.middle_rep().spinor_dim()),
                        spinor_u_basis(setup.pairs()));
}

/// Closed-form action of alpha_j on basis spinors u (x) u(eps_r..eps_1), as a
/// matrix in the mixed basis.
inline Matrix closed_form_alpha(const SpinSetup& setup, std::size_t j) {
    const std::size_t r = setup.pairs();
    const std::size_t eps_dim = std::size_t(1) << r;
    Matrix on_eps(eps_dim, eps_dim);
    for (std::size_t idx = 0; idx < eps_dim; ++idx) {
        const std::vector<int> eps = spinor_signs(idx, r);
        if (eps[j - 1] == -1) continue;  // factor (eps_j + 1) kills eps_j = -1
        Scalar coeff = Scalar::inv_sqrt2() * Scalar(eps[j - 1] + 1);
        for (std::size_t i = 0; i + 1 < j; ++i) coeff = coeff * Scalar(eps[i]);
        if (j % 2 == 0) coeff = -coeff;  // (-1)^{j-1}
        std::vector<int> flipped = eps;
        flipped[j - 1] = -flipped[j - 1];
        on_eps(spinor_index(flipped), idx) = coeff;
    }
    return Matrix::kron(Matrix::identity(setup.middle_rep().spinor_dim()), on_eps);
}

inline Matrix closed_form_H(const SpinSetup& setup, std::size_t j) {
    const std::size_t r = setup.pairs();
    const std::size_t eps_dim = std::size_t(1) << r;
    const Scalar& cj = setup.pair_values()[j - 1];
    Matrix on_eps(eps_dim, eps_dim);
    for (std::size_t idx = 0; idx < eps_dim; ++idx) {
        const std::vector<int> eps = spinor_signs(idx, r);
        Scalar coeff = Scalar::inv_sqrt2() *
                       (Scalar(eps[j - 1] - 1) + cj * Scalar::half() * Scalar(eps[j - 1] + 1));
        if (coeff.is_zero()) continue;
        for (std::size_t i = 0; i + 1 < j; ++i) coeff = coeff * Scalar(eps[i]);
        if (j % 2 == 0) coeff = -coeff;
        std::vector<int> flipped = eps;
        flipped[j - 1] = -flipped[j - 1];
        on_eps(spinor_index(flipped), idx) = coeff;
    }
    return Matrix::kron(Matrix::identity(setup.middle_rep().spinor_dim()), on_eps);
}

/// Closed-form action of a middle vector (middle coordinates): the middle
/// Clifford action tensored with the diagonal sign (-1)^r eps_1...eps_r.
inline Matrix closed_form_middle(const SpinSetup& setup, const Vector& x_middle) {
    const std::size_t r = setup.pairs();
    const std::size_t eps_dim = std::size_t(1) << r;
    Matrix d(eps_dim, eps_dim);
    for (std::size_t idx = 0; idx < eps_dim; ++idx) {
        const std::vector<int> eps = spinor_signs(idx, r);
        int sign = 1;
        for (int e : eps) sign *= -e;
        d(idx, idx) = Scalar(sign);
    }
    Matrix inner(setup.middle_rep().spinor_dim(), setup.middle_rep().spinor_dim());
    const Vector coords =
        setup.middle_dim() ? inverse(setup.middle_frame()).apply(x_middle) : Vector{};
    for (std::size_t k = 0; k < setup.middle_dim(); ++k) {
        if (!coords[k].is_zero()) inner = inner + setup.middle_rep().gamma[k] * coords[k];
    }
    return Matrix::kron(inner, d);
}

/// Rewrites the h-basis so the invariant form is diagonal; g is untouched.
inline ExtensionData adapt_extension(const ExtensionData& e) {
    const std::size_t r = e.h.dim();
    const CongruenceDiagonalization d = congruence_diagonalize(e.h.metric);
    if (d.basis_change == Matrix::identity(r)) return e;
    ExtensionData out;
    out.g = e.g;
    const Matrix& p = d.basis_change;
    const Matrix p_inv = inverse(p);
    out.h.labels = e.h.labels;
    out.h.metric = p.transpose() * e.h.metric * p;
    out.h.structure = StructureConstants(r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            const Vector w = e.h.structure.bracket(p.column(a), p.column(b));
            out.h.structure.set_bracket(a, b, p_inv.apply(w));
        }
    }
    out.pi.reserve(r);
    for (std::size_t a = 0; a < r; ++a) {
        Matrix pa(e.g.dim(), e.g.dim());
        for (std::size_t b = 0; b < r; ++b) {
            if (!p(b, a).is_zero()) pa = pa + e.pi[b] * p(b, a);
        }
        out.pi.push_back(std::move(pa));
    }
    return out;
}

/// The spin-holonomy generators of a double extension, realized as Clifford
/// matrices via the adapted basis.
struct SpinHolonomy {
    ExtensionData adapted;
    MetricLieAlgebra algebra;
    SpinSetup setup;
    std::vector<Matrix> generators;
};

inline SpinHolonomy spin_holonomy(const ExtensionData& e_raw) {
    ExtensionData e = adapt_extension(e_raw);
    MetricLieAlgebra d = double_extend(e);
    const std::size_t r = e.h.dim();
    SpinSetup setup(d, r);
    const std::size_t n = e.g.dim();

    // h-side ingredient vectors
    const std::vector<Vector> hh_basis = derived_subalgebra(e.h);
    std::vector<Vector> coad_gens;  // functionals alpha with components alpha(H_c)
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            Vector f(r, Scalar(0));
            for (std::size_t cidx = 0; cidx < r; ++cidx)
                f[cidx] = -e.h.structure.at(a, cidx, b);  // (ad* H_a alpha_b)(H_c)
            coad_gens.push_back(std::move(f));
        }
    }
    const std::vector<Vector> coad_basis = echelon_basis(r, coad_gens);
    std::vector<Vector> pi_g_gens;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t k = 0; k < n; ++k) pi_g_gens.push_back(e.pi[a].column(k));
    const std::vector<Vector> pi_g_basis = echelon_basis(n, pi_g_gens);

    const auto pi_of = [&](std::size_t a, const Vector& x) { return e.pi[a].apply(x); };
    const auto gamma_g = [&](const Vector& x) { return setup.gamma_of_middle(x); };
    const std::size_t dim_s = setup.spinor_dim();

    // sum_k kappa_k X_k . [y, X_k]_g over the middle frame
    const auto frame_bracket_sum = [&](const Vector& y) {
        Matrix out(dim_s, dim_s);
        for (std::size_t k = 0; k < n; ++k) {
            Vector fk(n);
            for (std::size_t i = 0; i < n; ++i) fk[i] = setup.middle_frame()(i, k);
            const Vector br = e.g.structure.bracket(y, fk);
            if (!vector_is_zero(br))
                out = out + setup.gamma_middle(k) * gamma_g(br) * Scalar(setup.middle_kappa(k));
        }
        return out;
    };

    std::vector<Matrix> gens;
    // Family 1: Y = [Y_1, Y_2]_g over basis pairs.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j2 = i + 1; j2 < n; ++j2) {
            const Vector y1 = unit_vector(n, i), y2 = unit_vector(n, j2);
            const Vector y = e.g.structure.bracket_basis(i, j2);
            Matrix gen(dim_s, dim_s);
            for (std::size_t a = 1; a <= r; ++a) {
                for (std::size_t b = 1; b <= r; ++b) {
                    const Vector hab = e.h.structure.bracket_basis(a - 1, b - 1);
                    Matrix pi_hab(n, n);
                    for (std::size_t cidx = 0; cidx < r; ++cidx)
                        if (!hab[cidx].is_zero()) pi_hab = pi_hab + e.pi[cidx] * hab[cidx];
                    const Scalar coeff = form_value(e.g.metric, pi_hab.apply(y1), y2);
                    if (!coeff.is_zero())
                        gen = gen + setup.gamma_alpha(a) * setup.gamma_alpha(b) * coeff;
                }
            }
            for (std::size_t a = 1; a <= r; ++a) {
                const Vector v = pi_of(a - 1, y);
                if (!vector_is_zero(v)) gen = gen + gamma_g(v) * setup.gamma_alpha(a) * Scalar(2);
            }
            gen = gen + frame_bracket_sum(y);
            gens.push_back(std::move(gen));
        }
    }
    // Family 2: H over a basis of [h, h]_h.
    for (const Vector& h : hh_basis) {
        Matrix gen(dim_s, dim_s);
        for (std::size_t j2 = 1; j2 <= r; ++j2) {
            const Vector w = e.h.structure.bracket(h, unit_vector(r, j2 - 1));  // [H, H_j]_h
            Matrix gw(dim_s, dim_s);
            for (std::size_t cidx = 1; cidx <= r; ++cidx)
                if (!w[cidx - 1].is_zero()) gw = gw + setup.gamma_H(cidx) * w[cidx - 1];
            gen = gen + gw * setup.gamma_alpha(j2) * Scalar(2);
            gen = gen + Matrix::identity(dim_s) * (Scalar(2) * w[j2 - 1]);
            for (std::size_t i = 1; i <= r; ++i) {
                const Scalar coeff = setup.pair_values()[i - 1] * w[i - 1];
                if (!coeff.is_zero())
                    gen = gen + setup.gamma_alpha(i) * setup.gamma_alpha(j2) * coeff;
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            Vector fk(n);
            for (std::size_t i = 0; i < n; ++i) fk[i] = setup.middle_frame()(i, k);
            Matrix pi_h(n, n);
            for (std::size_t cidx = 0; cidx < r; ++cidx)
                if (!h[cidx].is_zero()) pi_h = pi_h + e.pi[cidx] * h[cidx];
            const Vector v = pi_h.apply(fk);
            if (!vector_is_zero(v))
                gen = gen - setup.gamma_middle(k) * gamma_g(v) * Scalar(setup.middle_kappa(k));
        }
        gens.push_back(std::move(gen));
    }
    // Family 3: alpha over a basis of ad*(h) h*.
    for (const Vector& alpha : coad_basis) {
        Matrix gen(dim_s, dim_s);
        for (std::size_t a = 1; a <= r; ++a) {
            for (std::size_t b = 1; b <= r; ++b) {
                const Vector hab = e.h.structure.bracket_basis(a - 1, b - 1);
                Scalar coeff(0);
                for (std::size_t cidx = 0; cidx < r; ++cidx) coeff += alpha[cidx] * hab[cidx];
                if (!coeff.is_zero()) gen = gen + setup.gamma_alpha(a) * setup.gamma_alpha(b) * coeff;
            }
        }
        gens.push_back(std::move(gen));
    }
    // Family 4: X over a basis of pi(h) g.
    for (const Vector& x : pi_g_basis) {
        Matrix gen(dim_s, dim_s);
        for (std::size_t a = 1; a <= r; ++a) {
            const Vector v = pi_of(a - 1, x);
            if (!vector_is_zero(v)) gen = gen + gamma_g(v) * setup.gamma_alpha(a) * Scalar(2);
        }
        gen = gen + frame_bracket_sum(x);
        gens.push_back(std::move(gen));
    }

    return SpinHolonomy{std::move(e), std::move(d), std::move(setup), std::move(gens)};
}

/// Closed-form spin holonomy of a tower: sum_k (U_{k-1} X) . alpha_k over the base.
inline std::vector<Matrix> tower_spin_generators(const NormalDerivationSet& s,
                                                 const SpinSetup& setup) {
    std::vector<Matrix> out;
    for (std::size_t x = 0; x < s.n; ++x) {
        Matrix gen(setup.spinor_dim(), setup.spinor_dim());
        for (std::size_t k = 1; k <= s.m; ++k) {
            const Vector ux = s.U[k - 1].column(x);
            if (!vector_is_zero(ux))
                gen = gen + setup.gamma_of_middle(ux) * setup.gamma_alpha(k);
        }
        out.push_back(std::move(gen));
    }
    return out;
}

/**
 * Exact dimension of the space of parallel spinors: the joint kernel of the
 * lifted holonomy algebra on the spinor module. Requires an exact orthonormal
 * frame of the metric over Q(sqrt2).
 */
inline std::size_t parallel_spinor_dim(const MetricLieAlgebra& a) {
    const HolonomyResult hol = holonomy_algebra(a);
    const OrthonormalFrame frame = exact_orthonormal_frame(a.metric);
    const CliffordRep rep = clifford_generators(frame.neg, frame.pos);
    const Matrix frame_inv = a.dim() ? inverse(frame.frame) : Matrix(0, 0);
    std::vector<Matrix> lifted;
    for (const Matrix& op : hol.span.basis()) {
        lifted.push_back(spin_lift(rep, frame_inv * op * frame.frame));
    }
    return joint_kernel_dim(rep.spinor_dim(), lifted);
}

struct SpinorBoundResult {
    std::size_t lower_bound = 0;
    std::size_t exact = 0;
};

template <LieAlgebraLike A>
inline bool is_abelian(const A& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!vector_is_zero(a.structure.bracket_basis(i, j))) return false;
    return true;
}

template <LieAlgebraLike A>
inline bool is_semisimple(const A& a) {
    return a.dim() > 0 && rank(killing_form(a)) == a.dim();
}

/**
 * The lower bound dim(V_b intersect V_hol(G)) with b = ad_g(pi(h) g) +
 * pi([h,h]_h), together with the exact count on the double extension.
 * Requires h abelian or semi-simple.
 */
inline SpinorBoundResult parallel_spinor_bound(const ExtensionData& e) {
    if (!is_abelian(e.h) && !is_semisimple(e.h)) {
        throw std::invalid_argument("parallel_spinor_bound: h must be abelian or semi-simple");
    }
    const std::size_t n = e.g.dim();
    const std::size_t r = e.h.dim();
    const OrthonormalFrame frame =
        n ? exact_orthonormal_frame(e.g.metric) : OrthonormalFrame{Matrix(0, 0), 0, 0};
    const CliffordRep rep = clifford_generators(frame.neg, frame.pos);
    const Matrix frame_inv = n ? inverse(frame.frame) : Matrix(0, 0);

    std::vector<Vector> pi_g_gens;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t k = 0; k < n; ++k) pi_g_gens.push_back(e.pi[a].column(k));
    std::vector<Matrix> ops;
    for (const Vector& x : echelon_basis(n, pi_g_gens)) ops.push_back(ad_operator(e.g, x));
    for (const Vector& h : derived_subalgebra(e.h)) {
        Matrix pi_h(n, n);
        for (std::size_t cidx = 0; cidx < r; ++cidx)
            if (!h[cidx].is_zero()) pi_h = pi_h + e.pi[cidx] * h[cidx];
        ops.push_back(std::move(pi_h));
    }
    for (const Matrix& op : holonomy_algebra(e.g).span.basis()) ops.push_back(op);

    std::vector<Matrix> framed;
    for (const Matrix& op : ops) framed.push_back(frame_inv * op * frame.frame);

    SpinorBoundResult out;
    out.lower_bound = annihilator_dim(rep, framed);
    out.exact = parallel_spinor_dim(double_extend(e));
    if (out.lower_bound > out.exact) {
        throw std::logic_error("parallel_spinor_bound: bound exceeds the exact dimension");
    }
    return out;
}

}  // namespace liespin
