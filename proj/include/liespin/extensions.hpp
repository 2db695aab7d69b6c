#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liespin/algebra.hpp"

namespace liespin {

/// The data (g, h, pi) of a double extension: h acts on g by antisymmetric
/// derivations pi(H_a), and h carries an invariant form that may degenerate.
struct ExtensionData {
    MetricLieAlgebra g;
    DegenerateFormAlgebra h;
    std::vector<Matrix> pi;  // one matrix per basis vector of h
};

inline ValidationReport validate_extension(const ExtensionData& e) {
    ValidationReport report;
    {
        ValidationReport rg = validate(e.g);
        for (const auto& v : rg.violations) report.violations.push_back("g: " + v);
    }
    {
        ValidationReport rh = validate(e.h);
        for (const auto& v : rh.violations) report.violations.push_back("h: " + v);
    }
    const std::size_t r = e.h.dim();
    const std::size_t n = e.g.dim();
    if (e.pi.size() != r) {
        report.violations.push_back("pi: expected " + std::to_string(r) + " matrices, got " +
                                    std::to_string(e.pi.size()));
        return report;
    }
    for (std::size_t a = 0; a < r; ++a) {
        if (e.pi[a].rows() != n || e.pi[a].cols() != n) {
            report.violations.push_back("pi[" + std::to_string(a) + "]: shape " + e.pi[a].shape_str() +
                                        " does not match dim g = " + std::to_string(n));
            return report;
        }
        const DerivationReport d = is_metric_derivation(e.g, e.pi[a]);
        for (const auto& v : d.violations)
            report.violations.push_back("pi[" + std::to_string(a) + "]: " + v);
    }
    // pi must be a homomorphism: pi([H_a, H_b]_h) = [pi(H_a), pi(H_b)].
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            const Vector hb = e.h.structure.bracket_basis(a, b);
            Matrix lhs(n, n);
            for (std::size_t k = 0; k < r; ++k) {
                if (!hb[k].is_zero()) lhs = lhs + e.pi[k] * hb[k];
            }
            if (lhs != commutator(e.pi[a], e.pi[b])) {
                report.violations.push_back("pi: not a homomorphism on h-basis pair (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
    }
    bool pi_zero = true;
    for (const auto& m : e.pi) {
        if (!m.is_zero()) pi_zero = false;
    }
    if (pi_zero && n > 0) {
        report.notes.push_back("pi is identically zero: the double extension decomposes");
    }
    return report;
}

namespace detail {

/// Smallest index k such that neither prefix+k appears among the labels,
/// for any of the requested prefixes. Keeps nested extensions readable.
inline std::size_t next_label_index(const std::vector<std::string>& labels,
                                    std::initializer_list<const char*> prefixes) {
    std::size_t next = 1;
    for (const auto& label : labels) {
        for (const char* prefix : prefixes) {
            const std::string p(prefix);
            if (label.size() > p.size() && label.compare(0, p.size(), p) == 0) {
                bool digits = true;
                for (std::size_t k = p.size(); k < label.size(); ++k)
                    digits = digits && std::isdigit(static_cast<unsigned char>(label[k]));
                if (digits) {
                    const std::size_t v = static_cast<std::size_t>(std::stoul(label.substr(p.size())));
                    if (v + 1 > next) next = v + 1;
                }
            }
        }
    }
    return next;
}

}  // namespace detail

/**
 * The double extension on h* + g + h with the ordered basis
 * (alpha_r, ..., alpha_1, X_1, ..., X_n, H_1, ..., H_r).
 * Bracket and metric follow the defining formulas; the result always passes
 * validate().
 */
inline MetricLieAlgebra double_extend(const ExtensionData& e) {
    {
        const ValidationReport report = validate_extension(e);
        if (!report.ok()) {
            throw std::invalid_argument("double_extend: invalid extension data: " +
                                        report.violations.front());
        }
    }
    const std::size_t r = e.h.dim();
    const std::size_t n = e.g.dim();
    const std::size_t total = 2 * r + n;

    // Stored index of alpha_j / X_k / H_j (1-based j, 0-based k).
    const auto idx_alpha = [r](std::size_t j) { return r - j; };
    const auto idx_x = [r](std::size_t k) { return r + k; };
    const auto idx_h = [r, n](std::size_t j) { return r + n + j - 1; };

    MetricLieAlgebra d;
    d.structure = StructureConstants(total);
    d.metric = Matrix(total, total);

    const std::size_t base = detail::next_label_index(e.g.labels, {"alpha", "H"});
    d.labels.resize(total);
    for (std::size_t j = 1; j <= r; ++j) {
        d.labels[idx_alpha(j)] = "alpha" + std::to_string(base + j - 1);
        d.labels[idx_h(j)] = "H" + std::to_string(base + j - 1);
    }
    for (std::size_t k = 0; k < n; ++k) d.labels[idx_x(k)] = e.g.labels[k];

    // [X, Y] = [X, Y]_g + beta(X, Y), with beta(X,Y)(H_a) = <pi(H_a) X, Y>_g.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            Vector out(total, Scalar(0));
            const Vector w = e.g.structure.bracket_basis(k, l);
            for (std::size_t m = 0; m < n; ++m) out[idx_x(m)] = w[m];
            for (std::size_t a = 1; a <= r; ++a) {
                out[idx_alpha(a)] =
                    form_value(e.g.metric, e.pi[a - 1].column(k), unit_vector(n, l));
            }
            d.structure.set_bracket(idx_x(k), idx_x(l), out);
        }
    }
    // [H_a, X_k] = pi(H_a) X_k.
    for (std::size_t a = 1; a <= r; ++a) {
        for (std::size_t k = 0; k < n; ++k) {
            Vector out(total, Scalar(0));
            const Vector v = e.pi[a - 1].column(k);
            for (std::size_t m = 0; m < n; ++m) out[idx_x(m)] = v[m];
            d.structure.set_bracket(idx_h(a), idx_x(k), out);
        }
    }
    // [H_a, H_b] = [H_a, H_b]_h.
    for (std::size_t a = 1; a <= r; ++a) {
        for (std::size_t b = a + 1; b <= r; ++b) {
            Vector out(total, Scalar(0));
            const Vector w = e.h.structure.bracket_basis(a - 1, b - 1);
            for (std::size_t m = 1; m <= r; ++m) out[idx_h(m)] = w[m - 1];
            d.structure.set_bracket(idx_h(a), idx_h(b), out);
        }
    }
    // [H_a, alpha_b] = ad*_h(H_a) alpha_b, i.e. (ad* H_a alpha_b)(H_c) = -alpha_b([H_a, H_c]_h).
    for (std::size_t a = 1; a <= r; ++a) {
        for (std::size_t b = 1; b <= r; ++b) {
            Vector out(total, Scalar(0));
            for (std::size_t c = 1; c <= r; ++c) {
                out[idx_alpha(c)] = -e.h.structure.at(a - 1, c - 1, b - 1);
            }
            d.structure.set_bracket(idx_h(a), idx_alpha(b), out);
        }
    }

    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) d.metric(idx_x(k), idx_x(l)) = e.g.metric(k, l);
    for (std::size_t a = 1; a <= r; ++a)
        for (std::size_t b = 1; b <= r; ++b) d.metric(idx_h(a), idx_h(b)) = e.h.metric(a - 1, b - 1);
    for (std::size_t a = 1; a <= r; ++a) {
        d.metric(idx_alpha(a), idx_h(a)) = Scalar(1);
        d.metric(idx_h(a), idx_alpha(a)) = Scalar(1);
    }
    return d;
}

/// The 1-dimensional special case d_A with the flat pairing (c = 0) on h = R.
inline ExtensionData line_extension_data(const MetricLieAlgebra& g, const Matrix& a) {
    ExtensionData e;
    e.g = g;
    e.h.labels = {"H"};
    e.h.structure = StructureConstants(1);
    e.h.metric = Matrix(1, 1);
    e.pi = {a};
    return e;
}

inline MetricLieAlgebra extend_by_line(const MetricLieAlgebra& g, const Matrix& a) {
    const DerivationReport d = is_metric_derivation(g, a);
    if (!d.ok()) {
        throw std::invalid_argument("extend_by_line: A is not an antisymmetric derivation: " +
                                    d.violations.front());
    }
    return double_extend(line_extension_data(g, a));
}

/// Orthogonal direct sum, a first then b.
inline MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    MetricLieAlgebra out;
    const std::size_t na = a.dim(), nb = b.dim();
    out.labels = a.labels;
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    out.structure = StructureConstants(na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = i + 1; j < na; ++j) {
            Vector v(na + nb, Scalar(0));
            const Vector w = a.structure.bracket_basis(i, j);
            for (std::size_t k = 0; k < na; ++k) v[k] = w[k];
            out.structure.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j) {
            Vector v(na + nb, Scalar(0));
            const Vector w = b.structure.bracket_basis(i, j);
            for (std::size_t k = 0; k < nb; ++k) v[na + k] = w[k];
            out.structure.set_bracket(na + i, na + j, v);
        }
    out.metric = Matrix(na + nb, na + nb);
    out.metric.set_block(0, 0, a.metric);
    out.metric.set_block(na, na, b.metric);
    return out;
}

/**
 * Tower data: m derivation levels over an n-dimensional Euclidean abelian base.
 * Level k >= 1 is the block matrix with U_k on the base and Z_k (k x k,
 * antisymmetric) in the corner; level 0 is the bijective U_0 alone.
 */
struct NormalDerivationSet {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Matrix> U;  // m matrices in so(n)
    std::vector<Matrix> Z;  // Z_1 ... Z_{m-1}, Z_k is k x k
};

inline ValidationReport validate_normal_set(const NormalDerivationSet& s) {
    ValidationReport report;
    if (s.n == 0 || s.n % 2 != 0) {
        report.violations.push_back("n: base dimension must be a positive even number");
    }
    if (s.m == 0) report.violations.push_back("m: tower height must be positive");
    if (s.U.size() != s.m) {
        report.violations.push_back("U: expected " + std::to_string(s.m) + " matrices, got " +
                                    std::to_string(s.U.size()));
        return report;
    }
    if (s.Z.size() + 1 != s.m && !(s.m == 0 && s.Z.empty())) {
        report.violations.push_back("Z: expected " + std::to_string(s.m ? s.m - 1 : 0) +
                                    " matrices, got " + std::to_string(s.Z.size()));
        return report;
    }
    for (std::size_t k = 0; k < s.U.size(); ++k) {
        if (s.U[k].rows() != s.n || s.U[k].cols() != s.n) {
            report.violations.push_back("U[" + std::to_string(k) + "]: shape " + s.U[k].shape_str() +
                                        " does not match n = " + std::to_string(s.n));
            return report;
        }
        if (!(s.U[k].transpose() + s.U[k]).is_zero()) {
            report.violations.push_back("U[" + std::to_string(k) + "]: not in so(" +
                                        std::to_string(s.n) + ")");
        }
    }
    for (std::size_t k = 0; k < s.Z.size(); ++k) {
        const std::size_t want = k + 1;
        if (s.Z[k].rows() != want || s.Z[k].cols() != want) {
            report.violations.push_back("Z[" + std::to_string(k + 1) + "]: expected " +
                                        std::to_string(want) + "x" + std::to_string(want) + ", got " +
                                        s.Z[k].shape_str());
        } else if (!(s.Z[k].transpose() + s.Z[k]).is_zero()) {
            report.violations.push_back("Z[" + std::to_string(k + 1) + "]: not antisymmetric");
        }
    }
    if (!s.U.empty() && s.U[0].rows() == s.n) {
        if (rank(s.U[0]) != s.n) report.violations.push_back("U[0]: must be bijective");
        for (std::size_t a = 0; a < s.U.size(); ++a)
            for (std::size_t b = a + 1; b < s.U.size(); ++b)
                if (!commutator(s.U[a], s.U[b]).is_zero()) {
                    report.violations.push_back("U: span{U_0..U_" + std::to_string(s.m - 1) +
                                                "} is not abelian ([U_" + std::to_string(a) + ",U_" +
                                                std::to_string(b) + "] != 0)");
                }
    }
    return report;
}

/**
 * Iterated 1-dimensional extensions of the Euclidean abelian base, with the
 * ordered basis (alpha_m, ..., alpha_1, e_1, ..., e_n, H_1, ..., H_m) and
 * metric pairing alpha_i with H_i hyperbolically.
 */
inline MetricLieAlgebra build_tower(const NormalDerivationSet& s) {
    {
        const ValidationReport report = validate_normal_set(s);
        if (!report.ok()) {
            throw std::invalid_argument("build_tower: invalid normal set: " + report.violations.front());
        }
    }
    const std::size_t m = s.m, n = s.n;
    const std::size_t total = 2 * m + n;
    const auto idx_alpha = [m](std::size_t j) { return m - j; };
    const auto idx_x = [m](std::size_t k) { return m + k; };
    const auto idx_h = [m, n](std::size_t j) { return m + n + j - 1; };

    MetricLieAlgebra d;
    d.structure = StructureConstants(total);
    d.metric = Matrix(total, total);
    d.labels.resize(total);
    for (std::size_t j = 1; j <= m; ++j) {
        d.labels[idx_alpha(j)] = "alpha" + std::to_string(j);
        d.labels[idx_h(j)] = "H" + std::to_string(j);
    }
    for (std::size_t k = 0; k < n; ++k) d.labels[idx_x(k)] = "e" + std::to_string(k + 1);

    // [X, Y] = sum_j <U_{j-1} X, Y> alpha_j.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            Vector out(total, Scalar(0));
            for (std::size_t j = 1; j <= m; ++j) out[idx_alpha(j)] = s.U[j - 1](l, k);
            d.structure.set_bracket(idx_x(k), idx_x(l), out);
        }
    }
    // [H_i, X] = U_{i-1} X.
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Vector out(total, Scalar(0));
            for (std::size_t l = 0; l < n; ++l) out[idx_x(l)] = s.U[i - 1](l, k);
            d.structure.set_bracket(idx_h(i), idx_x(k), out);
        }
    }
    // For i > j: [H_i, H_j] = sum_{l=i}^{m-1} (Z_l)_{ji} alpha_{l+1}
    //                         + sum_{k=1}^{i-1} (Z_{i-1})_{kj} alpha_k.
    for (std::size_t i = 2; i <= m; ++i) {
        for (std::size_t j = 1; j < i; ++j) {
            Vector out(total, Scalar(0));
            for (std::size_t l = i; l <= m - 1; ++l) {
                out[idx_alpha(l + 1)] += s.Z[l - 1](j - 1, i - 1);
            }
            for (std::size_t k = 1; k <= i - 1; ++k) {
                out[idx_alpha(k)] += s.Z[i - 2](k - 1, j - 1);
            }
            d.structure.set_bracket(idx_h(i), idx_h(j), out);
        }
    }

    for (std::size_t k = 0; k < n; ++k) d.metric(idx_x(k), idx_x(k)) = Scalar(1);
    for (std::size_t j = 1; j <= m; ++j) {
        d.metric(idx_alpha(j), idx_h(j)) = Scalar(1);
        d.metric(idx_h(j), idx_alpha(j)) = Scalar(1);
    }
    return d;
}

/// Closed-form holonomy generators of a tower: one matrix per base vector X,
/// sending Y in g_0 to the alpha-components <U_k X, Y> and H_j to -U_{j-1} X.
inline std::vector<Matrix> tower_holonomy_generators(const NormalDerivationSet& s) {
    const std::size_t m = s.m, n = s.n;
    const std::size_t total = 2 * m + n;
    const auto idx_alpha = [m](std::size_t j) { return m - j; };
    const auto idx_x = [m](std::size_t k) { return m + k; };
    const auto idx_h = [m, n](std::size_t j) { return m + n + j - 1; };
    std::vector<Matrix> out;
    for (std::size_t x = 0; x < n; ++x) {
        Matrix gen(total, total);
        for (std::size_t j = 1; j <= m; ++j) {
            const Vector ux = s.U[j - 1].column(x);
            for (std::size_t l = 0; l < n; ++l) {
                gen(idx_alpha(j), idx_x(l)) = form_value(Matrix::identity(n), ux, unit_vector(n, l));
                gen(idx_x(l), idx_h(j)) = -ux[l];
            }
        }
        out.push_back(std::move(gen));
    }
    return out;
}

}  // namespace liespin
