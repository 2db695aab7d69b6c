#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liespin/extensions.hpp"

namespace liespin {

/// Abelian algebra with the given invariant form.
inline MetricLieAlgebra abelian_algebra(const Matrix& metric, const std::string& label_prefix = "e") {
    MetricLieAlgebra a;
    const std::size_t n = metric.rows();
    a.structure = StructureConstants(n);
    a.metric = metric;
    for (std::size_t k = 1; k <= n; ++k) a.labels.push_back(label_prefix + std::to_string(k));
    return a;
}

inline MetricLieAlgebra abelian_euclidean(std::size_t n, const std::string& label_prefix = "e") {
    return abelian_algebra(Matrix::identity(n), label_prefix);
}

/// Pseudo-Euclidean diagonal metric with p entries -1 followed by q entries +1.
inline Matrix diag_pq_metric(std::size_t p, std::size_t q) {
    Matrix g = Matrix::identity(p + q);
    for (std::size_t k = 0; k < p; ++k) g(k, k) = Scalar(-1);
    return g;
}

/// The block rotation with 2x2 blocks (0, -lambda_r; lambda_r, 0).
inline Matrix block_rotation(const std::vector<Scalar>& lambda) {
    Matrix a(2 * lambda.size(), 2 * lambda.size());
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        a(2 * r, 2 * r + 1) = -lambda[r];
        a(2 * r + 1, 2 * r) = lambda[r];
    }
    return a;
}

/// su(2) with [e_i, e_j] = epsilon_ijk e_k; metric is -c times the Killing form.
inline MetricLieAlgebra su2_algebra(const Scalar& c) {
    MetricLieAlgebra a;
    a.labels = {"e1", "e2", "e3"};
    a.structure = StructureConstants(3);
    a.structure.set_bracket(0, 1, unit_vector(3, 2));
    a.structure.set_bracket(1, 2, unit_vector(3, 0));
    a.structure.set_bracket(2, 0, unit_vector(3, 1));
    a.metric = Matrix::identity(3);  // placeholder, replaced by the computed Killing form
    a.metric = killing_form(a) * (-c);
    return a;
}

/// sl(2,R) in the basis (H, E, F) with [H,E] = 2E, [H,F] = -2F, [E,F] = H;
/// metric is c times the Killing form (computed, never hard-coded).
inline MetricLieAlgebra sl2_algebra(const Scalar& c) {
    MetricLieAlgebra a;
    a.labels = {"Hs", "E", "F"};
    a.structure = StructureConstants(3);
    a.structure.set_bracket(0, 1, vector_scale(Scalar(2), unit_vector(3, 1)));
    a.structure.set_bracket(0, 2, vector_scale(Scalar(-2), unit_vector(3, 2)));
    a.structure.set_bracket(1, 2, unit_vector(3, 0));
    a.metric = Matrix::identity(3);
    a.metric = killing_form(a) * c;
    return a;
}

/// Builds the abstract Lie algebra spanned by given matrices under the
/// commutator, acting on itself via those matrices. Fails when the span is not
/// closed under commutators.
inline DegenerateFormAlgebra matrix_spanned_algebra(const std::vector<Matrix>& gens,
                                                    const Scalar& form_killing_multiple) {
    if (gens.empty()) throw std::invalid_argument("matrix_spanned_algebra: no generators");
    const std::size_t n = gens[0].rows();
    const std::size_t r = gens.size();
    Matrix coords(n * n, r);
    for (std::size_t a = 0; a < r; ++a) {
        if (gens[a].rows() != n || gens[a].cols() != n)
            throw std::invalid_argument("matrix_spanned_algebra: generator shapes differ");
        coords.set_column(a, gens[a].flatten());
    }
    DegenerateFormAlgebra h;
    h.structure = StructureConstants(r);
    for (std::size_t a = 0; a < r; ++a) h.labels.push_back("q" + std::to_string(a + 1));
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            const auto sol = solve(coords, commutator(gens[a], gens[b]).flatten());
            if (!sol) {
                throw std::invalid_argument(
                    "matrix_spanned_algebra: generators do not span a Lie algebra ([" +
                    std::to_string(a) + "," + std::to_string(b) + "] escapes the span)");
            }
            h.structure.set_bracket(a, b, *sol);
        }
    }
    h.metric = Matrix(r, r);
    if (!form_killing_multiple.is_zero()) h.metric = killing_form(h) * form_killing_multiple;
    return h;
}

/// Left multiplication by the unit quaternions i, j, k on R^4 = H.
inline std::vector<Matrix> quaternion_su2_matrices() {
    return {Matrix::from_int_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
            Matrix::from_int_rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}),
            Matrix::from_int_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})};
}

inline Matrix l2_matrix() { return Matrix::from_int_rows({{0, 1}, {1, 0}}); }

inline Matrix l3_matrix() {
    return Matrix::from_int_rows({{0, 1, 0}, {1, 0, 1}, {0, -1, 0}});
}

/// The six n = 6 families: the derivation and its companion metric, verbatim.
inline std::pair<Matrix, Matrix> n_family(std::size_t k, const Scalar& t, bool plus_variant) {
    const Matrix anti = Matrix::from_int_rows(
        {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
    switch (k) {
        case 1:
            return {Matrix::from_int_rows({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}),
                    anti};
        case 2: {
            Matrix a(4, 4);
            a(0, 0) = Scalar(1); a(0, 1) = -t;
            a(1, 0) = t;         a(1, 1) = Scalar(1);
            a(2, 2) = Scalar(-1); a(2, 3) = -t;
            a(3, 2) = t;          a(3, 3) = Scalar(-1);
            return {a, anti};
        }
        case 3: {
            const int s = plus_variant ? 1 : -1;
            return {Matrix::from_int_rows({{0, -1, s, 0}, {1, 0, 0, s}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
                    anti};
        }
        case 4: {
            Matrix a(4, 4);
            a(0, 1) = Scalar(-1); a(1, 0) = Scalar(1);
            a(2, 3) = -t;         a(3, 2) = t;
            return {a, diag_pq_metric(2, 2)};
        }
        case 5:
            return {Matrix::from_int_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}),
                    anti};
        case 6: {
            Matrix a(4, 4);
            a(0, 0) = Scalar(1); a(1, 1) = Scalar(-1);
            a(2, 2) = t;         a(3, 3) = -t;
            return {a, Matrix::from_int_rows(
                           {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})};
        }
        default:
            throw std::invalid_argument("n_family: k must be 1..6");
    }
}

struct CatalogParams {
    std::vector<Scalar> lambda;          // osc / L2lambda / L3lambda
    Scalar t = Scalar(1);                // N2, N4, N6
    Scalar c = Scalar(1);                // su2 / sl2 / T* metrics
    bool plus_variant = true;            // N3
    std::size_t p = 1, q = 1;            // A(p,q)
    std::size_t n = 4, m = 2;            // towers / D_abelian_simple base dim
    std::optional<Matrix> A;             // A(p,q)
    std::optional<Matrix> A0, U1;        // OscA0U1 / DA0U1
    std::vector<Matrix> U, Z;            // tower
    std::vector<Matrix> h_matrices;      // D_abelian_simple
    std::optional<Matrix> g_metric;      // D_abelian_simple
    Scalar c_h = Scalar(0);              // D_abelian_simple form multiple on h
};

struct CatalogEntry {
    std::string name;
    std::string description;
    MetricLieAlgebra algebra;
    std::optional<ExtensionData> extension;     // set when built as a double extension
    std::optional<NormalDerivationSet> tower;   // set when built as a tower
};

inline std::vector<std::string> catalog_names() {
    return {"osc",     "A",        "L2",   "L3",   "L2lambda", "L3lambda",
            "N1",      "N2",       "N3",   "N4",   "N5",       "N6",
            "Tsu2",    "Tsl2",     "su2",  "sl2",  "D_abelian_simple",
            "OscA0U1", "DA0U1",    "tower"};
}

inline CatalogEntry catalog(const std::string& name, const CatalogParams& params = {}) {
    CatalogEntry entry;
    entry.name = name;

    auto line_entry = [&entry](const MetricLieAlgebra& g, const Matrix& a) {
        entry.extension = line_extension_data(g, a);
        entry.algebra = double_extend(*entry.extension);
    };
    const std::vector<Scalar> lambda = params.lambda.empty() ? std::vector<Scalar>{Scalar(1)}
                                                             : params.lambda;

    if (name == "osc") {
        line_entry(abelian_euclidean(2 * lambda.size(), "X"), block_rotation(lambda));
        entry.description = "oscillator algebra Osc(lambda)";
    } else if (name == "A") {
        if (!params.A) throw std::invalid_argument("catalog: A(p,q) requires the matrix A");
        line_entry(abelian_algebra(diag_pq_metric(params.p, params.q), "X"), *params.A);
        entry.description = "double extension A(p,q) of an abelian algebra by R";
    } else if (name == "L2") {
        line_entry(abelian_algebra(diag_pq_metric(1, 1), "X"), l2_matrix());
        entry.description = "L2(1,1)";
    } else if (name == "L3") {
        line_entry(abelian_algebra(diag_pq_metric(1, 2), "X"), l3_matrix());
        entry.description = "L3(1,2)";
    } else if (name == "L2lambda") {
        const Matrix a = block_diag({l2_matrix(), block_rotation(lambda)});
        line_entry(abelian_algebra(diag_pq_metric(1, 1 + 2 * lambda.size()), "X"), a);
        entry.description = "L2,lambda(1,n-3)";
    } else if (name == "L3lambda") {
        const Matrix a = block_diag({l3_matrix(), block_rotation(lambda)});
        line_entry(abelian_algebra(diag_pq_metric(1, 2 + 2 * lambda.size()), "X"), a);
        entry.description = "L3,lambda(1,n-3)";
    } else if (name.size() == 2 && name[0] == 'N' && name[1] >= '1' && name[1] <= '6') {
        const std::size_t k = static_cast<std::size_t>(name[1] - '0');
        if ((k == 2 || k == 4) && !(params.t.is_real() && params.t.sign() > 0))
            throw std::invalid_argument("catalog: " + name + " requires a real parameter t > 0");
        if (k == 6 && !(params.t.is_real() && (params.t - Scalar(1)).sign() >= 0))
            throw std::invalid_argument("catalog: N6 requires t >= 1");
        const auto [a, g] = n_family(k, params.t, params.plus_variant);
        line_entry(abelian_algebra(g, "X"), a);
        entry.description = "N" + std::to_string(k) + "(2,2)";
    } else if (name == "Tsu2" || name == "Tsl2") {
        MetricLieAlgebra h0 = name == "Tsu2" ? su2_algebra(1) : sl2_algebra(1);
        ExtensionData e;
        e.g = abelian_algebra(Matrix(0, 0));
        e.h.labels = h0.labels;
        e.h.structure = h0.structure;
        e.h.metric = killing_form(h0) * params.c;
        e.pi = std::vector<Matrix>(3, Matrix(0, 0));
        entry.extension = e;
        entry.algebra = double_extend(e);
        entry.description = name == "Tsu2" ? "cotangent algebra of SU(2), form c*B"
                                           : "cotangent algebra of SL(2,R), form c*B";
    } else if (name == "su2") {
        entry.algebra = su2_algebra(params.c);
        entry.description = "su(2) with metric -c*B";
    } else if (name == "sl2") {
        entry.algebra = sl2_algebra(params.c);
        entry.description = "sl(2,R) with metric c*B";
    } else if (name == "D_abelian_simple") {
        if (params.h_matrices.empty())
            throw std::invalid_argument("catalog: D_abelian_simple requires h matrices");
        ExtensionData e;
        const Matrix g_metric = params.g_metric ? *params.g_metric : Matrix::identity(params.n);
        e.g = abelian_algebra(g_metric, "X");
        e.h = matrix_spanned_algebra(params.h_matrices, params.c_h);
        e.pi = params.h_matrices;
        entry.extension = e;
        entry.algebra = double_extend(e);
        entry.description = "double extension of an abelian algebra by a matrix-spanned h";
    } else if (name == "OscA0U1" || name == "DA0U1") {
        const Matrix a0 = params.A0 ? *params.A0 : block_rotation({Scalar(1), Scalar(1)});
        const Matrix u1 = params.U1 ? *params.U1 : block_rotation({Scalar(1), Scalar(-1)});
        if (!commutator(a0, u1).is_zero())
            throw std::invalid_argument("catalog: " + name + " requires [A0, U1] = 0");
        if (rank(a0) != a0.rows())
            throw std::invalid_argument("catalog: " + name + " requires A0 bijective");
        const std::size_t n0 = a0.rows();
        const MetricLieAlgebra osc = extend_by_line(abelian_euclidean(n0, "X"), a0);
        if (name == "OscA0U1") {
            Matrix a(n0 + 2, n0 + 2);
            a.set_block(1, 1, u1);
            line_entry(osc, a);
            entry.description = "Osc(A0,U1): oscillator extended by the block derivation U1";
        } else {
            MetricLieAlgebra y;
            y.labels = {"y"};
            y.structure = StructureConstants(1);
            y.metric = Matrix::identity(1);
            const MetricLieAlgebra g = direct_sum(y, osc);
            Matrix a(n0 + 3, n0 + 3);
            a(0, n0 + 2) = Scalar(1);   // A(H1) = y
            a(1, 0) = Scalar(-1);       // A(y) = -alpha1
            a.set_block(2, 2, u1);      // A(X) = U1 X
            line_entry(g, a);
            entry.description = "D(A0,U1): R + oscillator extended by R";
        }
    } else if (name == "tower") {
        NormalDerivationSet s;
        s.n = params.n;
        s.m = params.m;
        s.U = params.U;
        s.Z = params.Z;
        if (s.Z.empty() && s.m >= 1) {
            for (std::size_t k = 1; k < s.m; ++k) s.Z.push_back(Matrix(k, k));
        }
        entry.tower = s;
        entry.algebra = build_tower(s);
        entry.description = "solvable tower from a normal derivation set";
    } else {
        throw std::invalid_argument("catalog: unknown name \"" + name + "\"");
    }
    return entry;
}

}  // namespace liespin
