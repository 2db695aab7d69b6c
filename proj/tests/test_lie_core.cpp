#include <catch2/catch_amalgamated.hpp>

#include "liespin/catalog.hpp"
#include "liespin/geometry.hpp"

using namespace liespin;

namespace {

const MetricLieAlgebra& osc1() {
    static const MetricLieAlgebra a = catalog("osc").algebra;
    return a;
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(abelian_euclidean(3)).ok());

    MetricLieAlgebra su2 = su2_algebra(Scalar(1));
    CHECK(validate(su2).ok());

    // su(2) with a non-invariant metric: <[e1,e2],e3> != -<e2,[e1,e3]>
    su2.metric = Matrix::identity(3);
    su2.metric(2, 2) = Scalar(2);
    const ValidationReport report = validate(su2);
    CHECK_FALSE(report.ok());
    bool invariance_flagged = false;
    for (const auto& v : report.violations) invariance_flagged |= v.find("invariance") == 0;
    CHECK(invariance_flagged);

    MetricLieAlgebra broken = su2_algebra(Scalar(1));
    broken.structure.set_bracket(0, 1, unit_vector(3, 0));  // [e1,e2] = e1 breaks Jacobi closure
    CHECK_FALSE(validate(broken).ok());

    MetricLieAlgebra degenerate = abelian_euclidean(2);
    degenerate.metric(1, 1) = Scalar(0);
    CHECK_FALSE(validate(degenerate).ok());

    DegenerateFormAlgebra h;
    h.labels = {"H"};
    h.structure = StructureConstants(1);
    h.metric = Matrix(1, 1);
    CHECK(validate(h).ok());  // a degenerate form is fine here
}

TEST_CASE("ad operators") {
    CHECK(ad_operator(abelian_euclidean(3), unit_vector(3, 0)).is_zero());

    const MetricLieAlgebra su2 = su2_algebra(Scalar(1));
    const Matrix ad1 = ad_operator(su2, unit_vector(3, 0));
    CHECK(ad1.apply(unit_vector(3, 1)) == unit_vector(3, 2));
    CHECK(ad1.apply(unit_vector(3, 2)) == vector_scale(Scalar(-1), unit_vector(3, 1)));

    // osc(1): ad H acts as the rotation on the X block and kills alpha, H.
    const MetricLieAlgebra& osc = osc1();
    const Matrix ad_h = ad_operator(osc, unit_vector(4, 3));
    CHECK(ad_h.column(0) == Vector(4, Scalar(0)));
    CHECK(ad_h.column(3) == Vector(4, Scalar(0)));
    CHECK(ad_h.block(1, 1, 2, 2) == block_rotation({Scalar(1)}));

    // linearity in x
    const Vector x = vector_add(unit_vector(3, 0), vector_scale(Scalar(3), unit_vector(3, 2)));
    CHECK(ad_operator(su2, x) ==
          ad_operator(su2, unit_vector(3, 0)) + ad_operator(su2, unit_vector(3, 2)) * Scalar(3));
}

TEST_CASE("killing forms") {
    CHECK(killing_form(abelian_euclidean(4)).is_zero());
    CHECK(killing_form(su2_algebra(Scalar(1))) == Matrix::identity(3) * Scalar(-2));

    // osc(lambda): B(H,H) = -2 sum lambda_i^2, everything else zero
    CatalogParams p;
    p.lambda = {Scalar(1), Scalar(2)};
    const MetricLieAlgebra osc = catalog("osc", p).algebra;
    Matrix expected(6, 6);
    expected(5, 5) = Scalar(-10);
    CHECK(killing_form(osc) == expected);
}

TEST_CASE("killing form is ad-invariant") {
    for (const char* name : {"osc", "L3", "N2", "Tsu2", "su2", "sl2"}) {
        const MetricLieAlgebra a = catalog(name).algebra;
        const Matrix b = killing_form(a);
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar lhs =
                        form_value(b, a.structure.bracket_basis(i, j), unit_vector(n, k)) +
                        form_value(b, unit_vector(n, j), a.structure.bracket_basis(i, k));
                    CHECK(lhs.is_zero());
                }
    }
}

TEST_CASE("derived subalgebras") {
    CHECK(derived_subalgebra(abelian_euclidean(3)).empty());
    CHECK(derived_subalgebra(su2_algebra(Scalar(1))).size() == 3);

    // osc(1): [d,d] = span{alpha, X1, X2}
    const auto derived = derived_subalgebra(osc1());
    REQUIRE(derived.size() == 3);
    RowSpan span(4);
    for (const auto& v : derived) span.add(v);
    CHECK(span.contains(unit_vector(4, 0)));
    CHECK(span.contains(unit_vector(4, 1)));
    CHECK(span.contains(unit_vector(4, 2)));
    CHECK_FALSE(span.contains(unit_vector(4, 3)));
}

TEST_CASE("derived subalgebra is ad-invariant") {
    for (const char* name : {"osc", "L3", "Tsu2", "DA0U1"}) {
        const MetricLieAlgebra a = catalog(name).algebra;
        const auto derived = derived_subalgebra(a);
        RowSpan span(a.dim());
        for (const auto& v : derived) span.add(v);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const Matrix ad = ad_operator(a, unit_vector(a.dim(), i));
            for (const auto& v : derived) CHECK(span.contains(ad.apply(v)));
        }
    }
}

TEST_CASE("centers") {
    CHECK(center(abelian_euclidean(5)).size() == 5);

    const auto z = center(osc1());
    REQUIRE(z.size() == 1);
    CHECK(z[0] == unit_vector(4, 0));  // R alpha

    // line extension of an abelian algebra: z = R alpha + ker A
    const CatalogEntry n1 = catalog("N1");
    const Matrix& a = n1.extension->pi[0];
    const auto zn = center(n1.algebra);
    CHECK(zn.size() == 1 + kernel_basis(a).size());
    RowSpan zspan(6);
    for (const auto& v : zn) zspan.add(v);
    CHECK(zspan.contains(unit_vector(6, 0)));
    for (const Vector& k : kernel_basis(a)) {
        Vector embedded(6, Scalar(0));
        for (std::size_t i = 0; i < 4; ++i) embedded[1 + i] = k[i];
        CHECK(zspan.contains(embedded));
    }

    // the tower with independent nonzero U's has centre span{alpha_1..alpha_m}
    NormalDerivationSet s;
    s.n = 4;
    s.m = 2;
    s.U = {block_rotation({Scalar(1), Scalar(1)}), block_rotation({Scalar(1), Scalar(-1)})};
    s.Z = {Matrix(1, 1)};
    const MetricLieAlgebra tower = build_tower(s);
    const auto zt = center(tower);
    REQUIRE(zt.size() == 2);
    RowSpan span(tower.dim());
    for (const auto& v : zt) span.add(v);
    CHECK(span.contains(unit_vector(8, 0)));
    CHECK(span.contains(unit_vector(8, 1)));
}

TEST_CASE("central elements pair to zero with the Killing form in solvable examples") {
    for (const char* name : {"osc", "L3", "N1", "DA0U1"}) {
        const MetricLieAlgebra a = catalog(name).algebra;
        const Matrix b = killing_form(a);
        for (const Vector& z : center(a)) {
            CHECK(vector_is_zero(b.apply(z)));
        }
    }
}

TEST_CASE("metric derivation checks") {
    const MetricLieAlgebra r3 = abelian_algebra(diag_pq_metric(1, 2));
    CHECK(is_metric_derivation(r3, Matrix(3, 3)).ok());

    // abelian: Leibniz is vacuous, so any A with A^T G + G A = 0 passes
    Matrix a(3, 3);
    a(0, 1) = Scalar(1);
    a(1, 0) = Scalar(1);  // antisymmetric for diag(-1,1,1)
    CHECK(is_metric_derivation(r3, a).ok());
    a(1, 0) = Scalar(-1);
    CHECK_FALSE(is_metric_derivation(r3, a).ok());

    // ad(x) is always a metric derivation on a valid metric Lie algebra
    for (const char* name : {"su2", "sl2", "osc", "L3"}) {
        const MetricLieAlgebra alg = catalog(name).algebra;
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            CHECK(is_metric_derivation(alg, ad_operator(alg, unit_vector(alg.dim(), i))).ok());
        }
    }

    // Leibniz violation is reported
    const MetricLieAlgebra su2 = su2_algebra(Scalar(1));
    Matrix bad = Matrix::identity(3);
    bad(0, 0) = Scalar(0);
    bad(0, 1) = Scalar(1);
    bad(1, 0) = Scalar(-1);
    bad(1, 1) = Scalar(0);
    bad(2, 2) = Scalar(0);  // rotation in the e1-e2 plane, not a derivation of su(2)... check
    const DerivationReport rep = is_metric_derivation(su2, bad);
    CHECK(rep.antisymmetry_ok);
}

TEST_CASE("space of antisymmetric derivations") {
    // so(3) = antisymmetric derivations of the Euclidean abelian algebra
    CHECK(antisymmetric_derivations(abelian_euclidean(3)).dim() == 3);
    // su(2) is simple: all antisymmetric derivations are inner
    CHECK(antisymmetric_derivations(su2_algebra(Scalar(1))).dim() == 3);
}
