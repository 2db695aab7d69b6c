#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liespin/catalog.hpp"
#include "liespin/geometry.hpp"

using namespace liespin;

namespace {

const std::vector<std::pair<std::string, CatalogParams>>& all_entries() {
    static const auto entries = [] {
        std::vector<std::pair<std::string, CatalogParams>> out = {
            {"osc", {}}, {"L2", {}}, {"L3", {}}, {"L2lambda", {}}, {"L3lambda", {}},
            {"N1", {}},  {"N2", {}}, {"N3", {}}, {"N4", {}},       {"N5", {}},
            {"N6", {}},  {"Tsu2", {}}, {"Tsl2", {}}, {"su2", {}},  {"sl2", {}},
            {"OscA0U1", {}}, {"DA0U1", {}}};
        CatalogParams q;
        q.h_matrices = quaternion_su2_matrices();
        out.emplace_back("D_abelian_simple", q);
        return out;
    }();
    return entries;
}

Matrix random_so_pq(std::mt19937& rng, std::size_t p, std::size_t q) {
    std::uniform_int_distribution<int> entry(-2, 2);
    const std::size_t n = p + q;
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            w(i, j) = Scalar(entry(rng));
            w(j, i) = -w(i, j);
        }
    return diag_pq_metric(p, q) * w;  // K W is antisymmetric for K = diag(kappa)
}

}  // namespace

TEST_CASE("curvature values") {
    const MetricLieAlgebra flat = abelian_euclidean(3);
    CHECK(vector_is_zero(
        curvature(flat, unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2))));

    const MetricLieAlgebra su2 = su2_algebra(Scalar(1));
    CHECK(curvature(su2, unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 1)) ==
          vector_scale(Scalar(Rational(1, 4)), unit_vector(3, 0)));

    // osc(1), basis (alpha, X1, X2, H): R(X1, H)H = (1/4) X1
    const MetricLieAlgebra osc = catalog("osc").algebra;
    CHECK(curvature(osc, unit_vector(4, 1), unit_vector(4, 3), unit_vector(4, 3)) ==
          vector_scale(Scalar(Rational(1, 4)), unit_vector(4, 1)));
}

TEST_CASE("ricci values") {
    CHECK(ricci(abelian_euclidean(3)).is_zero());
    CHECK(ricci(su2_algebra(Scalar(1))) == Matrix::identity(3) * Scalar(Rational(1, 2)));

    CatalogParams p;
    p.lambda = {Scalar(1), Scalar(2)};
    const MetricLieAlgebra osc = catalog("osc", p).algebra;
    Matrix expect(6, 6);
    expect(5, 5) = Scalar(Rational(5, 2));  // (1/2)(1 + 4)
    CHECK(ricci(osc) == expect);
}

TEST_CASE("ricci equals -1/4 of the Killing form on every catalog entry") {
    for (const auto& [name, params] : all_entries()) {
        INFO(name);
        const MetricLieAlgebra a = catalog(name, params).algebra;
        CHECK(ricci(a) == killing_form(a) * Scalar(Rational(-1, 4)));
    }
}

TEST_CASE("curvature-trace ricci agrees with the Killing route where a frame exists") {
    for (const char* name : {"su2", "osc", "N4", "L2", "Tsu2"}) {
        INFO(name);
        const MetricLieAlgebra a = catalog(name).algebra;
        const auto traced = ricci_from_curvature_trace(a);
        REQUIRE(traced.has_value());
        CHECK(*traced == ricci(a));
    }
}

TEST_CASE("extension block formulas match the Killing blocks") {
    {
        const ExtensionKillingBlocks blocks = extension_killing_blocks(*catalog("osc").extension);
        CHECK(blocks.consistent());
        CHECK(blocks.formula_hh(0, 0) == Scalar(-2));
    }
    {
        const ExtensionKillingBlocks blocks = extension_killing_blocks(*catalog("L2").extension);
        CHECK(blocks.consistent());
        CHECK(blocks.formula_hh(0, 0) == Scalar(2));
    }
    {
        CatalogParams p;
        p.lambda = {Scalar(2)};
        const ExtensionKillingBlocks blocks = extension_killing_blocks(*catalog("L2lambda", p).extension);
        CHECK(blocks.consistent());
        CHECK(blocks.formula_hh(0, 0) == Scalar(2 - 2 * 4));  // 2 - 2 lambda^2
    }
    {
        // Osc(1,lambda): the Killing block is -2 - 2 lambda^2
        CatalogParams p;
        p.lambda = {Scalar(1), Scalar(3)};
        const ExtensionKillingBlocks blocks = extension_killing_blocks(*catalog("osc", p).extension);
        CHECK(blocks.consistent());
        CHECK(blocks.formula_hh(0, 0) == Scalar(-2 - 2 * 9));
    }
    for (const auto& [name, params] : all_entries()) {
        const CatalogEntry entry = catalog(name, params);
        if (!entry.extension) continue;
        INFO(name);
        CHECK(extension_killing_blocks(*entry.extension).consistent());
    }
}

TEST_CASE("scalar curvature") {
    CHECK(scalar_curvature(sl2_algebra(Scalar(1))) == Scalar(Rational(-3, 4)));
    CHECK(scalar_curvature(su2_algebra(Scalar(1))) == Scalar(Rational(3, 4)));
    // with the Killing form itself as the metric, R = -dim/4 for simple algebras
    CHECK(scalar_curvature(su2_algebra(Scalar(-1))) == Scalar(Rational(-3, 4)));
    CHECK(scalar_curvature(catalog("osc").algebra).is_zero());
    for (const char* name : {"N1", "N2", "N3", "N4", "N5", "N6"}) {
        INFO(name);
        CHECK(scalar_curvature(catalog(name).algebra).is_zero());
    }
}

TEST_CASE("classification flags") {
    CHECK(classify(catalog("N1").algebra).flags.flat);

    const CurvatureReport l3 = classify(catalog("L3").algebra);
    CHECK(l3.flags.ricci_flat);
    CHECK_FALSE(l3.flags.flat);

    CatalogParams t1;
    t1.t = Scalar(1);
    CHECK(classify(catalog("N2", t1).algebra).flags.ricci_flat);
    CatalogParams t2;
    t2.t = Scalar(2);
    const CurvatureReport n2t2 = classify(catalog("N2", t2).algebra);
    CHECK_FALSE(n2t2.flags.ricci_flat);
    CHECK(n2t2.flags.ricci_2step_nilpotent);

    const CurvatureReport su2_report = classify(su2_algebra(Scalar(1)));
    CHECK(su2_report.flags.einstein);
    CHECK(*su2_report.flags.einstein_constant == Scalar(Rational(1, 4)));
    const CurvatureReport sl2_report = classify(sl2_algebra(Scalar(1)));
    CHECK(sl2_report.flags.einstein);
    CHECK(*sl2_report.flags.einstein_constant == Scalar(Rational(-1, 4)));
}

TEST_CASE("first Bianchi identity and pair symmetries") {
    for (const char* name : {"osc", "L3", "Tsu2", "N3", "sl2"}) {
        INFO(name);
        const MetricLieAlgebra a = catalog(name).algebra;
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Vector ei = unit_vector(n, i), ej = unit_vector(n, j),
                                 ek = unit_vector(n, k);
                    Vector bianchi = vector_add(curvature(a, ei, ej, ek),
                                                vector_add(curvature(a, ej, ek, ei),
                                                           curvature(a, ek, ei, ej)));
                    CHECK(vector_is_zero(bianchi));
                    // antisymmetry in (x,y)
                    CHECK(vector_is_zero(
                        vector_add(curvature(a, ei, ej, ek), curvature(a, ej, ei, ek))));
                }
        // <R(x,y)z,w> symmetries on a sample of index choices
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        const Vector ek = unit_vector(n, k), el = unit_vector(n, l);
                        const Scalar rijkl = form_value(a.metric, curvature(a, ei, ej, ek), el);
                        CHECK(rijkl == -form_value(a.metric, curvature(a, ei, ej, el), ek));
                        CHECK(rijkl == form_value(a.metric, curvature(a, ek, el, ei), ej));
                    }
            }
    }
}

TEST_CASE("Ricci-flat and flat criteria for line extensions of abelian algebras") {
    std::mt19937 rng(41);
    const std::pair<std::size_t, std::size_t> sigs[] = {{1, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 3}};
    for (const auto& [p, q] : sigs) {
        for (int iter = 0; iter < 10; ++iter) {
            const Matrix a = random_so_pq(rng, p, q);
            const MetricLieAlgebra d = extend_by_line(abelian_algebra(diag_pq_metric(p, q)), a);
            const CurvatureReport report = classify(d);
            CHECK(report.flags.ricci_flat == (a * a).trace().is_zero());
            CHECK(report.flags.flat == (a * a).is_zero());
            CHECK(report.scalar.is_zero());
            CHECK(report.flags.ricci_2step_nilpotent);
        }
    }
}
