#include <catch2/catch_amalgamated.hpp>

#include "liespin/catalog.hpp"
#include "liespin/geometry.hpp"

using namespace liespin;

TEST_CASE("double extension of the zero algebra by a line") {
    ExtensionData e;
    e.g = abelian_algebra(Matrix(0, 0));
    e.h.labels = {"H"};
    e.h.structure = StructureConstants(1);
    e.h.metric = Matrix(1, 1);
    e.pi = {Matrix(0, 0)};
    const MetricLieAlgebra d = double_extend(e);
    CHECK(d.dim() == 2);
    CHECK(validate(d).ok());
    CHECK(derived_subalgebra(d).empty());
    CHECK(form_signature(d.metric) == FormSignature{1, 1, 0});
}

TEST_CASE("oscillator as a double extension of the Euclidean plane") {
    const CatalogEntry osc = catalog("osc");
    CHECK(osc.algebra.dim() == 4);
    CHECK(validate(osc.algebra).ok());
    CHECK(form_signature(osc.algebra.metric) == FormSignature{1, 3, 0});
    // bracket [X1, X2] = <A X1, X2> alpha = alpha
    CHECK(osc.algebra.structure.bracket_basis(1, 2) == unit_vector(4, 0));
    CHECK(osc.algebra.structure.bracket_basis(3, 1) == unit_vector(4, 2));   // [H, X1] = X2
}

TEST_CASE("cotangent algebras") {
    const CatalogEntry t = catalog("Tsu2");
    CHECK(t.algebra.dim() == 6);
    CHECK(validate(t.algebra).ok());
    CHECK(form_signature(t.algebra.metric) == FormSignature{3, 3, 0});
    // h* is abelian and [h, h*] lands in h*
    CHECK(vector_is_zero(t.algebra.structure.bracket_basis(0, 1)));
    const Vector mixed = t.algebra.structure.bracket_basis(3, 2);  // [H1, alpha1]
    for (std::size_t k = 3; k < 6; ++k) CHECK(mixed[k].is_zero());

    const CatalogEntry ts = catalog("Tsl2");
    CHECK(validate(ts.algebra).ok());
    CHECK(form_signature(ts.algebra.metric) == FormSignature{3, 3, 0});
}

TEST_CASE("invalid extension data is rejected with the violated invariant") {
    ExtensionData e;
    e.g = abelian_euclidean(2);
    e.h.labels = {"H"};
    e.h.structure = StructureConstants(1);
    e.h.metric = Matrix(1, 1);
    Matrix not_antisym(2, 2);
    not_antisym(0, 1) = Scalar(1);
    e.pi = {not_antisym};
    const ValidationReport report = validate_extension(e);
    CHECK_FALSE(report.ok());
    CHECK(report.violations.front().find("antisymmetry") != std::string::npos);
    CHECK_THROWS_AS(double_extend(e), std::invalid_argument);

    // pi not a homomorphism: su(2) acting through commuting matrices
    ExtensionData e2;
    e2.g = abelian_euclidean(2);
    MetricLieAlgebra su2 = su2_algebra(Scalar(1));
    e2.h.labels = su2.labels;
    e2.h.structure = su2.structure;
    e2.h.metric = su2.metric;
    const Matrix rot = block_rotation({Scalar(1)});
    e2.pi = {rot, rot, rot};
    const ValidationReport report2 = validate_extension(e2);
    CHECK_FALSE(report2.ok());
    CHECK(report2.violations.front().find("homomorphism") != std::string::npos);
}

TEST_CASE("extend_by_line") {
    // Osc(lambda) has Lorentzian signature (1, 2m+1)
    CatalogParams p;
    p.lambda = {Scalar(1), Scalar(2), Scalar(3)};
    const MetricLieAlgebra osc = catalog("osc", p).algebra;
    CHECK(osc.dim() == 8);
    CHECK(form_signature(osc.metric) == FormSignature{1, 7, 0});

    const CatalogEntry n1 = catalog("N1");
    CHECK(n1.algebra.dim() == 6);
    CHECK(form_signature(n1.algebra.metric) == FormSignature{3, 3, 0});

    // A = 0 is still constructed, with a decomposability note on the data
    const MetricLieAlgebra flat = extend_by_line(abelian_euclidean(2), Matrix(2, 2));
    CHECK(validate(flat).ok());
    const ValidationReport note_report =
        validate_extension(line_extension_data(abelian_euclidean(2), Matrix(2, 2)));
    CHECK(note_report.ok());
    REQUIRE_FALSE(note_report.notes.empty());
    CHECK(note_report.notes.front().find("decomposes") != std::string::npos);

    // every antisymmetric operator on su(2) is an inner derivation
    MetricLieAlgebra su2 = su2_algebra(Scalar(1));
    Matrix rot(3, 3);
    rot(0, 1) = Scalar(-1);
    rot(1, 0) = Scalar(1);
    CHECK(rot == ad_operator(su2, unit_vector(3, 2)));
    CHECK(validate(extend_by_line(su2, rot)).ok());

    // a symmetric map violates metric antisymmetry and is rejected
    Matrix sym(3, 3);
    sym(0, 1) = Scalar(1);
    sym(1, 0) = Scalar(1);
    CHECK_THROWS_AS(extend_by_line(su2, sym), std::invalid_argument);
}

TEST_CASE("towers") {
    // m = 1 coincides with extend_by_line of the abelian algebra
    NormalDerivationSet s1;
    s1.n = 2;
    s1.m = 1;
    s1.U = {block_rotation({Scalar(1)})};
    const MetricLieAlgebra t1 = build_tower(s1);
    const MetricLieAlgebra o1 = catalog("osc").algebra;
    CHECK(t1.structure == o1.structure);
    CHECK(t1.metric == o1.metric);

    // m = 2 Osc(A0,U1) instance: dim 8, signature (2,6); equals the iterated extension
    NormalDerivationSet s2;
    s2.n = 4;
    s2.m = 2;
    s2.U = {block_rotation({Scalar(1), Scalar(1)}), block_rotation({Scalar(1), Scalar(-1)})};
    s2.Z = {Matrix(1, 1)};
    const MetricLieAlgebra t2 = build_tower(s2);
    CHECK(t2.dim() == 8);
    CHECK(validate(t2).ok());
    CHECK(form_signature(t2.metric) == FormSignature{2, 6, 0});
    const MetricLieAlgebra via_lines = catalog("OscA0U1").algebra;
    CHECK(t2.structure == via_lines.structure);
    CHECK(t2.metric == via_lines.metric);

    // a valid tower with nonzero Z still passes all algebra invariants
    NormalDerivationSet s3;
    s3.n = 2;
    s3.m = 3;
    s3.U = {block_rotation({Scalar(1)}), block_rotation({Scalar(2)}), Matrix(2, 2)};
    Matrix z2(2, 2);
    z2(0, 1) = Scalar(5);
    z2(1, 0) = Scalar(-5);
    s3.Z = {Matrix(1, 1), z2};
    const MetricLieAlgebra t3 = build_tower(s3);
    CHECK(validate(t3).ok());
    CHECK(form_signature(t3.metric) == FormSignature{3, 5, 0});

    // invalid normal sets name the failing condition
    NormalDerivationSet bad = s2;
    bad.U[1] = l2_matrix();  // not antisymmetric
    CHECK_FALSE(validate_normal_set(bad).ok());
    CHECK_THROWS_AS(build_tower(bad), std::invalid_argument);
    bad = s2;
    bad.U[0] = Matrix(4, 4);  // not bijective
    CHECK(validate_normal_set(bad).violations.front().find("bijective") != std::string::npos);
    bad = s2;
    bad.U[1] = block_rotation({Scalar(1)});  // wrong size
    CHECK_FALSE(validate_normal_set(bad).ok());
}

TEST_CASE("catalog entries") {
    const CatalogEntry l3 = catalog("L3");
    CHECK(l3.algebra.dim() == 5);
    CHECK(form_signature(l3.algebra.metric) == FormSignature{2, 3, 0});

    CatalogParams p2;
    p2.t = Scalar(1);
    const CatalogEntry n2 = catalog("N2", p2);
    CHECK(n2.algebra.dim() == 6);
    CHECK(form_signature(n2.algebra.metric) == FormSignature{3, 3, 0});

    CatalogParams posc;
    posc.lambda = {Scalar(1), Scalar(1)};
    const CatalogEntry osc = catalog("osc", posc);
    CHECK(osc.algebra.dim() == 6);
    CHECK(form_signature(osc.algebra.metric) == FormSignature{1, 5, 0});

    CatalogParams minus;
    minus.plus_variant = false;
    const CatalogEntry n3m = catalog("N3", minus);
    CHECK(validate(n3m.algebra).ok());
    CHECK(n3m.algebra.structure != catalog("N3").algebra.structure);

    CHECK_THROWS_AS(catalog("unknown"), std::invalid_argument);
    CatalogParams bad;
    bad.t = Scalar(-1);
    CHECK_THROWS_AS(catalog("N2", bad), std::invalid_argument);
}

TEST_CASE("every catalog entry validates and obeys the signature rule") {
    std::vector<std::pair<std::string, CatalogParams>> entries = {
        {"osc", {}}, {"L2", {}}, {"L3", {}}, {"L2lambda", {}}, {"L3lambda", {}},
        {"N1", {}},  {"N2", {}}, {"N3", {}}, {"N4", {}},       {"N5", {}},
        {"N6", {}},  {"Tsu2", {}}, {"Tsl2", {}}, {"su2", {}},  {"sl2", {}},
        {"OscA0U1", {}}, {"DA0U1", {}}};
    {
        CatalogParams q;
        q.h_matrices = quaternion_su2_matrices();
        entries.emplace_back("D_abelian_simple", q);
    }
    for (const auto& [name, params] : entries) {
        INFO(name);
        const CatalogEntry entry = catalog(name, params);
        CHECK(validate(entry.algebra).ok());
        if (entry.extension) {
            const FormSignature sig_g = form_signature(entry.extension->g.metric);
            const FormSignature sig_d = form_signature(entry.algebra.metric);
            const std::size_t r = entry.extension->h.dim();
            CHECK(sig_d.neg == sig_g.neg + r);
            CHECK(sig_d.pos == sig_g.pos + r);
            CHECK(sig_d.zero == 0);
        }
    }
}

TEST_CASE("towers have a maximal isotropic central subspace") {
    NormalDerivationSet s;
    s.n = 4;
    s.m = 2;
    s.U = {block_rotation({Scalar(1), Scalar(2)}), block_rotation({Scalar(1), Scalar(1)})};
    s.Z = {Matrix(1, 1)};
    const MetricLieAlgebra t = build_tower(s);
    const auto z = center(t);
    RowSpan zspan(t.dim());
    for (const auto& v : z) zspan.add(v);
    for (std::size_t j = 0; j < s.m; ++j) {
        const Vector alpha = unit_vector(t.dim(), j);
        CHECK(zspan.contains(alpha));
        for (std::size_t k = 0; k < s.m; ++k) {
            CHECK(form_value(t.metric, alpha, unit_vector(t.dim(), k)).is_zero());
        }
    }
}

TEST_CASE("antisymmetric derivations of a tower annihilate the centre") {
    // independent nonzero U's; every antisymmetric derivation must kill the alphas
    NormalDerivationSet s;
    s.n = 4;
    s.m = 2;
    s.U = {block_rotation({Scalar(1), Scalar(1)}), block_rotation({Scalar(1), Scalar(-1)})};
    s.Z = {Matrix(1, 1)};
    const MetricLieAlgebra t = build_tower(s);
    const OperatorSpan ders = antisymmetric_derivations(t);
    CHECK(ders.dim() > 0);
    for (const Matrix& d : ders.basis()) {
        for (std::size_t j = 0; j < s.m; ++j) {
            CHECK(vector_is_zero(d.apply(unit_vector(t.dim(), j))));
        }
    }
}
