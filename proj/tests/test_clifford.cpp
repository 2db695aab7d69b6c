#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liespin/catalog.hpp"
#include "liespin/clifford.hpp"

using namespace liespin;

namespace {

Matrix random_so_kappa(std::mt19937& rng, const std::vector<int>& kappa) {
    std::uniform_int_distribution<int> entry(-2, 2);
    const std::size_t n = kappa.size();
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            w(i, j) = Scalar(entry(rng));
            w(j, i) = -w(i, j);
        }
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) k(i, i) = Scalar(kappa[i]);
    return k * w;
}

}  // namespace

TEST_CASE("generator shapes in low signatures") {
    const CliffordRep euclid2 = clifford_generators(0, 2);
    CHECK(euclid2.gamma[0] == cliff::u_factor());
    CHECK(euclid2.gamma[1] == cliff::v_factor());
    CHECK(euclid2.gamma[0] * euclid2.gamma[0] == Matrix::identity(2) * Scalar(-1));

    const CliffordRep lorentz = clifford_generators(1, 1);
    CHECK(lorentz.gamma[0] == cliff::u_factor() * Scalar::i());
    CHECK(lorentz.gamma[0] * lorentz.gamma[0] == Matrix::identity(2));
}

TEST_CASE("anticommutator tables") {
    for (std::size_t total = 1; total <= 6; ++total) {
        for (std::size_t neg = 0; neg <= total; ++neg) {
            INFO("signature (" << neg << "," << total - neg << ")");
            CHECK(clifford_relations_hold(clifford_generators(neg, total - neg)));
        }
    }
    // mixed orderings of the signs
    CHECK(clifford_relations_hold(clifford_from_signs({-1, 1, -1, 1})));
    CHECK(clifford_relations_hold(clifford_from_signs({1, -1, -1, 1, -1})));
}

TEST_CASE("spin lift") {
    const CliffordRep rep = clifford_generators(0, 2);
    CHECK(spin_lift(rep, Matrix(2, 2)).is_zero());

    // rotation: lift((0,-1;1,0)) = (1/2) gamma_1 gamma_2
    CHECK(spin_lift(rep, block_rotation({Scalar(1)})) ==
          rep.gamma[0] * rep.gamma[1] * Scalar(Rational(1, 2)));

    Matrix sym(2, 2);
    sym(0, 1) = Scalar(1);
    sym(1, 0) = Scalar(1);
    CHECK_THROWS_AS(spin_lift(rep, sym), std::invalid_argument);
}

TEST_CASE("lift satisfies the defining commutator identity") {
    std::mt19937 rng(43);
    for (std::size_t total = 2; total <= 6; ++total) {
        for (std::size_t neg = 0; neg <= total; ++neg) {
            const CliffordRep rep = clifford_generators(neg, total - neg);
            for (int iter = 0; iter < 10; ++iter) {
                const Matrix a = random_so_kappa(rng, rep.kappa);
                const Matrix lift = spin_lift(rep, a);
                for (std::size_t v = 0; v < total; ++v) {
                    CHECK(commutator(lift, rep.gamma[v]) ==
                          clifford_vector(rep, a.column(v)));
                }
            }
        }
    }
}

TEST_CASE("annihilator dimensions") {
    CHECK(annihilator_dim(clifford_generators(1, 3), {}) == 4);

    // su(2) acting on R^4 by unit quaternions: two invariant spinors
    CHECK(annihilator_dim(clifford_generators(0, 4), quaternion_su2_matrices()) == 2);

    // the plane rotation lifts to (1/2) gamma_1 gamma_2, which is invertible
    const Matrix a = block_rotation({Scalar(1)});
    CHECK(annihilator_dim(clifford_generators(0, 2), {a}) == 0);
    // its square -id is not antisymmetric and is rejected as input
    CHECK_THROWS_AS(annihilator_dim(clifford_generators(0, 2), {a * a}), std::invalid_argument);
}

TEST_CASE("spinor basis enumeration") {
    CHECK(spinor_index({1, 1}) == 0);
    CHECK(spinor_index({-1, 1}) == 1);   // eps_1 = -1 flips the low bit
    CHECK(spinor_index({1, -1}) == 2);
    CHECK(spinor_index({-1, -1}) == 3);
    for (std::size_t idx = 0; idx < 8; ++idx) CHECK(spinor_index(spinor_signs(idx, 3)) == idx);

    // columns of the u-basis matrix are orthonormal for the hermitian product
    const Matrix w = spinor_u_basis(2);
    const Matrix gram = w.conj().transpose() * w;
    CHECK(gram == Matrix::identity(4));
}
