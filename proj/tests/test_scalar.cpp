#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liespin/scalar.hpp"

using namespace liespin;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    const auto r = [&] { return Rational(num(rng), den(rng)); };
    return Scalar(r(), r(), r(), r());
}

}  // namespace

TEST_CASE("defining relations of Q(i, sqrt2)") {
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::i_sqrt2() * Scalar::i_sqrt2() == Scalar(-2));
    CHECK(Scalar::sqrt2() * Scalar::i() == Scalar::i_sqrt2());
}

TEST_CASE("inverses") {
    const Scalar golden(1, 1, 0, 0);  // 1 + sqrt2
    CHECK(golden.inverse() == Scalar(-1, 1, 0, 0));
    CHECK(golden * golden.inverse() == Scalar(1));

    const Scalar z(1, 0, 0, 1);  // 1 + i sqrt2
    CHECK(z * z.conj() == Scalar(3));
    CHECK(z * z.inverse() == Scalar(1));

    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("conjugation and the sqrt2 involution are ring homomorphisms") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Scalar x = random_scalar(rng);
        const Scalar y = random_scalar(rng);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).sqrt2_involution() == x.sqrt2_involution() * y.sqrt2_involution());
        CHECK((x + y).sqrt2_involution() == x.sqrt2_involution() + y.sqrt2_involution());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 1000; ++iter) {
        const Scalar x = random_scalar(rng);
        const Scalar y = random_scalar(rng);
        const Scalar z = random_scalar(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    }
}

TEST_CASE("exact sign of real values") {
    CHECK(Scalar(0).sign() == 0);
    CHECK(Scalar(1, -1, 0, 0).sign() < 0);   // 1 - sqrt2 < 0
    CHECK(Scalar(3, -2, 0, 0).sign() > 0);   // 3 - 2 sqrt2 > 0
    CHECK(Scalar(-3, 2, 0, 0).sign() < 0);
    CHECK(Scalar(0, Rational(1, 100), 0, 0).sign() > 0);
    CHECK_THROWS_AS(Scalar::i().sign(), std::domain_error);
}

TEST_CASE("square roots in Q(sqrt2)") {
    CHECK(Scalar::sqrt_real(Scalar(2)) == Scalar::sqrt2());
    CHECK(Scalar::sqrt_real(Scalar(Rational(9, 4))) == Scalar(Rational(3, 2)));
    // 3 + 2 sqrt2 = (1 + sqrt2)^2
    CHECK(Scalar::sqrt_real(Scalar(3, 2, 0, 0)) == Scalar(1, 1, 0, 0));
    CHECK(Scalar::sqrt_real(Scalar(Rational(1, 2))) == Scalar::inv_sqrt2());
    CHECK_FALSE(Scalar::sqrt_real(Scalar(3)).has_value());
    CHECK_FALSE(Scalar::sqrt_real(Scalar(0, 1, 0, 0)).has_value());  // sqrt2 itself
    CHECK_FALSE(Scalar::sqrt_real(Scalar(-4)).has_value());

    std::mt19937 rng(13);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar s(Rational(num(rng)), Rational(num(rng)), 0, 0);
        const Scalar sq = s * s;
        const auto root = Scalar::sqrt_real(sq);
        REQUIRE(root.has_value());
        CHECK(*root * *root == sq);
    }
}

TEST_CASE("string round trips") {
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-12") == Rational(-12));
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("2x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);

    const Scalar s(Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7));
    CHECK(Scalar::from_strings(s.to_strings()) == s);
    CHECK(Scalar(1, -1, 0, 0).str() == "1 - sqrt2");
    CHECK(Scalar(0, 0, 1, 0).str() == "i");
    CHECK(Scalar(0).str() == "0");
}
