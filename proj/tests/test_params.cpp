#include <doctest.h>

#include "ado/params.hpp"
#include "ado/rational.hpp"

using namespace ado;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(5, 2) - 1 == Rational(3, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
    CHECK(Rational::parse("89/11") == Rational(89, 11));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational(3, 2).value() == doctest::Approx(1.5));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("small-k parameter table") {
    // k' = floor(k/3); the sampling exponent follows the residue of k mod 3
    auto p3 = select_params_small_k(3);
    CHECK(p3.k_prime == 1);
    CHECK(p3.i == Rational(5, 2));
    CHECK(p3.certificate() == 5);

    auto p6 = select_params_small_k(6);
    CHECK(p6.k_prime == 2);
    CHECK(p6.i == Rational(4));
    CHECK(p6.certificate() == 11);

    auto p7 = select_params_small_k(7);
    CHECK(p7.k_prime == 2);
    CHECK(p7.i == Rational(19, 4));
    CHECK(p7.certificate() == 11);

    auto p8 = select_params_small_k(8);
    CHECK(p8.k_prime == 2);
    CHECK(p8.i == Rational(11, 2));
    CHECK(p8.certificate() == 11);

    CHECK_THROWS_AS(select_params_small_k(2), std::invalid_argument);
}

TEST_CASE("small-k invariants hold across a k sweep") {
    for (std::uint32_t k = 3; k <= 60; ++k) {
        auto p = select_params_small_k(k);
        CHECK(p.i.positive());
        CHECK(p.i <= Rational(k));
        CHECK(p.certificate() <= 2ull * k - 1);
    }
}

TEST_CASE("near-linear parameters, exact-constant mode") {
    auto p3 = select_params_near_linear(3);
    CHECK(p3.kappa == 1);
    CHECK(p3.i == Rational(2));
    CHECK(p3.k_prime == 1);
    CHECK(p3.feasible);
    CHECK(p3.certificate() == 5);

    auto p6 = select_params_near_linear(6);
    CHECK(p6.kappa == 2);
    CHECK(p6.i == Rational(2));
    CHECK(p6.k_prime == 1);
    CHECK(p6.feasible);
    CHECK(p6.certificate() == 11);

    auto p100 = select_params_near_linear(100);
    CHECK(p100.kappa == 11);
    CHECK(p100.i == Rational(89, 11));
    CHECK(p100.k_prime == 2);
    CHECK(p100.feasible);
    CHECK(p100.certificate() == 191);

    // the handful of small k where no level/spanner split exists
    for (std::uint32_t k : {1u, 2u, 4u, 5u, 8u})
        CHECK_FALSE(select_params_near_linear(k).feasible);
}

TEST_CASE("near-linear parameters, large-k mode") {
    auto p100 = select_params_near_linear(100, NearLinearMode::kLargeK);
    CHECK(p100.kappa == 5);
    CHECK(p100.i == Rational(19));
    CHECK(p100.k_prime == 4);
    CHECK(p100.feasible);
    CHECK(p100.certificate() == 191);

    auto p6 = select_params_near_linear(6, NearLinearMode::kLargeK);
    CHECK(p6.kappa == 1);
    CHECK(p6.k_prime == 2);
    CHECK(p6.feasible);
    CHECK(p6.certificate() == 11);
}

TEST_CASE("near-linear certificate never exceeds the requested stretch") {
    for (std::uint32_t k = 3; k <= 400; ++k) {
        for (auto mode : {NearLinearMode::kPaperC, NearLinearMode::kLargeK}) {
            auto p = select_params_near_linear(k, mode);
            if (!p.feasible) continue;
            CHECK(p.certificate() <= 2ull * k - 1);
            CHECK(p.i.positive());
            CHECK(p.k_prime >= 1);
        }
    }
    // from k=9 on, the exact-constant mode always succeeds
    for (std::uint32_t k = 9; k <= 400; ++k)
        CHECK(select_params_near_linear(k).feasible);
}
