#include "magnetic/arith.hpp"
#include "magnetic/forms.hpp"
#include "magnetic/halfint.hpp"
#include "magnetic/lifts.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace magnetic;
using namespace magnetic::lifts;

TEST_CASE("discriminant by parity") {
    CHECK(discriminant_for(2) == 1);
    CHECK(discriminant_for(3) == -3);
}

TEST_CASE("lift of f4a") {
    halfint::PlusForm f4a = halfint::named_plus_form("f4a", 10000);
    QSeries big = psi(f4a);
    CHECK(big.lead() == 1);
    CHECK(big.prec() == 100);
    CHECK(big.coefficient(1) == 1);
    CHECK(big.coefficient(2) == f4a.series().coefficient(4) + 2 * f4a.series().coefficient(1));
    CHECK(big.coefficient(2) == -504);
    CHECK(agree_on_window(big, forms::named_form(forms::FormName::F4a, 100)));
}

TEST_CASE("lift of f4b and f6half") {
    CHECK(agree_on_window(psi(halfint::named_plus_form("f4b", 2500)), forms::named_form(forms::FormName::F4b, 50)));
    QSeries f6 = psi(halfint::named_plus_form("f6half", 300));
    CHECK(f6.prec() == 10);
    CHECK(agree_on_window(f6, forms::named_form(forms::FormName::F6, 10)));
}

TEST_CASE("reverse map and square part") {
    CHECK(phi(QSeries::zero(1, 20), 2).is_zero());

    std::mt19937 rng(17);
    for (int t = 0; t < 20; ++t) {
        for (long k : {2L, 3L}) {
            QSeries f = oracle::random_series(rng, -6, 300, 40);
            CHECK(agree_on_window(phi(psi(f, k), k), square_part(f, k)));
            CHECK(psi(f, k) == psi(square_part(f, k), k));
        }
    }

    CHECK(integrality_check(square_part(halfint::named_plus_form("f4a", 400).series(), 2)).ok);
    CHECK(integrality_check(square_part(halfint::named_plus_form("f4b", 400).series(), 2)).ok);
    QSeries nosq = QSeries::from_integers(2, {1, 1, 0, 0, 0, 1, 1});
    CHECK(square_part(nosq, 2).is_zero());
    QSeries k3 = square_part(oracle::random_series(rng, 0, 50, 5), 3);
    for (long n = k3.lead(); n <= k3.prec(); ++n)
        if (k3.coefficient(n) != 0) {
            CHECK(n % 3 == 0);
            CHECK(arith::is_square(n / 3));
        }
}

TEST_CASE("reverse map of a Hecke image") {
    QSeries t3 = halfint::big_T_p(forms::discriminant(300), 12, 3);
    QSeries img = phi(t3, 6);
    CHECK_FALSE(img.is_zero());
    for (long n = img.lead(); n <= img.prec(); ++n) {
        const Rational& c = img.coefficient(n);
        if (c == 0) continue;
        CHECK(arith::is_square(n));
        CHECK(is_integral(c));
        CHECK(c.get_num() % 3 == 0);
    }
}

TEST_CASE("strong magnetic congruences") {
    QSeries f4a = forms::named_form(forms::FormName::F4a, 1000);
    auto r = strong_magnetic_congruence_check(f4a, 5, 2, 1);
    CHECK(r.ok);
    CHECK(r.checked_through == 1000);
    CHECK(strong_magnetic_congruence_check(forms::named_form(forms::FormName::F6, 1000), 5, 1, 2).ok);
    // tau(n) = n sigma_9(n) mod 5, so Delta passes at p = 5 and fails at p = 11.
    CHECK(strong_magnetic_congruence_check(forms::discriminant(100), 5, 1, 1).ok);
    auto bad = strong_magnetic_congruence_check(forms::discriminant(100), 11, 1, 1);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failing_exponent.has_value());
    CHECK(*bad.failing_exponent == 11);
    auto pre = strong_magnetic_congruence_check(frac(1, 7) * f4a, 5, 1, 1);
    CHECK_FALSE(pre.ok);
    CHECK(pre.precondition_failed);
}

TEST_CASE("Hecke equivariance of the lift") {
    halfint::PlusForm f4a = halfint::named_plus_form("f4a", 5000);
    QSeries big = psi(f4a);
    for (long p : {3L, 5L}) {
        QSeries lhs = halfint::big_T_p(big, 4, p);
        QSeries rhs = psi(halfint::T_p2(f4a, p));
        CHECK(agree_on_window(lhs, rhs));
    }
}
