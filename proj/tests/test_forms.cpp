#include "magnetic/arith.hpp"
#include "magnetic/forms.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace magnetic;
using namespace magnetic::forms;

namespace {

QSeries from_vector(const std::vector<Rational>& v, long lead = 0) { return QSeries(lead, v); }

}  // namespace

TEST_CASE("arithmetic helpers") {
    auto s3 = arith::divisor_sigma_table(3, 12);
    for (long n = 1; n <= 12; ++n) CHECK(s3[n] == oracle::sigma(3, n));
    auto mu = arith::mobius_table(30);
    CHECK(mu[1] == 1);
    CHECK(mu[6] == 1);
    CHECK(mu[12] == 0);
    CHECK(mu[30] == -1);
    CHECK(arith::character(1, 5) == 1);
    CHECK(arith::character(-3, 3) == 0);
    CHECK(arith::character(-3, 2) == -1);
    CHECK(arith::character(-3, 7) == 1);
    CHECK(arith::kronecker_prime(5, 2) == -1);
    CHECK(arith::kronecker_prime(7, 2) == 1);
    CHECK(arith::legendre(2, 7) == 1);
    CHECK(arith::primes_up_to(20) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("Eisenstein series") {
    CHECK(eisenstein(2, 3).coefficient(1) == -24);
    CHECK(eisenstein(4, 3).coefficient(2) == 2160);
    CHECK(eisenstein(6, 3).coefficient(0) == 1);
    for (int k : {2, 4, 6}) CHECK(eisenstein(k, 300) == from_vector(oracle::eisenstein(k, 300)));
    CHECK_THROWS_AS(eisenstein(8, 3), UsageError);
}

TEST_CASE("discriminant") {
    QSeries d = discriminant(200);
    CHECK(d.coefficient(1) == 1);
    CHECK(d.coefficient(2) == -24);
    CHECK(d.coefficient(5) == 4830);
    CHECK(agree_on_window(d, discriminant_from_eisenstein(200)));
    CHECK(agree_on_window(d, from_vector(oracle::delta_over_q(199), 1)));
}

TEST_CASE("j, theta and E24") {
    QSeries j = j_invariant(5);
    CHECK(j.lead() == -1);
    CHECK(j.coefficient(-1) == 1);
    CHECK(j.coefficient(0) == 744);
    CHECK(j.coefficient(1) == 196884);
    CHECK(j.coefficient(2) == 21493760);

    QSeries th = theta(50);
    CHECK(th.coefficient(4) == 2);
    CHECK(th.coefficient(3) == 0);
    CHECK(th.coefficient(49) == 2);

    QSeries e = e24(100);
    CHECK(e.coefficient(3) == 4);
    CHECK(e.coefficient(2) == 0);
    CHECK(e24_divisor_sum(100) == e24_from_e2(100));
    for (long n = 1; n <= 100; n += 2) CHECK(e.coefficient(n) == oracle::sigma(1, n));
}

TEST_CASE("quasi-monomials") {
    CHECK(quasi_monomial(0, 1, 0, 20) == eisenstein(4, 20));
    QSeries lhs = quasi_monomial(0, 1, 0, 100) - quasi_monomial(0, -2, 2, 100);
    CHECK(agree_on_window(lhs, Rational(1728) * named_form(FormName::F4a, 100)));
    for (auto [a, b, c] : {std::tuple{0L, 0L, 0L}, {2L, -3L, 1L}, {1L, 4L, -2L}, {3L, -1L, -1L}})
        CHECK(quasi_monomial(a, b, c, 5).coefficient(0) == 1);
}

TEST_CASE("named forms") {
    QSeries f4a = named_form(FormName::F4a, 300);
    CHECK(f4a.coefficient(2) == -504);
    // Against an oracle product Delta * E4^-2.
    auto e4 = oracle::eisenstein(4, 299);
    auto e4sq = oracle::mul(e4, e4, 299);
    auto direct = oracle::mul(oracle::delta_over_q(299), oracle::inv(e4sq, 299), 299);
    CHECK(agree_on_window(f4a, from_vector(direct, 1)));

    CHECK(named_form(FormName::F6, 10).coefficient(1) == 1);

    auto t8 = j_quotient(FormName::Triple8);
    REQUIRE(t8.has_value());
    CHECK(t8->numerator.front() == Integer(-98280) * ipow(Integer(15), 6));

    for (auto n : {FormName::F4a, FormName::F4b, FormName::F6, FormName::LS8, FormName::Triple8})
        CHECK(integrality_check(named_form(n, 300)).ok);

    for (auto n : all_form_names()) CHECK(parse_form_name(symbol(n)) == n);
    CHECK(parse_form_name("j") == FormName::J);
    CHECK_FALSE(parse_form_name("E8").has_value());
}

TEST_CASE("differential operators") {
    long prec = 200;
    QSeries e4 = eisenstein(4, prec);
    CHECK(specific_D_apply(e4).is_zero());
    CHECK(hk_operator_apply(delta(e4), 5).is_zero());
    QSeries second = mul(e4, antiderivative(named_form(FormName::F4a, prec)));
    CHECK(specific_D_apply(second).is_zero());
    // A non-solution is caught.
    CHECK_FALSE(specific_D_apply(eisenstein(6, prec)).is_zero());
}

TEST_CASE("Ramanujan system") {
    long p = 300;
    QSeries e2 = eisenstein(2, p), e4 = eisenstein(4, p), e6 = eisenstein(6, p);
    CHECK((delta(e2) - frac(1, 12) * (mul(e2, e2) - e4)).is_zero());
    CHECK((delta(e4) - frac(1, 3) * (mul(e2, e4) - e6)).is_zero());
    CHECK((delta(e6) - frac(1, 2) * (mul(e2, e6) - mul(e4, e4))).is_zero());
}
