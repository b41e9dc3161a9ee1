#include "magnetic/forms.hpp"
#include "magnetic/halfint.hpp"
#include "magnetic/qseries.hpp"
#include "magnetic/series_json.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace magnetic;

namespace {

QSeries poly(long lead, std::initializer_list<long> c) { return QSeries::from_integers(lead, c); }

QSeries from_vector(const std::vector<Rational>& v, long lead = 0) { return QSeries(lead, v); }

}  // namespace

TEST_CASE("rationals stay canonical") {
    CHECK(frac(2, -4) == Rational(-1, 2));
    CHECK(frac(2, -4).get_den() == 2);
    CHECK(parse_rational("-6/4") == frac(-3, 2));
    CHECK_THROWS_AS(parse_rational("6/-4"), UsageError);
    CHECK(to_string(frac(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("abc"), UsageError);
}

TEST_CASE("window bookkeeping") {
    QSeries f = poly(-2, {1, 0, 3});
    CHECK(f.lead() == -2);
    CHECK(f.prec() == 0);
    CHECK(f.coefficient(0) == 3);
    CHECK_THROWS_AS(f.coefficient(1), PrecisionError);
    CHECK_THROWS_AS(f.coefficient(-3), PrecisionError);
    CHECK(f.coefficient_or_zero(-7) == 0);
    CHECK_THROWS_AS(f.coefficient_or_zero(1), PrecisionError);
    CHECK(f.valuation() == -2);
    CHECK_THROWS_AS(QSeries::zero(0, 3).valuation(), DomainError);
    CHECK_THROWS_AS(QSeries(0, {}), UsageError);
}

TEST_CASE("linear_combine examples") {
    QSeries a = poly(0, {1, 1});
    QSeries z = linear_combine({{1, a}, {-1, a}});
    CHECK(z.is_zero());
    CHECK(z.prec() == 1);

    QSeries e4 = forms::eisenstein(4, 10), e6 = forms::eisenstein(6, 10);
    QSeries d = linear_combine({{1, e4}, {-1, e6}});
    CHECK(d.coefficient(0) == 0);
    CHECK(d.coefficient(1) == 744);

    QSeries g0 = halfint::named_plus_form("g0", 20).series();
    QSeries g1 = halfint::named_plus_form("g1", 20).series();
    QSeries g2 = halfint::named_plus_form("g2", 20).series();
    QSeries f4a = linear_combine({{frac(7, 8), g0}, {frac(1, 768), g1}, {frac(-1, 768), g2}});
    CHECK(f4a.coefficient(1) == 1);

    CHECK_THROWS_AS(linear_combine(std::span<const ScaledTerm>{}), UsageError);

    QSeries lo = poly(-1, {5, 1, 1});
    QSeries hi = poly(0, {1, 1, 1, 1});
    QSeries s = lo + hi;
    CHECK(s.lead() == -1);
    CHECK(s.prec() == 1);
}

TEST_CASE("mul examples and precision contract") {
    QSeries p = mul(poly(0, {1, 1, 0, 0}), poly(0, {1, -1, 0, 0}));
    CHECK(p == poly(0, {1, 0, -1, 0}));

    QSeries th = forms::theta(10);
    CHECK(mul(th, pow_int(th, 4)).coefficient(0) == 1);

    QSeries d = forms::discriminant(30);
    QSeries one = mul(d, inv(d));
    for (long n = one.lead(); n <= one.prec(); ++n) CHECK(one.coefficient_or_zero(n) == (n == 0 ? 1 : 0));

    // Known through min(Pf + vg, Pg + vf).
    QSeries f = poly(1, {1, 2, 3});  // v=1, P=3
    QSeries g = poly(-2, {1, 0, 0, 0, 0, 0, 7});  // v=-2, P=4
    CHECK(mul(f, g).prec() == std::min(3 + -2, 4 + 1));
    CHECK_THROWS_AS(mul(QSeries::zero(0, 4), f), DomainError);
}

TEST_CASE("inv examples") {
    QSeries e4 = forms::eisenstein(4, 10);
    QSeries e4m2 = inv(mul(e4, e4));
    CHECK(e4m2.coefficient(0) == 1);
    CHECK(e4m2.coefficient(1) == -480);
    CHECK(e4m2.coefficient(2) == 168480);

    QSeries q = QSeries::monomial(1, 1, 6);
    QSeries qi = inv(q);
    CHECK(qi.lead() == -1);
    CHECK(qi.coefficient(-1) == 1);
    CHECK(qi.prec() == 6 - 2);

    QSeries e6 = forms::eisenstein(6, 25);
    QSeries back = inv(inv(e6));
    CHECK(agree_on_window(back, e6));
    CHECK_THROWS_AS(inv(QSeries::zero(0, 5)), DomainError);

    // Against the direct recursion.
    auto oa = oracle::inv(oracle::eisenstein(4, 40), 40);
    CHECK(agree_on_window(inv(forms::eisenstein(4, 40)), from_vector(oa)));
}

TEST_CASE("pow_int examples") {
    QSeries th = forms::theta(10);
    CHECK(pow_int(th, 2).coefficient(1) == 4);
    QSeries one = pow_int(forms::eisenstein(4, 8), 0);
    CHECK(one.coefficient(0) == 1);
    for (long n = 1; n <= one.prec(); ++n) CHECK(one.coefficient(n) == 0);
    QSeries d4 = substitute_power(forms::discriminant(10), 4);
    CHECK(pow_int(d4, -1).lead() == -4);
    CHECK(inv(d4).lead() == -4);
}

TEST_CASE("delta and antiderivative examples") {
    CHECK(delta(QSeries::constant(7, 5)).is_zero());
    QSeries e2 = forms::eisenstein(2, 60), e4 = forms::eisenstein(4, 60), e6 = forms::eisenstein(6, 60);
    CHECK(agree_on_window(delta(e2), frac(1, 12) * (mul(e2, e2) - e4)));
    CHECK(delta(e4).coefficient(1) == 240);
    CHECK((frac(1, 3) * (mul(e2, e4) - e6)).coefficient(1) == 240);

    CHECK(antiderivative(poly(1, {1, -504})) == poly(1, {1, -252}));
    CHECK(antiderivative(QSeries::zero(1, 5)).is_zero());
    auto ir = integrality_check(antiderivative(forms::named_form(forms::FormName::F6, 300), 2));
    CHECK(ir.ok);

    try {
        antiderivative(poly(0, {3, 1}));
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("substitute_power examples") {
    QSeries q = QSeries::monomial(1, 1, 3);
    QSeries q4 = substitute_power(q, 4);
    CHECK(q4.coefficient(4) == 1);
    CHECK(q4.coefficient_or_zero(1) == 0);
    CHECK(q4.prec() == 15);
    CHECK(substitute_power(forms::eisenstein(2, 3), 4).coefficient(4) == -24);
    QSeries f = poly(-2, {1, 2, 3, 4});
    CHECK(substitute_power(f, 1) == f);
    CHECK_THROWS_AS(substitute_power(f, 0), UsageError);
}

TEST_CASE("coefficient examples") {
    CHECK(forms::eisenstein(6, 3).coefficient(1) == -504);
    CHECK(halfint::named_plus_form("g1", 8).series().coefficient(4) == -196884);
    CHECK(halfint::named_plus_form("h0", 8).series().coefficient(4) == 26752);
}

TEST_CASE("integrality_check examples") {
    CHECK(integrality_check(poly(1, {1, -252})).ok);
    QSeries f4b = halfint::named_plus_form("f4b", 40).series();
    auto r = integrality_check(f4b);
    REQUIRE_FALSE(r.ok);
    CHECK(*r.exponent == -4);
    CHECK(r.denominator == 108);
    CHECK(integrality_check(f4b, 5).ok);

    // Oracle scan of every denominator: only 2 and 3 occur.
    for (long n = f4b.lead(); n <= f4b.prec(); ++n) {
        Integer den = f4b.coefficient(n).get_den();
        while (den % 2 == 0) den /= 2;
        while (den % 3 == 0) den /= 3;
        CHECK(den == 1);
    }
}

TEST_CASE("random property checks") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 40; ++t) {
        long lead = static_cast<long>(rng() % 7) - 3;
        QSeries f = oracle::random_series(rng, lead, lead + 30, 20);
        QSeries g = oracle::random_series(rng, static_cast<long>(rng() % 5) - 2, 25, 20);
        QSeries h = oracle::random_series(rng, 0, 20, 20);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;

        // delta(antiderivative(f)) = f once the constant term is removed.
        std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
        if (f.lead() <= 0) c[-f.lead()] = 0;
        QSeries f0(f.lead(), c);
        CHECK(delta(antiderivative(f0)) == f0);

        CHECK(agree_on_window(mul(f, g), mul(g, f)));
        CHECK(mul(f, g).prec() == mul(g, f).prec());
        CHECK(agree_on_window(mul(mul(f, g), h), mul(f, mul(g, h))));

        QSeries one = mul(f, inv(f));
        for (long n = one.lead(); n <= one.prec(); ++n) CHECK(one.coefficient_or_zero(n) == (n == 0 ? 1 : 0));

        CHECK(substitute_power(f, 6) == substitute_power(substitute_power(f, 2), 3));

        // Shrinking the inputs never changes what the output still knows.
        QSeries full = mul(f, inv(g));
        QSeries part = mul(f.truncated(f.prec() - 7), inv(g.truncated(g.prec() - 5)));
        CHECK(part.prec() <= full.prec());
        CHECK(agree_on_window(part, full));

        // Integer inputs stay integral under +, *, delta.
        CHECK(integrality_check(f + g).ok);
        CHECK(integrality_check(mul(f, g)).ok);
        CHECK(integrality_check(delta(f)).ok);
    }
}

TEST_CASE("fast product agrees with the schoolbook oracle") {
    std::mt19937 rng(99);
    for (long n : {10L, 200L, 1500L}) {
        QSeries f = oracle::random_series(rng, 0, n, 1000000);
        QSeries g = oracle::random_series(rng, 0, n, 1000000);
        std::vector<Rational> a(f.coefficients().begin(), f.coefficients().end());
        std::vector<Rational> b(g.coefficients().begin(), g.coefficients().end());
        if (f.is_zero() || g.is_zero()) continue;
        QSeries fg = mul(f, g);
        auto direct = oracle::mul(a, b, fg.prec());
        CHECK(agree_on_window(fg, from_vector(direct)));
    }
    // Mixed signs, rationals and huge coefficients.
    QSeries j = forms::j_invariant(300);
    QSeries e = forms::eisenstein(6, 300) * frac(1, 7);
    auto direct = oracle::mul(std::vector<Rational>(j.coefficients().begin(), j.coefficients().end()),
                              std::vector<Rational>(e.coefficients().begin(), e.coefficients().end()), 300);
    CHECK(agree_on_window(mul(j, e), from_vector(direct, -1)));
}

TEST_CASE("JSON encoding round trip") {
    QSeries f = QSeries(-2, {frac(1, 3), 0, Rational(-5), frac(7, 2)});
    Json j = to_json(f);
    CHECK(j.dump() == R"({"lead":-2,"prec":1,"coeffs":["1/3","0","-5","7/2"]})");
    CHECK(series_from_json(j) == f);
    CHECK(decode_series(encode_series(f)) == f);
    CHECK_THROWS_AS(decode_series(R"({"lead":0,"prec":3,"coeffs":["1"]})"), UsageError);
    CHECK_THROWS_AS(decode_series(R"({"lead":0,"prec":0,"coeffs":[1]})"), UsageError);
}
