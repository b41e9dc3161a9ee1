#include "magnetic/forms.hpp"
#include "magnetic/quasimod.hpp"

#include <doctest.h>

#include <random>

using namespace magnetic;
using namespace magnetic::quasimod;

namespace {

QuasiElement f(long a, long b, long c, const Rational& x = 1) { return QuasiElement::monomial(a, b, c, x); }

QuasiElement random_element(std::mt19937& rng, long weight) {
    QuasiElement v(weight);
    std::uniform_int_distribution<long> coef(-5, 5), ab(0, 3), bb(-3, 3);
    for (int t = 0; t < 3; ++t) {
        long a = ab(rng), b = bb(rng);
        long rest = weight - 2 * a - 4 * b;
        if (rest % 6 != 0) continue;
        long x = coef(rng);
        if (x != 0) v = v + f(a, b, rest / 6, x);
    }
    return v;
}

}  // namespace

TEST_CASE("derivation on monomials") {
    CHECK(delta_element(f(1, 0, 0)) == f(2, 0, 0, frac(1, 12)) - f(0, 1, 0, frac(1, 12)));
    CHECK(delta_element(QuasiElement(4)).is_zero());
    CHECK(delta_element(QuasiElement(4)).weight() == 6);
}

TEST_CASE("expansion is a homomorphism for delta") {
    std::mt19937 rng(7);
    int tested = 0;
    while (tested < 200) {
        long weight = 2 * static_cast<long>(rng() % 4 + 1);
        QuasiElement v = random_element(rng, weight);
        if (v.is_zero()) continue;
        ++tested;
        CHECK(agree_on_window(expand(delta_element(v), 200), delta(expand(v, 200))));
        CHECK(expand(v, 5).coefficient_or_zero(0) == v.coefficient_sum());
        CHECK(is_cuspidal(delta_element(v)));
    }
}

TEST_CASE("expansion examples") {
    CHECK(expand(f(0, 1, 0), 20) == forms::eisenstein(4, 20));
    QSeries g = expand(frac(1, 1728) * (f(0, 1, 0) - f(0, -2, 2)), 200);
    CHECK(agree_on_window(g, forms::named_form(forms::FormName::F4a, 200)));
    CHECK(is_cuspidal(f(0, 1, 0) - f(0, -2, 2)));
    CHECK_FALSE(is_cuspidal(f(0, 1, 0)));
}

TEST_CASE("text syntax round trip") {
    QuasiElement v = f(1, -1, 1, frac(3, 2)) - f(0, 1, 0);
    CHECK(parse_element(to_string(v)) == v);
    CHECK(parse_element("3/2*f(1,-1,1) - f(0,1,0)") == v);
    CHECK(parse_element("0", 4).is_zero());
    CHECK_THROWS_AS(parse_element("f(1,0)"), UsageError);
    CHECK_THROWS_AS(parse_element("f(1,0,0) + f(0,1,0)"), UsageError);
}

TEST_CASE("weight 4 reduction") {
    auto c1 = reduce_weight4(f(2, 0, 0) - f(0, 1, 0));
    CHECK(c1.mu == 0);
    for (const auto& [name, x] : c1.gens) CHECK(x == 0);
    CHECK(c1.delta_part == f(1, 0, 0, 12));
    CHECK(verify_certificate(c1, 300).ok());

    auto c2 = reduce_weight4(f(1, 2, -1) - f(0, 1, 0));
    CHECK(c2.mu == 0);
    CHECK(c2.gens["G_b"] == 1);
    CHECK(c2.gens["G_a"] == 0);
    CHECK(c2.delta_part.is_zero());

    // From -(1/3) f(0,-2,2) = -delta f(0,-1,1) + (1/6) f(1,-1,1) - (1/2) f(0,1,0):
    // f(1,-1,1) - f(0,1,0) = -2 G_a + 6 delta f(0,-1,1).
    auto c3 = reduce_weight4(f(1, -1, 1) - f(0, 1, 0));
    CHECK(c3.mu == 0);
    CHECK(c3.gens["G_a"] == -2);
    CHECK(c3.gens["G_b"] == 0);
    CHECK(c3.delta_part == f(0, -1, 1, 6));
    CHECK(verify_certificate(c3, 300).ok());

    CHECK(reduce_weight4(f(0, 1, 0)).mu == 1);
    CHECK_THROWS_AS(reduce_weight4(f(3, 1, -1)), UsageError);
    CHECK_THROWS_AS(reduce_weight4(f(0, 0, 1)), UsageError);
}

TEST_CASE("weight 6 reduction") {
    auto c1 = reduce_weight6(f(3, 0, 0) - f(1, 1, 0));
    CHECK(c1.mu == 0);
    CHECK(c1.gens["F6"] == 0);
    CHECK(c1.delta_part == f(2, 0, 0, 6));

    auto c2 = reduce_weight6(f(2, -1, 1) - f(0, 0, 1));
    CHECK(c2.mu == 0);
    // Both expansions give -4608.
    CHECK(c2.gens["F6"] == -4608);
    CHECK(c2.delta_part == f(1, -1, 1, 4) - f(0, -2, 2, 4) + f(0, 1, 0, 6));
    CHECK(verify_certificate(c2, 300).ok());

    auto c0 = reduce_weight6(QuasiElement(6));
    CHECK(c0.mu == 0);
    CHECK(c0.delta_part.is_zero());
    for (const auto& [name, x] : c0.gens) CHECK(x == 0);

    CHECK_THROWS_AS(reduce_weight6(f(0, 3, -1)), UsageError);
    CHECK_THROWS_AS(reduce_weight6(f(5, -1, 0)), UsageError);
}

TEST_CASE("certificate verification") {
    auto cert = reduce_weight4(f(2, 0, 0) - f(0, 1, 0));
    CHECK(verify_certificate(cert, 300).ok());
    auto tampered = cert;
    tampered.mu += 1;
    auto r = verify_certificate(tampered, 300);
    CHECK_FALSE(r.ok());
    CHECK(r.status == CertificateStatus::Mismatch);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(*r.first_mismatch == 0);
    CHECK(cert.rhs() == cert.input);
}

TEST_CASE("cuspidal weight 4 elements have no anchor coordinate") {
    QuasiElement v = f(1, 2, -1, 3) - f(0, -2, 2, 5) + f(2, 3, -2, 7) - f(0, 1, 0, 5);
    REQUIRE(is_cuspidal(v));
    auto cert = reduce_weight4(v);
    CHECK(cert.mu == 0);
    CHECK(verify_certificate(cert, 300).ok());
}

TEST_CASE("magnetic checks") {
    QSeries f4a = forms::named_form(forms::FormName::F4a, 1000);
    CHECK(magnetic_check(Rational(1728) * f4a).ok);

    // E2^5 (delta E4)/E4 is not magnetic; E2 (delta E6)/E6 is.
    QuasiElement de4 = delta_element(f(0, 1, 0));
    QuasiElement bad(14);
    for (const auto& [m, c] : de4.terms()) bad = bad + f(m.a + 5, m.b - 1, m.c, c);
    CHECK_FALSE(magnetic_check(bad, 300).ok);

    QuasiElement de6 = delta_element(f(0, 0, 1));
    QuasiElement good(10);
    for (const auto& [m, c] : de6.terms()) good = good + f(m.a + 1, m.b, m.c - 1, c);
    CHECK(magnetic_check(good, 1000).ok);

    CHECK_THROWS_AS(magnetic_check(f(0, 1, 0), 10), DomainError);
}
