#include "magnetic/rational.hpp"

#include "magnetic/errors.hpp"

#include <cctype>

namespace magnetic {

namespace {

bool valid_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer integer_from(std::string_view s) {
    if (!valid_integer_text(s)) throw UsageError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) { return integer_from(text); }

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(integer_from(text));
    Integer num = integer_from(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw UsageError("sign in denominator: '" + std::string(text) + "'");
    Integer den = integer_from(den_text);
    if (den == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational frac(long n, long d) {
    if (d == 0) throw DomainError("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

long valuation(const Integer& z, unsigned long p) {
    if (z == 0) throw DomainError("valuation of zero");
    if (p < 2) throw UsageError("valuation needs a prime");
    Integer t = z;
    long v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long valuation(const Rational& r, unsigned long p) {
    if (r == 0) throw DomainError("valuation of zero");
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

Integer lcm_of_denominators(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values)
        if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow(const Rational& base, long e) {
    if (e >= 0) return Rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
    if (base == 0) throw DomainError("negative power of zero");
    Rational r(ipow(base.get_den(), -e), ipow(base.get_num(), -e));
    r.canonicalize();
    return r;
}

}  // namespace magnetic
