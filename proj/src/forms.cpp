#include "magnetic/forms.hpp"

#include "magnetic/arith.hpp"
#include "magnetic/memo.hpp"
#include "magnetic/precision.hpp"

#include <algorithm>
#include <stdexcept>

namespace magnetic::forms {

namespace {

struct NameEntry {
    FormName name;
    std::string_view symbol;
};

constexpr NameEntry kNames[] = {
    {FormName::E2, "E2"},       {FormName::E4, "E4"},           {FormName::E6, "E6"},
    {FormName::Delta, "Delta"}, {FormName::J, "j"},             {FormName::Theta, "theta"},
    {FormName::E24, "E24"},     {FormName::F4a, "F4a"},         {FormName::F4b, "F4b"},
    {FormName::F6, "F6"},       {FormName::LS8, "LS8"},         {FormName::Triple8, "Triple8"},
    {FormName::HK_num1, "HK_num1"}, {FormName::HK_num2, "HK_num2"},
};

SeriesMemo& memo() {
    static SeriesMemo m;
    return m;
}

QSeries euler_product(long prec) {
    // prod (1 - q^m) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
    auto out = QSeries::zero(0, prec);
    std::vector<Rational> c(prec + 1, Rational(0));
    for (long k = 0;; ++k) {
        long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
        if (e1 > prec) break;
        int s = (k % 2 == 0) ? 1 : -1;
        c[e1] = s;
        if (k > 0 && e2 <= prec) c[e2] = s;
    }
    return QSeries(0, std::move(c));
}

void check_prec(long prec, long minimum, const char* what) {
    if (prec < minimum)
        throw UsageError(std::string(what) + " needs prec >= " + std::to_string(minimum));
}

QSeries homogeneous(const std::vector<Integer>& coeffs, long degree, const std::vector<QSeries>& a_pow,
                    const std::vector<QSeries>& b_pow) {
    // sum_i c_i A^i B^(degree - i)
    std::vector<QSeries> parts;
    std::vector<Rational> scales;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        parts.push_back(mul(a_pow[i], b_pow[degree - i]));
        scales.emplace_back(coeffs[i]);
    }
    if (parts.empty()) throw UsageError("j-quotient with a zero polynomial");
    std::vector<ScaledTerm> terms;
    for (std::size_t i = 0; i < parts.size(); ++i) terms.push_back({scales[i], parts[i]});
    return linear_combine(terms);
}

long degree_of(const std::vector<Integer>& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    throw UsageError("j-quotient with a zero polynomial");
}

std::vector<Integer> ints(std::initializer_list<const char*> digits) {
    std::vector<Integer> v;
    for (const char* d : digits) v.emplace_back(d, 10);
    return v;
}

}  // namespace

std::string_view symbol(FormName name) {
    for (const auto& e : kNames)
        if (e.name == name) return e.symbol;
    return "?";
}

std::optional<FormName> parse_form_name(std::string_view text) {
    for (const auto& e : kNames)
        if (e.symbol == text) return e.name;
    if (text == "J") return FormName::J;
    return std::nullopt;
}

const std::vector<FormName>& all_form_names() {
    static const std::vector<FormName> names = [] {
        std::vector<FormName> v;
        for (const auto& e : kNames) v.push_back(e.name);
        return v;
    }();
    return names;
}

QSeries eisenstein(int k, long prec) {
    check_prec(prec, 0, "eisenstein");
    long scale;
    switch (k) {
        case 2: scale = -24; break;
        case 4: scale = 240; break;
        case 6: scale = -504; break;
        default: throw UsageError("eisenstein supports k = 2, 4, 6 only");
    }
    auto sigma = arith::divisor_sigma_table(k - 1, prec);
    std::vector<Rational> c(prec + 1);
    c[0] = 1;
    for (long n = 1; n <= prec; ++n) c[n] = Rational(sigma[n] * scale);
    return QSeries(0, std::move(c));
}

QSeries discriminant(long prec) {
    check_prec(prec, 1, "discriminant");
    QSeries p = euler_product(prec - 1);
    QSeries p2 = mul(p, p);
    QSeries p4 = mul(p2, p2);
    QSeries p8 = mul(p4, p4);
    QSeries p16 = mul(p8, p8);
    QSeries p24 = mul(p16, p8);
    return shift(p24, 1).with_lead(0);
}

QSeries discriminant_from_eisenstein(long prec) {
    check_prec(prec, 1, "discriminant");
    QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    QSeries d = linear_combine({{frac(1, 1728), pow_int(e4, 3)}, {frac(-1, 1728), pow_int(e6, 2)}});
    return d;
}

QSeries j_invariant(long prec) {
    check_prec(prec, -1, "j_invariant");
    QSeries e4 = cached_eisenstein(4, prec + 1);
    QSeries d = cached_discriminant(prec + 2);
    return mul(pow_int(e4, 3), inv(d)).truncated(prec);
}

QSeries theta(long prec) {
    check_prec(prec, 0, "theta");
    std::vector<Rational> c(prec + 1, Rational(0));
    c[0] = 1;
    for (long n = 1; n * n <= prec; ++n) c[n * n] = 2;
    return QSeries(0, std::move(c));
}

QSeries e24_divisor_sum(long prec) {
    check_prec(prec, 0, "e24");
    auto sigma = arith::divisor_sigma_table(1, prec);
    std::vector<Rational> c(prec + 1, Rational(0));
    for (long n = 1; n <= prec; n += 2) c[n] = Rational(sigma[n]);
    return QSeries(0, std::move(c));
}

QSeries e24_from_e2(long prec) {
    check_prec(prec, 0, "e24");
    QSeries e2 = cached_eisenstein(2, prec);
    QSeries e2_2 = substitute_power(cached_eisenstein(2, prec / 2), 2).truncated(prec);
    QSeries e2_4 = substitute_power(cached_eisenstein(2, prec / 4), 4).truncated(prec);
    return linear_combine({{frac(-1, 24), e2}, {frac(3, 24), e2_2}, {frac(-2, 24), e2_4}});
}

QSeries e24(long prec) {
    QSeries a = e24_divisor_sum(prec);
    QSeries b = e24_from_e2(prec);
    if (!(a == b)) throw std::logic_error("E24 constructions disagree");
    return a;
}

QSeries quasi_monomial(long a, long b, long c, long prec) {
    if (a < 0) throw UsageError("quasi_monomial needs a >= 0");
    check_prec(prec, 0, "quasi_monomial");
    QSeries out = QSeries::constant(1, prec);
    if (a) out = mul(out, pow_int(cached_eisenstein(2, prec), a));
    if (b) out = mul(out, pow_int(cached_eisenstein(4, prec), b));
    if (c) out = mul(out, pow_int(cached_eisenstein(6, prec), c));
    return out;
}

QSeries expand(const JQuotient& form, long prec) {
    long deg_n = degree_of(form.numerator);
    long deg_d = degree_of(form.denominator);
    if (form.power < 0) throw UsageError("j-quotient needs a non-negative denominator power");
    if (form.e4_power < 0) throw UsageError("j-quotient needs a non-negative E4 power");
    long deg_den = deg_d * form.power;
    long h = std::max(deg_n, deg_den);
    // Multiply through by Delta^h: j = E4^3 / Delta turns both sides into
    // polynomials in A = E4^3 and B = Delta.
    auto build = [&](long w) {
        QSeries e4 = cached_eisenstein(4, w);
        QSeries a = pow_int(e4, 3);
        QSeries b = cached_discriminant(w);
        long top = std::max(h, deg_d);
        std::vector<QSeries> a_pow{QSeries::constant(1, w)}, b_pow{QSeries::constant(1, w)};
        for (long i = 1; i <= top; ++i) {
            a_pow.push_back(mul(a_pow.back(), a));
            b_pow.push_back(mul(b_pow.back(), b));
        }
        QSeries num = homogeneous(form.numerator, h, a_pow, b_pow);
        QSeries d_tilde = homogeneous(form.denominator, deg_d, a_pow, b_pow);
        QSeries den = pow_int(d_tilde, form.power);
        if (h > deg_den) den = mul(den, b_pow[h - deg_den]);
        QSeries out = mul(num, inv(den));
        if (form.e4_power) out = mul(out, pow_int(e4, form.e4_power));
        return out;
    };
    return with_precision(prec, 2 * h + 2, build, "j-quotient");
}

std::optional<JQuotient> j_quotient(FormName name) {
    switch (name) {
        case FormName::F4a: return JQuotient{1, ints({"1"}), ints({"0", "1"}), 1};
        case FormName::LS8: return JQuotient{2, ints({"-3072", "1"}), ints({"0", "1"}), 2};
        case FormName::Triple8: {
            Integer c0 = Integer(-98280) * ipow(Integer(15), 6);
            return JQuotient{2, {c0, Integer(1610452125), Integer(-443556), Integer(13)}, ints({"3375", "1"}), 4};
        }
        case FormName::HK_num1: return JQuotient{1, ints({"0", "1"}), ints({"-54000", "1"}), 2};
        case FormName::HK_num2: return JQuotient{1, ints({"1"}), ints({"-54000", "1"}), 2};
        default: return std::nullopt;
    }
}

QSeries named_form(FormName name, long prec) {
    switch (name) {
        case FormName::E2: return cached_eisenstein(2, prec);
        case FormName::E4: return cached_eisenstein(4, prec);
        case FormName::E6: return cached_eisenstein(6, prec);
        case FormName::Delta: return cached_discriminant(prec);
        case FormName::J: return cached_j(prec);
        case FormName::Theta: return cached_theta(prec);
        case FormName::E24: return cached_e24(prec);
        case FormName::F4a:
            return memo().get("F4a", prec, [](long p) {
                return mul(cached_discriminant(p), pow_int(cached_eisenstein(4, p), -2));
            });
        case FormName::F4b:
            return memo().get("F4b", prec, [](long p) {
                QSeries num = mul(cached_eisenstein(4, p), cached_discriminant(p));
                return mul(num, pow_int(cached_eisenstein(6, p), -2));
            });
        case FormName::F6:
            return memo().get("F6", prec, [](long p) {
                QSeries num = mul(cached_eisenstein(6, p), cached_discriminant(p));
                return mul(num, pow_int(cached_eisenstein(4, p), -3));
            });
        case FormName::LS8:
        case FormName::Triple8:
        case FormName::HK_num1:
        case FormName::HK_num2: {
            std::string key(symbol(name));
            return memo().get(key, prec, [name](long p) { return expand(*j_quotient(name), p); });
        }
    }
    throw UsageError("unknown form");
}

namespace {

// delta^2 f + c1 * E2 delta f + pot * f, skipping products with vanishing windows.
QSeries second_order(const QSeries& f, const Rational& c1, const QSeries& e2, const QSeries& pot) {
    QSeries d1 = delta(f), d2 = delta(d1);
    std::vector<QSeries> parts;
    std::vector<Rational> scales;
    if (!d1.is_zero()) {
        parts.push_back(mul(e2, d1));
        scales.push_back(c1);
    }
    if (!f.is_zero() && !pot.is_zero()) {
        parts.push_back(mul(pot, f));
        scales.push_back(1);
    }
    std::vector<ScaledTerm> terms{{1, d2}};
    for (std::size_t i = 0; i < parts.size(); ++i) terms.push_back({scales[i], parts[i]});
    return linear_combine(terms);
}

}  // namespace

QSeries hk_operator_apply(const QSeries& f, long k) {
    long span = f.prec() - std::min(f.lead(), 0L);
    QSeries e2 = cached_eisenstein(2, span);
    QSeries pot = frac(k * (k + 1), 12) * delta(e2);
    return second_order(f, frac(-(k + 1), 6), e2, pot);
}

QSeries specific_D_apply(const QSeries& f) {
    long span = f.prec() - std::min(f.lead(), 0L);
    QSeries e2 = cached_eisenstein(2, span);
    QSeries e4 = cached_eisenstein(4, span);
    QSeries e6 = cached_eisenstein(6, span);
    QSeries pot = linear_combine({{frac(7, 36), mul(e2, e2)},
                                  {frac(-5, 36), e4},
                                  {frac(-2, 36), mul(mul(e2, e6), inv(e4))}});
    return second_order(f, -1, e2, pot);
}

QSeries cached_eisenstein(int k, long prec) {
    return memo().get("E" + std::to_string(k), prec, [k](long p) { return eisenstein(k, p); });
}

QSeries cached_discriminant(long prec) {
    return memo().get("Delta", prec, [](long p) { return discriminant(p); });
}

QSeries cached_j(long prec) {
    return memo().get("j", prec, [](long p) { return j_invariant(p); });
}

QSeries cached_theta(long prec) {
    return memo().get("theta", prec, [](long p) { return theta(p); });
}

QSeries cached_e24(long prec) {
    return memo().get("E24", prec, [](long p) { return e24(p); });
}

}  // namespace magnetic::forms
