#include "magnetic/qseries.hpp"

#include "series_kernel.hpp"

#include <algorithm>
#include <sstream>

namespace magnetic {

using detail::from_scaled;
using detail::to_scaled;

QSeries::QSeries() : lead_(0), coeffs_(1, Rational(0)) {}

QSeries::QSeries(long lead, std::vector<Rational> coeffs) : lead_(lead), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw UsageError("QSeries needs at least one tracked coefficient");
    for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::zero(long lead, long prec) {
    if (prec < lead) throw UsageError("QSeries window with prec < lead");
    return QSeries(lead, std::vector<Rational>(prec - lead + 1, Rational(0)));
}

QSeries QSeries::constant(const Rational& c, long prec) {
    if (prec < 0) throw UsageError("constant series needs prec >= 0");
    auto s = zero(0, prec);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::monomial(long n, const Rational& c, long prec) {
    if (prec < n) throw UsageError("monomial beyond its own precision");
    auto s = zero(n, prec);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::from_integers(long lead, std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return QSeries(lead, std::move(v));
}

const Rational& QSeries::coefficient(long n) const {
    if (n < lead_ || n > prec())
        throw PrecisionError("coefficient of q^" + std::to_string(n) + " outside known window [" +
                             std::to_string(lead_) + ", " + std::to_string(prec()) + "]");
    return coeffs_[n - lead_];
}

Rational QSeries::coefficient_or_zero(long n) const {
    if (n < lead_) return 0;
    return coefficient(n);
}

std::optional<long> QSeries::valuation_if_any() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return lead_ + static_cast<long>(i);
    return std::nullopt;
}

long QSeries::valuation() const {
    auto v = valuation_if_any();
    if (!v) throw DomainError("valuation of a series whose tracked coefficients all vanish");
    return *v;
}

QSeries QSeries::truncated(long new_prec) const {
    if (new_prec > prec())
        throw PrecisionError("cannot extend precision from " + std::to_string(prec()) + " to " +
                             std::to_string(new_prec));
    if (new_prec < lead_) throw UsageError("truncation below the lead exponent");
    return QSeries(lead_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (new_prec - lead_ + 1)));
}

QSeries QSeries::normalized() const {
    long v = valuation_if_any().value_or(prec());
    return with_lead(v);
}

QSeries QSeries::with_lead(long new_lead) const {
    if (new_lead > prec()) throw UsageError("lead beyond precision");
    if (new_lead <= lead_) {
        std::vector<Rational> v(lead_ - new_lead, Rational(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return QSeries(new_lead, std::move(v));
    }
    for (long n = lead_; n < new_lead; ++n)
        if (sgn(coeffs_[n - lead_]) != 0) throw UsageError("with_lead would drop a nonzero coefficient");
    return QSeries(new_lead, std::vector<Rational>(coeffs_.begin() + (new_lead - lead_), coeffs_.end()));
}

QSeries QSeries::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return QSeries(lead_, std::move(v));
}

bool operator==(const QSeries& a, const QSeries& b) { return a.lead_ == b.lead_ && a.coeffs_ == b.coeffs_; }

QSeries linear_combine(std::span<const ScaledTerm> terms) {
    if (terms.empty()) throw UsageError("linear_combine of an empty list");
    long lead = terms[0].series.lead(), prec = terms[0].series.prec();
    for (const auto& t : terms) {
        lead = std::min(lead, t.series.lead());
        prec = std::min(prec, t.series.prec());
    }
    std::size_t n = prec - lead + 1;

    // Everything over one denominator D: sum (p_i * D / (q_i L_i)) * N_i.
    std::vector<detail::ScaledVector> scaled;
    scaled.reserve(terms.size());
    Integer big_den = 1;
    for (const auto& t : terms) {
        long hi = std::min(prec, t.series.prec());
        long from = t.series.lead();
        std::span<const Rational> window;
        if (hi >= from) window = t.series.coefficients().subspan(0, hi - from + 1);
        scaled.push_back(to_scaled(window));
        Integer d = scaled.back().den * t.scale.get_den();
        mpz_lcm(big_den.get_mpz_t(), big_den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> acc(n, 0);
    Integer factor;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (sgn(terms[i].scale) == 0) continue;
        Integer d = scaled[i].den * terms[i].scale.get_den();
        mpz_divexact(factor.get_mpz_t(), big_den.get_mpz_t(), d.get_mpz_t());
        factor *= terms[i].scale.get_num();
        std::size_t offset = terms[i].series.lead() - lead;
        const auto& num = scaled[i].num;
        for (std::size_t j = 0; j < num.size(); ++j)
            if (mpz_sgn(num[j].get_mpz_t()))
                mpz_addmul(acc[offset + j].get_mpz_t(), factor.get_mpz_t(), num[j].get_mpz_t());
    }
    return QSeries(lead, from_scaled(std::move(acc), big_den));
}

QSeries linear_combine(std::initializer_list<ScaledTerm> terms) {
    return linear_combine(std::span<const ScaledTerm>(terms.begin(), terms.size()));
}

QSeries operator+(const QSeries& a, const QSeries& b) { return linear_combine({{1, a}, {1, b}}); }
QSeries operator-(const QSeries& a, const QSeries& b) { return linear_combine({{1, a}, {-1, b}}); }
QSeries operator*(const Rational& c, const QSeries& f) { return linear_combine({{c, f}}); }
QSeries operator*(const QSeries& f, const Rational& c) { return linear_combine({{c, f}}); }
QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

QSeries mul(const QSeries& f, const QSeries& g) {
    long vf = f.valuation(), vg = g.valuation();
    long prec = std::min(f.prec() + vg, g.prec() + vf);
    long lead = vf + vg;
    std::size_t n = prec - lead + 1;
    auto a = to_scaled(f.coefficients().subspan(vf - f.lead()));
    auto b = to_scaled(g.coefficients().subspan(vg - g.lead()));
    auto c = detail::poly_mul(a.num, b.num, n);
    return QSeries(lead, from_scaled(std::move(c), a.den * b.den));
}

QSeries inv(const QSeries& f) {
    auto vopt = f.valuation_if_any();
    if (!vopt) throw DomainError("inverse of a series whose tracked coefficients all vanish");
    long v = *vopt;
    std::size_t n = f.prec() - v + 1;
    auto s = to_scaled(f.coefficients().subspan(v - f.lead()));
    // f = N / L with N_0 = a. With M_i = N_i a^(i-1) (so M_0 = 1), 1/f has
    // coefficients L * (1/M)_k / a^(k+1), all integral work.
    Integer a = s.num[0];
    std::vector<Integer> monic(n);
    monic[0] = 1;
    Integer apow = 1;
    for (std::size_t i = 1; i < n; ++i) {
        monic[i] = s.num[i] * apow;
        if (i + 1 < n) apow *= a;
    }
    auto h = detail::poly_inv_unit(monic, n);
    std::vector<Rational> out(n);
    Integer den_pow = a;
    for (std::size_t k = 0; k < n; ++k) {
        mpz_mul(mpq_numref(out[k].get_mpq_t()), s.den.get_mpz_t(), h[k].get_mpz_t());
        mpz_set(mpq_denref(out[k].get_mpq_t()), den_pow.get_mpz_t());
        out[k].canonicalize();
        if (k + 1 < n) den_pow *= a;
    }
    return QSeries(-v, std::move(out));
}

QSeries divide(const QSeries& f, const QSeries& g) { return mul(f, inv(g)); }

QSeries pow_int(const QSeries& f, long n) {
    if (n == 0) {
        // f^0 = 1 exactly as far as f's relative precision reaches.
        long v = f.valuation();
        return QSeries::constant(1, f.prec() - v);
    }
    QSeries base = n > 0 ? f : inv(f);
    unsigned long e = n > 0 ? n : -n;
    std::optional<QSeries> result;
    while (true) {
        if (e & 1) result = result ? mul(*result, base) : base;
        e >>= 1;
        if (!e) break;
        base = mul(base, base);
    }
    return *result;
}

QSeries delta(const QSeries& f) {
    std::vector<Rational> v(f.size());
    auto c = f.coefficients();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c[i] * (f.lead() + static_cast<long>(i));
    return QSeries(f.lead(), std::move(v));
}

QSeries delta_pow(const QSeries& f, unsigned order) {
    QSeries g = f;
    for (unsigned i = 0; i < order; ++i) g = delta(g);
    return g;
}

QSeries antiderivative(const QSeries& f, unsigned order) {
    if (order == 0) throw UsageError("antiderivative order must be positive");
    if (f.lead() <= 0 && f.prec() >= 0 && sgn(f.coefficient(0)) != 0)
        throw DomainError("no formal anti-derivative: coefficient of q^0 is " + to_string(f.coefficient(0)));
    std::vector<Rational> v(f.size());
    auto c = f.coefficients();
    for (std::size_t i = 0; i < v.size(); ++i) {
        long n = f.lead() + static_cast<long>(i);
        if (n == 0) continue;
        Integer d = ipow(Integer(n < 0 ? -n : n), order);
        if (n < 0 && order % 2 == 1) d = -d;
        v[i] = c[i] / Rational(d);
    }
    return QSeries(f.lead(), std::move(v));
}

QSeries substitute_power(const QSeries& f, long m) {
    if (m < 1) throw UsageError("substitute_power needs m >= 1");
    if (m == 1) return f;
    // Known through m*prec exactly: the next unknown term sits at m*(prec+1).
    long lead = m * f.lead();
    long prec = m * f.prec() + (m - 1);
    std::vector<Rational> v(prec - lead + 1, Rational(0));
    auto c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) v[i * m] = c[i];
    return QSeries(lead, std::move(v));
}

QSeries shift(const QSeries& f, long k) {
    return QSeries(f.lead() + k, std::vector<Rational>(f.coefficients().begin(), f.coefficients().end()));
}

IntegralityReport integrality_check(const QSeries& f, unsigned long p) {
    IntegralityReport r;
    r.checked_from = f.lead();
    r.checked_through = f.prec();
    auto c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Integer& den = c[i].get_den();
        bool bad = p == 0 ? den != 1 : mpz_divisible_ui_p(den.get_mpz_t(), p) != 0;
        if (bad) {
            r.ok = false;
            r.exponent = f.lead() + static_cast<long>(i);
            r.denominator = den;
            break;
        }
    }
    return r;
}

std::optional<long> first_difference(const QSeries& f, const QSeries& g) {
    long lo = std::min(f.lead(), g.lead());
    long hi = std::min(f.prec(), g.prec());
    for (long n = lo; n <= hi; ++n)
        if (f.coefficient_or_zero(n) != g.coefficient_or_zero(n)) return n;
    return std::nullopt;
}

bool agree_on_window(const QSeries& f, const QSeries& g) { return !first_difference(f, g).has_value(); }

std::string to_string(const QSeries& f, std::size_t max_terms) {
    std::ostringstream os;
    std::size_t shown = 0;
    auto c = f.coefficients();
    for (std::size_t i = 0; i < c.size() && shown < max_terms; ++i) {
        if (sgn(c[i]) == 0) continue;
        long n = f.lead() + static_cast<long>(i);
        std::string coef = to_string(c[i]);
        if (shown) os << (sgn(c[i]) < 0 ? " - " : " + ");
        else if (sgn(c[i]) < 0) os << "-";
        if (coef.front() == '-') coef.erase(0, 1);
        bool unit = coef == "1";
        if (n == 0) os << coef;
        else {
            if (!unit) os << coef << "*";
            os << "q";
            if (n != 1) os << "^" << n;
        }
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(q^" << f.prec() + 1 << ")";
    return os.str();
}

}  // namespace magnetic
