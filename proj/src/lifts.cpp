#include "magnetic/lifts.hpp"

#include "magnetic/arith.hpp"

namespace magnetic::lifts {

long discriminant_for(long k) { return k % 2 == 0 ? 1 : -3; }

namespace {

// chi_D(d) d^{k-1}
Rational twist(long disc, long k, long d) {
    int c = arith::character(disc, d);
    if (c == 0) return 0;
    Rational v = pow(Rational(d), k - 1);
    return c > 0 ? v : Rational(-v);
}

}  // namespace

QSeries psi(const QSeries& f, long k) {
    long disc = discriminant_for(k), ad = disc < 0 ? -disc : disc;
    if (f.prec() < ad) throw PrecisionError("lift needs the input known through q^" + std::to_string(ad));
    long n_max = arith::isqrt(f.prec() / ad);
    std::vector<Rational> out(n_max, Rational(0));
    for (long n = 1; n <= n_max; ++n) {
        Rational& a = out[n - 1];
        for (long d : arith::divisors(n)) {
            Rational w = twist(disc, k, d);
            if (sgn(w) == 0) continue;
            long e = n / d;
            Rational c = f.coefficient_or_zero(ad * e * e);
            if (sgn(c) != 0) a += w * c;
        }
    }
    return QSeries(1, std::move(out));
}

QSeries psi(const halfint::PlusForm& f) { return psi(f.series(), f.k()); }

QSeries phi(const QSeries& big_f, long k) {
    long disc = discriminant_for(k), ad = disc < 0 ? -disc : disc;
    long n_max = big_f.prec();
    if (n_max < 1) return QSeries::zero(0, 0);
    auto mu = arith::mobius_table(n_max);
    long top = ad * (n_max + 1) * (n_max + 1) - 1;
    std::vector<Rational> out(top, Rational(0));
    for (long n = 1; n <= n_max; ++n) {
        Rational s = 0;
        for (long d : arith::divisors(n)) {
            if (mu[d] == 0) continue;
            Rational w = twist(disc, k, d);
            if (sgn(w) == 0) continue;
            Rational b = big_f.coefficient_or_zero(n / d);
            if (sgn(b) == 0) continue;
            if (mu[d] > 0) s += w * b;
            else s -= w * b;
        }
        out[ad * n * n - 1] = s;
    }
    return QSeries(1, std::move(out));
}

QSeries square_part(const QSeries& f, long k) {
    long disc = discriminant_for(k), ad = disc < 0 ? -disc : disc;
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        long e = f.lead() + static_cast<long>(i);
        bool keep = e > 0 && e % ad == 0 && arith::is_square(e / ad);
        if (!keep) c[i] = 0;
    }
    return QSeries(f.lead(), std::move(c));
}

CongruenceReport strong_magnetic_congruence_check(const QSeries& big_f, long p, long n, long power) {
    if (!arith::is_prime(p)) throw UsageError(std::to_string(p) + " is not a prime");
    if (n < 1) throw UsageError("congruence check needs n >= 1");
    if (power < 1) throw UsageError("congruence check needs power >= 1");
    CongruenceReport r;
    r.p = p;
    r.n = n;
    r.power = power;
    r.checked_through = big_f.prec();
    Integer modulus = ipow(Integer(p), static_cast<unsigned long>(n));
    long step = modulus.fits_slong_p() ? modulus.get_si() : 0;
    if (step == 0 || step > big_f.prec()) return r;
    for (long m = step; m <= big_f.prec(); m += step) {
        Rational a = big_f.coefficient_or_zero(m);
        if (sgn(a) == 0) continue;
        if (!is_integral(a)) {
            r.ok = false;
            r.precondition_failed = true;
            r.failing_exponent = m;
            return r;
        }
        if (valuation(a, p) < power * n) {
            r.ok = false;
            r.failing_exponent = m;
            return r;
        }
    }
    return r;
}

}  // namespace magnetic::lifts
