#pragma once

#include "magnetic/halfint.hpp"
#include "magnetic/qseries.hpp"

#include <optional>

namespace magnetic::lifts {

// D = 1 for even k, -3 for odd k.
long discriminant_for(long k);

// A(n) = sum_{d|n} (d|D) d^{k-1} a(|D| n^2 / d^2) for 1 <= n <= floor(sqrt(prec/|D|)).
QSeries psi(const QSeries& f, long k);
QSeries psi(const halfint::PlusForm& f);

// b -> coefficient sum_{d|n} (d|D) d^{k-1} mu(d) b(n/d) at q^{|D| n^2}; zero elsewhere.
QSeries phi(const QSeries& big_f, long k);

// Keeps exponents |D| n^2 with n > 0.
QSeries square_part(const QSeries& f, long k);

struct CongruenceReport {
    bool ok = true;
    long p = 0;
    long n = 0;
    long power = 1;
    long checked_through = 0;
    std::optional<long> failing_exponent;
    bool precondition_failed = false;  // a tracked coefficient was not integral
};

// p^n | m  implies  p^{power n} | A(m), for every tracked m >= 1.
CongruenceReport strong_magnetic_congruence_check(const QSeries& big_f, long p, long n, long power);

}  // namespace magnetic::lifts
