#pragma once

#include "magnetic/qseries.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace magnetic::halfint {

// (-1)^k n = 0, 1 mod 4.
bool admissible(long k, long n);
// A principal part q^{-m} is allowed in weight k + 1/2.
bool admissible_pole(long k, long m);

struct PlusReport {
    bool ok = true;
    long checked_from = 0;
    long checked_through = 0;
    std::optional<long> violation;
};

PlusReport plus_check(long k, const QSeries& f);

// Weight k + 1/2 series satisfying the plus condition on its window.
class PlusForm {
public:
    // Throws DomainError when the plus condition fails.
    PlusForm(long k, QSeries series);

    long k() const { return k_; }
    const QSeries& series() const { return series_; }

private:
    long k_;
    QSeries series_;
};

QSeries U_p(const QSeries& f, long p);
QSeries V_p(const QSeries& f, long p);
// a(n) -> ((-1)^k n | p) a(n).
QSeries chi_p(const QSeries& f, long p, long k);
QSeries kohnen_project(const QSeries& f, long k);

// f|U_{p^2} + p^{k-1} f|chi_p + p^{2k-1} f|V_{p^2}, for any prime p and any series.
QSeries half_integral_hecke(const QSeries& f, long k, long p);
// Odd primes only; p = 2 goes through t4_prime.
PlusForm T_p2(const PlusForm& f, long p);
PlusForm T_p2_power(const PlusForm& f, long p, unsigned n);
PlusForm t4_prime(const PlusForm& f);
// F|U_p + p^{twok-1} F|V_p on integral weight twok.
QSeries big_T_p(const QSeries& f, long twok, long p);
QSeries big_T_p_power(const QSeries& f, long twok, long p, unsigned n);

// delta f - (2k+1)/6 E2(4 tau) f, weight k+1/2 -> k+5/2.
PlusForm raising(const PlusForm& f);

struct PlusBasis {
    long k = 0;
    long pool_s_max = 0;
    std::map<long, PlusForm> elements;
};

// Elements q^{-m} + O(q) for each requested m, known through prec.
PlusBasis plus_basis(long k, const std::vector<long>& m_list, long prec);
PlusForm basis_element(long k, long m, long prec);

// g0, g1, g2, h0, f4a, f4b, f6half.
PlusForm named_plus_form(std::string_view name, long prec);
bool is_plus_form_name(std::string_view name);
long plus_form_weight(std::string_view name);

}  // namespace magnetic::halfint
