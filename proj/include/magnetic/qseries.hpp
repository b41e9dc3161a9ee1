#pragma once

#include "magnetic/errors.hpp"
#include "magnetic/rational.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace magnetic {

// Truncated Laurent series sum_{lead <= n <= prec} a(n) q^n + O(q^{prec+1}).
// Coefficients below lead are exactly zero; nothing above prec is known.
class QSeries {
public:
    // The zero series known at exponent 0 only.
    QSeries();
    // coeffs[i] is the coefficient of q^{lead+i}; the window ends at lead+size-1.
    QSeries(long lead, std::vector<Rational> coeffs);

    static QSeries zero(long lead, long prec);
    static QSeries constant(const Rational& c, long prec);
    // c q^n, known through prec (prec >= n).
    static QSeries monomial(long n, const Rational& c, long prec);
    // Dense integer data, convenient in tests.
    static QSeries from_integers(long lead, std::initializer_list<long> coeffs);

    long lead() const { return lead_; }
    long prec() const { return lead_ + static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    // Strict: throws PrecisionError outside [lead, prec].
    const Rational& coefficient(long n) const;
    // Zero below lead, PrecisionError above prec.
    Rational coefficient_or_zero(long n) const;
    bool knows(long n) const { return n <= prec(); }

    // Smallest exponent with a nonzero coefficient, if any.
    std::optional<long> valuation_if_any() const;
    long valuation() const;
    bool is_zero() const { return !valuation_if_any().has_value(); }

    QSeries truncated(long new_prec) const;
    // Leading zeros dropped; an all-zero window keeps its last exponent.
    QSeries normalized() const;
    // Window extended downwards with zeros, or trimmed of known zeros.
    QSeries with_lead(long new_lead) const;

    QSeries operator-() const;

    // Exact equality of windows and coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    long lead_ = 0;
    std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& f);
QSeries operator*(const QSeries& f, const Rational& c);

struct ScaledTerm {
    Rational scale;
    const QSeries& series;
};

// sum scale_i * f_i over the common window.
QSeries linear_combine(std::span<const ScaledTerm> terms);
QSeries linear_combine(std::initializer_list<ScaledTerm> terms);

QSeries mul(const QSeries& f, const QSeries& g);
QSeries inv(const QSeries& f);
QSeries divide(const QSeries& f, const QSeries& g);
QSeries pow_int(const QSeries& f, long n);

// q d/dq.
QSeries delta(const QSeries& f);
QSeries delta_pow(const QSeries& f, unsigned order);
// Inverse of delta^order; the q^0 coefficient must vanish.
QSeries antiderivative(const QSeries& f, unsigned order = 1);

// f(q^m).
QSeries substitute_power(const QSeries& f, long m);
// q^k f.
QSeries shift(const QSeries& f, long k);

struct IntegralityReport {
    bool ok = true;
    long checked_from = 0;
    long checked_through = 0;
    std::optional<long> exponent;   // first failing exponent
    Integer denominator;            // denominator found there
};

// p == 0 checks Z-integrality, otherwise Z_(p)-integrality.
IntegralityReport integrality_check(const QSeries& f, unsigned long p = 0);

// Smallest exponent in the shared window where f and g differ.
std::optional<long> first_difference(const QSeries& f, const QSeries& g);
bool agree_on_window(const QSeries& f, const QSeries& g);

std::string to_string(const QSeries& f, std::size_t max_terms = 12);

}  // namespace magnetic
