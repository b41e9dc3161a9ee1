#pragma once

#include "magnetic/qseries.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace magnetic::quasimod {

// f_{a,b,c} = E2^a E4^b E6^c.
struct QuasiMonomial {
    long a = 0;
    long b = 0;
    long c = 0;

    long weight() const { return 2 * a + 4 * b + 6 * c; }
    auto operator<=>(const QuasiMonomial&) const = default;
};

// Reduction order: larger -c first, then larger -b, then larger a.
bool reduction_before(const QuasiMonomial& x, const QuasiMonomial& y);

class QuasiElement {
public:
    explicit QuasiElement(long weight = 0) : weight_(weight) {}
    QuasiElement(long weight, std::map<QuasiMonomial, Rational> terms);
    static QuasiElement monomial(long a, long b, long c, const Rational& coeff = 1);

    long weight() const { return weight_; }
    const std::map<QuasiMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const QuasiMonomial& m) const;
    Rational coefficient_sum() const;

    QuasiElement operator+(const QuasiElement& rhs) const;
    QuasiElement operator-(const QuasiElement& rhs) const;
    QuasiElement operator-() const;
    friend QuasiElement operator*(const Rational& c, const QuasiElement& v);
    friend bool operator==(const QuasiElement&, const QuasiElement&) = default;

private:
    void add_term(const QuasiMonomial& m, const Rational& c);

    long weight_;
    std::map<QuasiMonomial, Rational> terms_;
};

// Text form: "3/2*f(1,-1,1) - f(0,1,0)"; "0" is the zero element.
std::string to_string(const QuasiElement& v);
QuasiElement parse_element(std::string_view text, std::optional<long> weight_if_zero = std::nullopt);

QuasiElement delta_element(const QuasiElement& v);
QSeries expand(const QuasiElement& v, long prec);
bool is_cuspidal(const QuasiElement& v);

enum class Anchor { Weight4, Weight6 };

// input = mu * anchor + sum gens + delta(delta_part).
struct ReductionCertificate {
    QuasiElement input;
    Anchor anchor = Anchor::Weight4;
    Rational mu;
    std::map<std::string, Rational> gens;  // "G_a", "G_b" or "F6"
    QuasiElement delta_part;

    // Right-hand side as a formal element.
    QuasiElement rhs() const;
};

QuasiElement anchor_element(Anchor anchor);
QuasiElement generator_element(Anchor anchor, const std::string& name);

ReductionCertificate reduce_weight4(const QuasiElement& v);
ReductionCertificate reduce_weight6(const QuasiElement& v);

enum class CertificateStatus { Verified, Mismatch };

struct CertificateCheck {
    CertificateStatus status = CertificateStatus::Verified;
    std::optional<long> first_mismatch;
    long checked_through = 0;
    bool ok() const { return status == CertificateStatus::Verified; }
};

// Expands both sides and compares exactly; throws PrecisionError if either
// side cannot be expanded to prec.
CertificateCheck verify_certificate(const ReductionCertificate& cert, long prec);

struct MagneticReport {
    bool ok = true;
    unsigned order = 1;
    unsigned long prime = 0;  // 0: plain integrality
    long checked_through = 0;
    std::optional<long> exponent;
    Integer denominator;
};

MagneticReport magnetic_check(const QSeries& f, unsigned order = 1, unsigned long p = 0);
MagneticReport magnetic_check(const QuasiElement& v, long prec, unsigned order = 1, unsigned long p = 0);

}  // namespace magnetic::quasimod
