#pragma once

#include "magnetic/qseries.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace magnetic::forms {

enum class FormName { E2, E4, E6, Delta, J, Theta, E24, F4a, F4b, F6, LS8, Triple8, HK_num1, HK_num2 };

std::string_view symbol(FormName name);
std::optional<FormName> parse_form_name(std::string_view text);
const std::vector<FormName>& all_form_names();

QSeries eisenstein(int k, long prec);
// Product formula q prod (1 - q^m)^24.
QSeries discriminant(long prec);
// (E4^3 - E6^2) / 1728, the independent construction.
QSeries discriminant_from_eisenstein(long prec);
QSeries j_invariant(long prec);
QSeries theta(long prec);
// Both constructions are computed and compared; a mismatch throws std::logic_error.
QSeries e24(long prec);
QSeries e24_divisor_sum(long prec);
QSeries e24_from_e2(long prec);

// E2^a E4^b E6^c.
QSeries quasi_monomial(long a, long b, long c, long prec);

// E4^e4_power * N(j) / D(j)^power; polynomials listed by increasing degree.
struct JQuotient {
    long e4_power = 0;
    std::vector<Integer> numerator;
    std::vector<Integer> denominator;
    long power = 1;
};

QSeries expand(const JQuotient& form, long prec);

// Defined only for LS8, Triple8, HK_num1, HK_num2 (and F4a = E4/j).
std::optional<JQuotient> j_quotient(FormName name);

QSeries named_form(FormName name, long prec);

// D_k f = delta^2 f - (k+1)/6 E2 delta f + k(k+1)/12 (delta E2) f.
QSeries hk_operator_apply(const QSeries& f, long k);
// delta^2 - E2 delta + (7 E2^2 - 5 E4 - 2 E2 E6 / E4) / 36.
QSeries specific_D_apply(const QSeries& f);

// Memoized base series, truncated to the request; write-once per key.
QSeries cached_eisenstein(int k, long prec);
QSeries cached_discriminant(long prec);
QSeries cached_j(long prec);
QSeries cached_theta(long prec);
QSeries cached_e24(long prec);

}  // namespace magnetic::forms
