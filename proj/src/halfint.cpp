#include "magnetic/halfint.hpp"

#include "magnetic/arith.hpp"
#include "magnetic/forms.hpp"
#include "magnetic/lifts.hpp"
#include "magnetic/linalg.hpp"
#include "magnetic/memo.hpp"
#include "magnetic/precision.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace magnetic::halfint {

using arith::ceil_div;
using arith::floor_div;

namespace {

SeriesMemo& memo() {
    static SeriesMemo m;
    return m;
}

void require_prime(long p) {
    if (!arith::is_prime(p)) throw UsageError(std::to_string(p) + " is not a prime");
}

Rational prime_power(long p, long e) { return pow(Rational(p), e); }

}  // namespace

bool admissible(long k, long n) {
    long v = (k % 2 == 0) ? n : -n;
    long r = ((v % 4) + 4) % 4;
    return r == 0 || r == 1;
}

bool admissible_pole(long k, long m) { return admissible(k, -m); }

PlusReport plus_check(long k, const QSeries& f) {
    PlusReport r;
    r.checked_from = f.lead();
    r.checked_through = f.prec();
    for (long n = f.lead(); n <= f.prec(); ++n) {
        if (!admissible(k, n) && sgn(f.coefficient(n)) != 0) {
            r.ok = false;
            r.violation = n;
            break;
        }
    }
    return r;
}

PlusForm::PlusForm(long k, QSeries series) : k_(k), series_(std::move(series)) {
    if (k < 0) throw UsageError("plus forms need k >= 0");
    auto r = plus_check(k, series_);
    if (!r.ok)
        throw DomainError("plus condition fails at q^" + std::to_string(*r.violation) + " for weight " +
                          std::to_string(k) + "+1/2");
}

QSeries U_p(const QSeries& f, long p) {
    if (p < 1) throw UsageError("U_p needs p >= 1");
    long lead = ceil_div(f.lead(), p), prec = floor_div(f.prec(), p);
    if (prec < lead) throw PrecisionError("U_" + std::to_string(p) + ": window too short");
    std::vector<Rational> c;
    c.reserve(prec - lead + 1);
    for (long n = lead; n <= prec; ++n) c.push_back(f.coefficient(n * p));
    return QSeries(lead, std::move(c));
}

QSeries V_p(const QSeries& f, long p) { return substitute_power(f, p); }

QSeries chi_p(const QSeries& f, long p, long k) {
    require_prime(p);
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        long n = f.lead() + static_cast<long>(i);
        int s = arith::kronecker_prime(k % 2 == 0 ? n : -n, p);
        if (s == 0) c[i] = 0;
        else if (s < 0) c[i] = -c[i];
    }
    return QSeries(f.lead(), std::move(c));
}

QSeries kohnen_project(const QSeries& f, long k) {
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!admissible(k, f.lead() + static_cast<long>(i))) c[i] = 0;
    return QSeries(f.lead(), std::move(c));
}

QSeries half_integral_hecke(const QSeries& f, long k, long p) {
    require_prime(p);
    QSeries u = U_p(f, p * p);
    QSeries x = chi_p(f, p, k);
    QSeries v = V_p(f, p * p);
    return linear_combine({{1, u}, {prime_power(p, k - 1), x}, {prime_power(p, 2 * k - 1), v}});
}

PlusForm T_p2(const PlusForm& f, long p) {
    if (p == 2) throw UsageError("T_4 does not preserve the plus space; use t4_prime");
    return PlusForm(f.k(), half_integral_hecke(f.series(), f.k(), p));
}

PlusForm T_p2_power(const PlusForm& f, long p, unsigned n) {
    PlusForm g = f;
    for (unsigned i = 0; i < n; ++i) g = T_p2(g, p);
    return g;
}

PlusForm t4_prime(const PlusForm& f) {
    return PlusForm(f.k(), kohnen_project(half_integral_hecke(f.series(), f.k(), 2), f.k()));
}

QSeries big_T_p(const QSeries& f, long twok, long p) {
    require_prime(p);
    QSeries u = U_p(f, p);
    QSeries v = V_p(f, p);
    return linear_combine({{1, u}, {prime_power(p, twok - 1), v}});
}

QSeries big_T_p_power(const QSeries& f, long twok, long p, unsigned n) {
    QSeries g = f;
    for (unsigned i = 0; i < n; ++i) g = big_T_p(g, twok, p);
    return g;
}

PlusForm raising(const PlusForm& f) {
    const QSeries& s = f.series();
    long span = s.prec() - std::min(s.lead(), 0L);
    QSeries e2_4 = substitute_power(forms::cached_eisenstein(2, ceil_div(span, 4) + 1), 4);
    QSeries d = delta(s);
    if (s.is_zero()) return PlusForm(f.k() + 2, d);
    QSeries out = linear_combine({{1, d}, {frac(-(2 * f.k() + 1), 6), mul(e2_4, s)}});
    return PlusForm(f.k() + 2, out);
}

// ---------------------------------------------------------------------------
// Basis construction.
//
// Stage 1 (seeds): for each residue class of admissible m mod 4, the element
// with the smallest pole is found inside the finite pool
//     theta^(2k+25-4j) E24^j / Delta(4 tau),  0 <= j <= (2k+25)/4,
// whose pole order is at most 4. Stage 2: every q^{-m} + O(q) is a
// combination of seed * j(4 tau)^s, found by exact elimination.

namespace {

struct SeedData {
    long m = 0;
    std::vector<Rational> x;  // coefficients over the pool
};

long pool_top(long k) { return 2 * k + 25; }

// Numerator sum_j x_j theta^(A-4j) E24^j, known through w.
QSeries seed_numerator(long k, const std::vector<Rational>& x, long w) {
    long a = pool_top(k), jmax = a / 4;
    QSeries th = forms::cached_theta(w);
    QSeries e24 = forms::cached_e24(w);
    QSeries th4 = pow_int(th, 4);
    std::vector<QSeries> xp{QSeries::constant(1, w)}, yp{QSeries::constant(1, w)};
    for (long i = 1; i <= jmax; ++i) {
        xp.push_back(mul(xp.back(), th4));
        yp.push_back(mul(yp.back(), e24));
    }
    std::vector<QSeries> parts;
    std::vector<Rational> scales;
    for (long j = 0; j <= jmax; ++j) {
        if (sgn(x[j]) == 0) continue;
        parts.push_back(mul(xp[jmax - j], yp[j]));
        scales.push_back(x[j]);
    }
    std::vector<ScaledTerm> terms;
    for (std::size_t i = 0; i < parts.size(); ++i) terms.push_back({scales[i], parts[i]});
    QSeries n = linear_combine(terms);
    long r = a - 4 * jmax;
    if (r > 0 && !n.is_zero()) n = mul(n, pow_int(th, r));
    return n;
}

QSeries inverse_delta4(long w) {
    long q = ceil_div(w, 4) + 3;
    return substitute_power(inv(forms::cached_discriminant(q)), 4);
}

QSeries seed_expansion(long k, const SeedData& seed, long prec) {
    std::string key = "seed:k=" + std::to_string(k) + ",m=" + std::to_string(seed.m);
    return memo().get(key, prec, [&](long p) {
        return with_precision(p, 8, [&](long w) {
            QSeries n = seed_numerator(k, seed.x, w);
            return mul(n, inverse_delta4(w));
        }, "basis seed");
    });
}

std::optional<SeedData> try_seed(long k, long m) {
    long a = pool_top(k), jmax = a / 4;
    long bound = 64 + 2 * k;
    std::vector<QSeries> pool;
    QSeries id4 = inverse_delta4(bound + 8);
    for (long j = 0; j <= jmax; ++j) {
        std::vector<Rational> unit(jmax + 1, Rational(0));
        unit[j] = 1;
        pool.push_back(mul(seed_numerator(k, unit, bound + 8), id4).truncated(bound));
    }
    std::vector<long> rows;
    for (long n = -4; n <= bound; ++n)
        if (n <= 0 || !admissible(k, n)) rows.push_back(n);
    linalg::Matrix mat(rows.size(), pool.size());
    std::vector<Rational> rhs(rows.size(), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < pool.size(); ++c) mat(r, c) = pool[c].coefficient_or_zero(rows[r]);
        if (rows[r] == -m || (rows[r] == 0 && m == 0)) rhs[r] = 1;
    }
    auto sol = linalg::solve(mat, {rhs});
    if (sol.status == linalg::SolveStatus::Inconsistent) return std::nullopt;
    if (sol.status == linalg::SolveStatus::Underdetermined)
        throw DomainError("basis seed for weight " + std::to_string(k) + "+1/2, m=" + std::to_string(m) +
                          " is not unique (cusp forms present)");
    return SeedData{m, sol.x.front()};
}

std::vector<SeedData> seeds_for(long k) {
    static std::mutex mutex;
    static std::map<long, std::vector<SeedData>> table;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = table.find(k);
    if (it != table.end()) return it->second;
    std::vector<SeedData> seeds;
    std::vector<long> classes = k % 2 == 0 ? std::vector<long>{0, 3} : std::vector<long>{0, 1};
    for (long rho : classes) {
        std::optional<SeedData> found;
        for (long m = rho; m <= 4 && !found; m += 4) found = try_seed(k, m);
        if (!found)
            throw DomainError("no basis seed in weight " + std::to_string(k) + "+1/2 for m = " +
                              std::to_string(rho) + " mod 4");
        seeds.push_back(*found);
    }
    table.emplace(k, seeds);
    return seeds;
}

void check_element(long k, long m, const QSeries& f) {
    auto pr = plus_check(k, f);
    if (!pr.ok) throw std::logic_error("basis element violates the plus condition at q^" + std::to_string(*pr.violation));
    for (long n = f.lead(); n <= std::min(0L, f.prec()); ++n) {
        Rational want = (n == -m) ? Rational(1) : Rational(0);
        if (f.coefficient(n) != want)
            throw std::logic_error("basis element for m=" + std::to_string(m) + " has the wrong principal part at q^" +
                                   std::to_string(n));
    }
    auto ir = integrality_check(f);
    if (!ir.ok)
        throw std::logic_error("basis element for m=" + std::to_string(m) + " is not integral at q^" +
                               std::to_string(*ir.exponent));
}

}  // namespace

PlusBasis plus_basis(long k, const std::vector<long>& m_list, long prec) {
    if (k < 0) throw UsageError("plus_basis needs k >= 0");
    if (m_list.empty()) throw UsageError("plus_basis needs at least one m");
    for (long m : m_list) {
        if (m < 0) throw UsageError("plus_basis needs m >= 0");
        if (!admissible_pole(k, m))
            throw UsageError("m=" + std::to_string(m) + " is not admissible in weight " + std::to_string(k) + "+1/2");
    }
    if (prec < 1) throw UsageError("plus_basis needs prec >= 1");
    auto seeds = seeds_for(k);
    long m_max = *std::max_element(m_list.begin(), m_list.end());
    long s_max = ceil_div(m_max, 4) + 2;
    long s_cap = s_max + 10;

    PlusBasis out;
    out.k = k;
    while (true) {
        long seed_m_max = 0;
        for (const auto& s : seeds) seed_m_max = std::max(seed_m_max, s.m);
        long lowest = -seed_m_max - 4 * s_max;
        long bound = 4 * s_max + 2 * k + 8;

        // Pool seed_i * j(4 tau)^s through `bound`.
        long jprec = ceil_div(bound + seed_m_max + 4 * s_max, 4) + 4;
        QSeries j4 = substitute_power(forms::cached_j(jprec), 4);
        std::vector<QSeries> cols;
        for (const auto& seed : seeds) {
            QSeries base = seed_expansion(k, seed, bound + 4 * s_max + 8);
            QSeries acc = base;
            for (long s = 0; s <= s_max; ++s) {
                cols.push_back(acc);
                if (s < s_max) acc = mul(acc, j4);
            }
        }
        std::vector<long> rows;
        for (long n = lowest; n <= bound; ++n)
            if (n <= 0 || !admissible(k, n)) rows.push_back(n);
        linalg::Matrix mat(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (cols[c].prec() < rows[r]) throw std::logic_error("basis pool column too short");
                mat(r, c) = cols[c].coefficient_or_zero(rows[r]);
            }
        std::vector<std::vector<Rational>> rhs;
        for (long m : m_list) {
            std::vector<Rational> b(rows.size(), Rational(0));
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (rows[r] == -m || (rows[r] == 0 && m == 0)) b[r] = 1;
            rhs.push_back(std::move(b));
        }
        auto sol = linalg::solve(mat, rhs);
        if (sol.status == linalg::SolveStatus::Inconsistent) {
            if (s_max + 2 > s_cap)
                throw DomainError("plus_basis: m=" + std::to_string(m_list[sol.inconsistent_rhs]) +
                                  " not representable by the pool");
            s_max += 2;
            continue;
        }
        if (sol.status == linalg::SolveStatus::Underdetermined)
            throw DomainError("plus_basis: pool has dependent columns in weight " + std::to_string(k) + "+1/2");
        out.pool_s_max = s_max;

        for (std::size_t t = 0; t < m_list.size(); ++t) {
            long m = m_list[t];
            const auto& x = sol.x[t];
            std::string key = "basis:k=" + std::to_string(k) + ",m=" + std::to_string(m);
            QSeries f = memo().get(key, prec, [&](long p) {
                return with_precision(p, 4 * s_max + 8, [&](long w) {
                    std::vector<QSeries> parts;
                    std::size_t col = 0;
                    for (const auto& seed : seeds) {
                        long deg = -1;
                        for (long s = 0; s <= s_max; ++s)
                            if (sgn(x[col + s]) != 0) deg = s;
                        if (deg >= 0) {
                            long q = ceil_div(w + seed.m, 4) + deg + 2;
                            QSeries j = forms::cached_j(q);
                            std::vector<QSeries> jp{QSeries::constant(1, q + 1)};
                            for (long s = 1; s <= deg; ++s) jp.push_back(mul(jp.back(), j));
                            std::vector<ScaledTerm> terms;
                            for (long s = 0; s <= deg; ++s)
                                if (sgn(x[col + s]) != 0) terms.push_back({x[col + s], jp[s]});
                            QSeries poly = substitute_power(linear_combine(terms), 4);
                            parts.push_back(mul(seed_expansion(k, seed, w + 4 * deg + 4), poly));
                        }
                        col += s_max + 1;
                    }
                    std::vector<ScaledTerm> terms;
                    for (const auto& p : parts) terms.push_back({1, p});
                    return linear_combine(terms);
                }, "basis element");
            });
            check_element(k, m, f);
            out.elements.emplace(m, PlusForm(k, f));
        }
        return out;
    }
}

PlusForm basis_element(long k, long m, long prec) { return plus_basis(k, {m}, prec).elements.at(m); }

namespace {

QSeries g0_series(long prec) {
    return memo().get("plus:g0", prec, [](long p) {
        QSeries th = forms::cached_theta(p);
        QSeries e24 = forms::cached_e24(p);
        return mul(th, linear_combine({{1, pow_int(th, 4)}, {-20, e24}}));
    });
}

QSeries g1_series(long prec) {
    return memo().get("plus:g1", prec, [](long p) {
        return with_precision(p, 4, [](long w) {
            long q = ceil_div(w, 4) + 3;
            QSeries e4 = forms::cached_eisenstein(4, q), e6 = forms::cached_eisenstein(6, q);
            QSeries level1 = mul(mul(pow_int(e4, 2), e6), inv(forms::cached_discriminant(q + 1)));
            return mul(forms::cached_theta(w + 4), substitute_power(level1, 4));
        }, "g1");
    });
}

QSeries g2_series(long prec) {
    return memo().get("plus:g2", prec, [](long p) {
        return with_precision(p, 4, [](long w) {
            long q = ceil_div(w, 4) + 3;
            return mul(g0_series(w + 4), substitute_power(forms::cached_j(q), 4));
        }, "g2");
    });
}

QSeries h0_series(long prec) {
    return memo().get("plus:h0", prec, [](long p) {
        return with_precision(p, 8, [](long w) {
            QSeries th = forms::cached_theta(w + 4);
            QSeries e24 = forms::cached_e24(w + 4);
            QSeries th4 = pow_int(th, 4);
            QSeries a = linear_combine({{1, th4}, {-2, e24}});
            QSeries b = linear_combine({{1, th4}, {-16, e24}});
            QSeries num = mul(mul(mul(e24, th), a), b);
            long q = ceil_div(w, 4) + 3;
            QSeries level1 = mul(forms::cached_eisenstein(6, q), inv(forms::cached_discriminant(q + 1)));
            QSeries main = mul(num, substitute_power(level1, 4));
            return linear_combine({{1, main}, {56, th}});
        }, "h0");
    });
}

}  // namespace

bool is_plus_form_name(std::string_view name) {
    return name == "g0" || name == "g1" || name == "g2" || name == "h0" || name == "f4a" || name == "f4b" ||
           name == "f6half";
}

long plus_form_weight(std::string_view name) {
    if (name == "h0") return 0;
    if (name == "f6half") return 3;
    if (is_plus_form_name(name)) return 2;
    throw UsageError("unknown plus form " + std::string(name));
}

PlusForm named_plus_form(std::string_view name, long prec) {
    if (name == "g0") return PlusForm(2, g0_series(prec));
    if (name == "g1") return PlusForm(2, g1_series(prec));
    if (name == "g2") return PlusForm(2, g2_series(prec));
    if (name == "h0") return PlusForm(0, h0_series(prec));
    if (name == "f4a" || name == "f4b") {
        QSeries g0 = g0_series(prec), g1 = g1_series(prec), g2 = g2_series(prec);
        if (name == "f4a") return PlusForm(2, linear_combine({{frac(7, 8), g0}, {frac(1, 768), g1}, {frac(-1, 768), g2}}));
        return PlusForm(2, linear_combine({{frac(19, 18), g0}, {frac(-5, 648), g1}, {frac(-1, 648), g2}}));
    }
    if (name == "f6half") {
        PlusForm f1 = basis_element(3, 1, std::max(prec, 3L));
        Rational lifted = lifts::psi(f1).coefficient(1);
        Rational target = forms::named_form(forms::FormName::F6, 1).coefficient(1);
        if (sgn(lifted) == 0) throw std::logic_error("weight 7/2 basis element lifts to zero at q");
        QSeries s = (target / lifted) * f1.series();
        return PlusForm(3, s.truncated(prec));
    }
    throw UsageError("unknown plus form " + std::string(name));
}

}  // namespace magnetic::halfint
