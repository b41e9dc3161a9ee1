#include "magnetic/app/tasks.hpp"

#include "magnetic/app/table1.hpp"
#include "magnetic/arith.hpp"
#include "magnetic/forms.hpp"
#include "magnetic/halfint.hpp"
#include "magnetic/lifts.hpp"
#include "magnetic/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

namespace magnetic::app {

namespace {

using forms::FormName;
using halfint::PlusForm;

template <class Body>
Report run(const std::string& task, Json params, Body&& body) {
    Report r;
    r.task = task;
    r.parameters = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const PrecisionError& e) {
        r.precision_error = e.what();
    }
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string str(const Rational& r) { return to_string(r); }

// a and b agree on every exponent up to `through`.
bool same_through(const QSeries& a, const QSeries& b, long through, Json& d) {
    if (a.prec() < through || b.prec() < through)
        throw PrecisionError("comparison through q^" + std::to_string(through) + " but windows end at " +
                             std::to_string(a.prec()) + " and " + std::to_string(b.prec()));
    d["through"] = through;
    auto diff = first_difference(a.truncated(through), b.truncated(through));
    if (diff) {
        d["first_difference"] = *diff;
        d["lhs"] = str(a.coefficient_or_zero(*diff));
        d["rhs"] = str(b.coefficient_or_zero(*diff));
    }
    return !diff;
}

bool same(const QSeries& a, const QSeries& b, Json& d) {
    return same_through(a, b, std::min(a.prec(), b.prec()), d);
}

Json magnetic_json(const quasimod::MagneticReport& m) {
    Json d;
    d["order"] = m.order;
    if (m.prime) d["prime"] = m.prime;
    d["through"] = m.checked_through;
    if (m.exponent) {
        d["witness_exponent"] = *m.exponent;
        d["denominator"] = to_string(m.denominator);
    }
    return d;
}

Json integrality_json(const IntegralityReport& r) {
    Json d;
    d["from"] = r.checked_from;
    d["through"] = r.checked_through;
    if (r.exponent) {
        d["exponent"] = *r.exponent;
        d["denominator"] = to_string(r.denominator);
    }
    return d;
}

// All coefficients have p-adic valuation at least v.
bool divisible(const QSeries& f, long p, long v, Json& d) {
    d["modulus"] = std::to_string(p) + "^" + std::to_string(v);
    d["from"] = f.lead();
    d["through"] = f.prec();
    for (long n = f.lead(); n <= f.prec(); ++n) {
        const Rational& c = f.coefficient(n);
        if (sgn(c) == 0) continue;
        if (valuation(c, static_cast<unsigned long>(p)) < v) {
            d["exponent"] = n;
            d["coefficient"] = str(c);
            return false;
        }
    }
    return true;
}

QSeries random_series(std::mt19937& rng, long lead, long prec, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Rational> c;
    for (long n = lead; n <= prec; ++n) c.emplace_back(dist(rng));
    return QSeries(lead, std::move(c));
}

QSeries random_plus_series(std::mt19937& rng, long k, long lead, long prec, int bound) {
    QSeries f = random_series(rng, lead, prec, bound);
    return halfint::kohnen_project(f, k);
}

std::string principal_part_text(const QSeries& f) {
    if (f.lead() > 0) return "0";
    return to_string(f.truncated(0), 20);
}

}  // namespace

Report verify_th1(long prec) {
    return run("th1", {{"prec", prec}}, [&](Report& r) {
        for (FormName n : {FormName::F4a, FormName::F4b}) {
            auto m = quasimod::magnetic_check(forms::named_form(n, prec), 1);
            r.add("delta^-1 " + std::string(forms::symbol(n)) + " integral", m.ok, magnetic_json(m));
        }
    });
}

Report verify_th2(long prec) {
    return run("th2", {{"prec", prec}}, [&](Report& r) {
        QSeries f6 = forms::named_form(FormName::F6, prec);
        for (unsigned order : {1u, 2u}) {
            auto m = quasimod::magnetic_check(f6, order);
            r.add("delta^-" + std::to_string(order) + " F6 integral", m.ok, magnetic_json(m));
        }
    });
}

Report verify_identities(long prec) {
    return run("identities", {{"prec", prec}}, [&](Report& r) {
        QSeries e2 = forms::cached_eisenstein(2, prec), e4 = forms::cached_eisenstein(4, prec),
                e6 = forms::cached_eisenstein(6, prec);
        Json d;
        bool ok = same_through(delta(e2), frac(1, 12) * (mul(e2, e2) - e4), prec, d);
        r.add("delta E2 = (E2^2 - E4)/12", ok, d);
        d = Json::object();
        ok = same_through(delta(e4), frac(1, 3) * (mul(e2, e4) - e6), prec, d);
        r.add("delta E4 = (E2 E4 - E6)/3", ok, d);
        d = Json::object();
        ok = same_through(delta(e6), frac(1, 2) * (mul(e2, e6) - mul(e4, e4)), prec, d);
        r.add("delta E6 = (E2 E6 - E4^2)/2", ok, d);
        QSeries dp = forms::discriminant(prec), de = forms::discriminant_from_eisenstein(prec);
        d = Json::object();
        ok = same_through(dp, de, prec, d);
        r.add("q prod (1-q^n)^24 = (E4^3 - E6^2)/1728", ok, d);
        d = Json::object();
        ok = same_through(delta(dp), mul(e2, dp), prec, d);
        r.add("delta Delta = E2 Delta", ok, d);
        d = Json::object();
        ok = same_through(forms::e24_divisor_sum(prec), forms::e24_from_e2(prec), prec, d);
        r.add("E24 divisor sum = (-E2(q) + 3E2(q^2) - 2E2(q^4))/24", ok, d);
    });
}

Report verify_f4_lifts(long coeffs) {
    return run("f4", {{"coeffs", coeffs}}, [&](Report& r) {
        long prec = coeffs * coeffs;
        struct Case {
            const char* name;
            FormName lifted;
            Rational scale;
            std::map<long, Rational> reference;  // every term through q^4
        };
        std::vector<Case> cases = {
            {"f4a", FormName::F4a, 64, {{-3, frac(1, 64)}, {1, 1}, {4, -506}}},
            {"f4b", FormName::F4b, 108, {{-4, frac(-1, 108)}, {1, 1}, {4, 1222}}},
        };
        for (const auto& c : cases) {
            PlusForm f = halfint::named_plus_form(c.name, prec);
            Json d;
            bool ok = true;
            for (long n = std::min(-4L, f.series().lead()); n <= 4; ++n) {
                auto it = c.reference.find(n);
                Rational want = it == c.reference.end() ? Rational(0) : it->second;
                if (f.series().coefficient_or_zero(n) != want) {
                    ok = false;
                    d["exponent"] = n;
                    d["found"] = str(f.series().coefficient_or_zero(n));
                    d["reference"] = str(want);
                    break;
                }
            }
            d["expansion"] = to_string(f.series().truncated(4), 6);
            r.add(std::string(c.name) + " reference terms", ok, d);

            QSeries lift = lifts::psi(f);
            d = Json::object();
            ok = same_through(lift, forms::named_form(c.lifted, coeffs), coeffs, d);
            r.add("Psi(" + std::string(c.name) + ") = " + std::string(forms::symbol(c.lifted)), ok, d);

            QSeries scaled = c.scale * f.series();
            auto ir = integrality_check(scaled);
            r.add(str(c.scale) + " " + c.name + " integral", ir.ok, integrality_json(ir));

            // n | a(n^2) for n <= coeffs implies A(n)/n integral.
            bool premise = true;
            for (long n = 1; n <= coeffs && premise; ++n) {
                Rational a = scaled.coefficient(n * n) / n;
                premise = is_integral(a);
            }
            QSeries big = lifts::psi(scaled, f.k());
            bool conclusion = true;
            long bad = 0;
            for (long n = 1; n <= big.prec() && conclusion; ++n) {
                if (!is_integral(big.coefficient(n) / n)) {
                    conclusion = false;
                    bad = n;
                }
            }
            d = Json::object();
            d["premise"] = premise;
            d["conclusion"] = conclusion;
            if (!conclusion) d["exponent"] = bad;
            r.add("divisibility transfer for " + str(c.scale) + " " + c.name, !premise || conclusion, d);
        }
    });
}

Report verify_expansions() {
    return run("expansions", Json::object(), [&](Report& r) {
        auto z = [](const char* s) { return Rational(Integer(s)); };
        struct Case {
            const char* name;
            std::vector<std::pair<long, Rational>> reference;
        };
        std::vector<Case> cases = {
            {"g0",
             {{0, 1}, {1, -10}, {4, -70}, {5, -48}, {8, -120}, {9, -250}, {16, -550}, {25, -1210}, {36, -1750},
              {49, -3370}}},
            {"g1",
             {{-4, 1},
              {-3, 2},
              {0, 2},
              {4, -196884},
              {9, z("-85975040")},
              {16, z("-86169224844")},
              {25, z("-51186246451200")},
              {36, z("-35015148280961780")},
              {49, z("-21434928162930081792")}}},
            {"g2",
             {{-4, 1},
              {-3, -10},
              {0, 674},
              {1, -7488},
              {4, 144684},
              {9, z("-224574272")},
              {16, z("-42882054732")},
              {25, z("-63793268216640")},
              {36, z("-31501841125150388")},
              {49, z("-22385069000981561664")}}},
            {"h0", {{-3, 1}, {1, -248}, {4, 26752}}},
        };
        for (const auto& c : cases) {
            long top = c.reference.back().first;
            QSeries f = halfint::named_plus_form(c.name, top).series();
            Json d;
            bool ok = true;
            int matched = 0;
            for (const auto& [n, want] : c.reference) {
                if (f.coefficient_or_zero(n) != want) {
                    ok = false;
                    d["exponent"] = n;
                    d["found"] = str(f.coefficient_or_zero(n));
                    d["reference"] = str(want);
                    break;
                }
                ++matched;
            }
            d["matched"] = matched;
            r.add(std::string(c.name) + " reference coefficients", ok, d);
        }
    });
}

Report verify_raising(long coeffs) {
    return run("raising", {{"coeffs", coeffs}}, [&](Report& r) {
        long prec = coeffs;
        PlusForm theta(0, forms::cached_theta(prec));
        PlusForm h0 = halfint::named_plus_form("h0", prec);
        QSeries g0 = halfint::named_plus_form("g0", prec).series();
        QSeries f4a = halfint::named_plus_form("f4a", prec).series();
        QSeries f4b = halfint::named_plus_form("f4b", prec).series();

        Json d;
        bool ok = same_through(g0, Rational(-6) * halfint::raising(theta).series(), prec, d);
        r.add("g0 = -6 D theta", ok, d);

        d = Json::object();
        ok = same_through(Rational(64) * f4a, frac(-6, 19) * halfint::raising(h0).series(), prec, d);
        r.add("64 f4a = -(6/19) D h0", ok, d);

        long q = arith::ceil_div(prec, 4) + 3;
        QSeries e6 = forms::cached_eisenstein(6, q);
        QSeries level1 = mul(mul(e6, e6), inv(forms::cached_discriminant(q + 1)));
        QSeries extra = mul(forms::cached_theta(prec + 4), substitute_power(level1, 4));
        QSeries inner = linear_combine({{-3, h0.series()}, {2012, theta.series()}, {2, extra}});
        d = Json::object();
        ok = same_through(Rational(108) * f4b, frac(3, 25) * halfint::raising(PlusForm(0, inner)).series(), prec, d);
        if (!ok) {
            // Which combination x h0 + y theta + z theta E6(4t)^2/Delta(4t) does work.
            std::vector<QSeries> cols = {halfint::raising(h0).series(), halfint::raising(theta).series(),
                                         halfint::raising(PlusForm(0, extra.truncated(prec))).series()};
            long lo = std::min(-4L, f4b.lead());
            linalg::Matrix a(prec - lo + 1, 3);
            std::vector<Rational> b(prec - lo + 1);
            for (long n = lo; n <= prec; ++n) {
                for (std::size_t c = 0; c < 3; ++c) a(n - lo, c) = frac(3, 25) * cols[c].coefficient_or_zero(n);
                b[n - lo] = 108 * f4b.coefficient_or_zero(n);
            }
            auto sol = linalg::solve(a, {b});
            if (sol.status == linalg::SolveStatus::Unique)
                d["fitted_xyz"] = {str(sol.x[0][0]), str(sol.x[0][1]), str(sol.x[0][2])};
        }
        r.add("108 f4b = (3/25) D(-3 h0 + 2012 theta + 2 theta E6(4t)^2/Delta(4t))", ok, d);
    });
}

Report verify_hecke_layer(unsigned seed, int random_count, int phi_psi_count) {
    Json params{{"seed", seed}, {"random_count", random_count}, {"phi_psi_count", phi_psi_count}};
    return run("hecke", params, [&](Report& r) {
        std::mt19937 rng(seed);
        const long rprec = 400;

        // U_p V_p = id and the vanishing compositions.
        {
            bool uv = true, vchi = true, chiu = true;
            Json d;
            for (int t = 0; t < random_count; ++t) {
                long k = 2 + (t % 2);
                QSeries f = random_series(rng, -static_cast<long>(rng() % 13), rprec, 50);
                for (long p : {2L, 3L, 5L, 7L}) {
                    if (!(halfint::U_p(halfint::V_p(f, p), p) == f)) uv = false;
                    if (!halfint::chi_p(halfint::V_p(f, p * p), p, k).is_zero()) vchi = false;
                    if (!halfint::U_p(halfint::chi_p(f, p, k), p * p).is_zero()) chiu = false;
                }
            }
            d["series"] = random_count;
            d["primes"] = {2, 3, 5, 7};
            r.add("U_p V_p = id", uv, d);
            r.add("chi_p after V_{p^2} vanishes", vchi, d);
            r.add("U_{p^2} after chi_p vanishes", chiu, d);
        }

        // Named inputs for the lift identities.
        const long named_prec = 10000;
        std::vector<PlusForm> named = {halfint::named_plus_form("f4a", named_prec),
                                       halfint::named_plus_form("f4b", named_prec)};
        std::vector<PlusForm> randoms;
        for (int t = 0; t < random_count; ++t) {
            long k = 2 + (t % 2);
            randoms.emplace_back(k, random_plus_series(rng, k, -static_cast<long>(rng() % 13), 5000, 50));
        }

        // (a) Psi(f) | T_p^n = Psi(f | T_{p^2}^n).
        for (long p : {3L, 5L}) {
            for (unsigned n : {1u, 2u}) {
                auto check = [&](const PlusForm& f, Json& d) {
                    QSeries lhs = halfint::big_T_p_power(lifts::psi(f), 2 * f.k(), p, n);
                    QSeries rhs = lifts::psi(halfint::T_p2_power(f, p, n));
                    return same(lhs, rhs, d);
                };
                Json d;
                bool ok = check(named[0], d) && check(named[1], d);
                r.add("Psi equivariance on f4a, f4b, p=" + std::to_string(p) + " n=" + std::to_string(n), ok, d);
                d = Json::object();
                ok = true;
                for (const auto& f : randoms)
                    if (!check(f, d)) {
                        ok = false;
                        break;
                    }
                d["series"] = randoms.size();
                r.add("Psi equivariance on random series, p=" + std::to_string(p) + " n=" + std::to_string(n), ok, d);
            }
        }

        // (b) Psi(f) = Psi(f^sq).
        {
            Json d;
            bool ok = true;
            for (const auto* set : {&named, &randoms})
                for (const auto& f : *set) {
                    if (!same(lifts::psi(f), lifts::psi(lifts::square_part(f.series(), f.k()), f.k()), d)) ok = false;
                }
            r.add("Psi(f) = Psi(f^sq)", ok, d);
        }

        // (c) the square part commutes with U_{p^2}, V_{p^2}, chi_p.
        {
            bool ok_u = true, ok_v = true, ok_chi = true;
            for (int t = 0; t < random_count; ++t) {
                long k = 2 + (t % 2);
                QSeries f = random_series(rng, -static_cast<long>(rng() % 13), rprec, 50);
                QSeries sq = lifts::square_part(f, k);
                for (long p : {3L, 5L}) {
                    if (!(lifts::square_part(halfint::U_p(f, p * p), k) == halfint::U_p(sq, p * p))) ok_u = false;
                    if (!(lifts::square_part(halfint::V_p(f, p * p), k) == halfint::V_p(sq, p * p))) ok_v = false;
                    if (!(lifts::square_part(halfint::chi_p(f, p, k), k) == halfint::chi_p(sq, p, k))) ok_chi = false;
                }
            }
            Json d{{"series", random_count}};
            r.add("(f|U_{p^2})^sq = f^sq|U_{p^2}", ok_u, d);
            r.add("(f|V_{p^2})^sq = f^sq|V_{p^2}", ok_v, d);
            r.add("(f|chi_p)^sq = f^sq|chi_p", ok_chi, d);
        }

        // (d) f | T_{p^2} = f | U_{p^2} mod p for integral f and k >= 2.
        {
            std::vector<std::pair<long, QSeries>> inputs = {{2, Rational(64) * named[0].series()},
                                                            {2, Rational(108) * named[1].series()}};
            for (int t = 0; t < random_count; ++t) {
                long k = 2 + (t % 2);
                inputs.emplace_back(k, random_series(rng, -static_cast<long>(rng() % 13), rprec, 50));
            }
            Json d;
            bool ok = true;
            for (const auto& [k, f] : inputs) {
                for (long p : {3L, 5L}) {
                    QSeries diff = halfint::half_integral_hecke(f, k, p) - halfint::U_p(f, p * p);
                    if (!divisible(diff, p, 1, d)) ok = false;
                }
                if (!ok) break;
            }
            d["series"] = inputs.size();
            r.add("f|T_{p^2} = f|U_{p^2} mod p", ok, d);
        }

        // Phi(Psi(f)) = f^sq.
        {
            Json d;
            bool ok = true;
            for (int t = 0; t < phi_psi_count; ++t) {
                long k = 1 + (t % 4);
                QSeries f = random_series(rng, -static_cast<long>(rng() % 13), rprec, 50);
                QSeries lhs = lifts::phi(lifts::psi(f, k), k);
                QSeries rhs = lifts::square_part(f, k);
                if (!same_through(lhs, rhs, rprec, d)) {
                    ok = false;
                    d["k"] = k;
                    break;
                }
            }
            d["series"] = phi_psi_count;
            r.add("Phi(Psi(f)) = f^sq", ok, d);
        }
    });
}

Report verify_plus_congruences(long window) {
    return run("plus-congruences", {{"window", window}}, [&](Report& r) {
        for (long p : {3L, 5L, 7L}) {
            for (unsigned n : {1u, 2u}) {
                long pp = 1;
                for (unsigned i = 0; i < 2 * n; ++i) pp *= p;
                long prec = std::max(window * p * p, 10 * pp);
                PlusForm f = halfint::named_plus_form("f4a", prec);
                PlusForm g = halfint::T_p2_power(f, p, n);
                Json d;
                d["input_prec"] = prec;
                bool ok = divisible(g.series(), p, n, d);
                r.add("f4a|T_" + std::to_string(p * p) + "^" + std::to_string(n) + " = 0 mod " + std::to_string(p) +
                          "^" + std::to_string(n),
                      ok, d);
            }
        }
        for (unsigned n : {1u, 2u}) {
            long pp = n == 1 ? 25 : 625;
            long prec = std::max(window * 25, 10 * pp);
            PlusForm f = halfint::named_plus_form("f6half", prec);
            PlusForm g = halfint::T_p2_power(f, 5, n);
            Json d;
            d["input_prec"] = prec;
            bool ok = divisible(g.series(), 5, 2 * n, d);
            r.add("f6half|T_25^" + std::to_string(n) + " = 0 mod 5^" + std::to_string(2 * n), ok, d);
        }
    });
}

Report verify_strong_congruences(long prec) {
    return run("congruences", {{"prec", prec}}, [&](Report& r) {
        struct Case {
            FormName form;
            long power;
        };
        for (Case c : {Case{FormName::F4a, 1}, Case{FormName::F4b, 1}, Case{FormName::F6, 2}}) {
            QSeries f = forms::named_form(c.form, prec);
            for (long p : {2L, 3L, 5L, 7L}) {
                long pn = p;
                for (long n = 1; pn <= 64; ++n, pn *= p) {
                    auto rep = lifts::strong_magnetic_congruence_check(f, p, n, c.power);
                    Json d{{"through", rep.checked_through}};
                    if (rep.failing_exponent) d["exponent"] = *rep.failing_exponent;
                    if (rep.precondition_failed) d["precondition_failed"] = true;
                    r.add(std::string(forms::symbol(c.form)) + ": " + std::to_string(p) + "^" + std::to_string(n) +
                              " | m => " + std::to_string(p) + "^" + std::to_string(c.power * n) + " | A(m)",
                          rep.ok, d);
                }
            }
        }
    });
}

Report verify_t4_recursion(long coeffs) {
    return run("t4", {{"coeffs", coeffs}}, [&](Report& r) {
        long prec = 4 * coeffs + 3;
        for (long base : {3L, 4L}) {
            std::vector<long> ms{base, 4 * base, 16 * base};
            auto basis = halfint::plus_basis(2, ms, prec);
            auto g = [&](long idx) -> QSeries {
                if (idx < 0) return QSeries::zero(0, coeffs);
                return basis.elements.at(ms[idx]).series();
            };
            for (long rr : {0L, 1L}) {
                QSeries lhs = halfint::t4_prime(basis.elements.at(ms[rr])).series();
                QSeries rhs = linear_combine({{8, g(rr + 1)}, {1, g(rr - 1)}});
                Json d;
                bool ok = same_through(lhs, rhs, coeffs, d);
                if (!ok) d["residual_principal_part"] = principal_part_text((lhs - rhs).truncated(coeffs));
                r.add("m=" + std::to_string(base) + "*4^r family, r=" + std::to_string(rr) +
                          ": g_r|T4' = 8 g_{r+1} + g_{r-1}",
                      ok, d);
            }
        }
    });
}

Report run_table1(const std::vector<int>& rows, long coeffs, long magnetic_prec, bool extended) {
    Json params{{"rows", rows}, {"coeffs", coeffs}, {"magnetic_prec", magnetic_prec}, {"extended", extended}};
    return run("table1", params, [&](Report& r) {
        std::vector<const LiftTableRow*> selected;
        for (const auto& row : table1_rows()) {
            if (!rows.empty() && std::find(rows.begin(), rows.end(), row.id) == rows.end()) continue;
            if (row.extended && !extended) continue;
            selected.push_back(&row);
        }
        // One elimination per precision.
        long plain_prec = coeffs * coeffs;
        long hecke_prec = 4 * plain_prec + 3;
        std::set<long> plain_ms, hecke_ms;
        for (const auto* row : selected) (row->hecke.size() > 1 ? hecke_ms : plain_ms).insert(row->m);
        if (!plain_ms.empty()) halfint::plus_basis(2, {plain_ms.begin(), plain_ms.end()}, plain_prec);
        if (!hecke_ms.empty()) halfint::plus_basis(2, {hecke_ms.begin(), hecke_ms.end()}, hecke_prec);

        for (const auto* row : selected) {
            std::string tag = "row " + std::to_string(row->id) + " (" + row->label + ")";
            bool has_hecke = row->hecke.size() > 1;
            PlusForm f = halfint::basis_element(2, row->m, has_hecke ? hecke_prec : plain_prec);

            // hecke(T4') f, and the same polynomial in the unprojected T4.
            std::vector<QSeries> powers{f.series()}, raw{f.series()};
            for (std::size_t i = 1; i < row->hecke.size(); ++i) {
                raw.push_back(halfint::half_integral_hecke(powers.back(), 2, 2));
                powers.push_back(halfint::t4_prime(PlusForm(2, powers.back())).series());
            }
            auto combine = [&](const std::vector<QSeries>& v) {
                std::vector<ScaledTerm> terms;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (sgn(row->hecke[i]) != 0) terms.push_back({row->scale * row->hecke[i], v[i]});
                return linear_combine(terms);
            };
            QSeries h = combine(powers);
            QSeries lift = lifts::psi(h, 2);
            if (has_hecke) {
                Json d;
                bool ok = same(lift, lifts::psi(combine(raw), 2), d);
                r.add(tag + ": Psi through T4 equals Psi through T4'", ok, d);
            }
            QSeries expected = forms::expand(row->expected, coeffs);
            Json d;
            bool ok = same_through(lift, expected, coeffs, d);
            if (!ok) {
                Json neg;
                if (same_through(lift, -expected, coeffs, neg)) d["note"] = "matches the negated right-hand side";
            }
            r.add(tag + ": lift", ok, d);

            auto m = quasimod::magnetic_check(forms::expand(row->expected, magnetic_prec), 1);
            r.add(tag + ": right-hand side strongly magnetic", m.ok, magnetic_json(m));
        }
    });
}

Report verify_magnetic_family(long prec, long hk_prec) {
    return run("family", {{"prec", prec}, {"hk_prec", hk_prec}}, [&](Report& r) {
        QSeries e2 = forms::cached_eisenstein(2, prec);
        for (int j : {4, 6}) {
            QSeries ej = forms::cached_eisenstein(j, prec);
            QSeries log_der = divide(delta(ej), ej);
            QSeries e2m = QSeries::constant(1, prec);
            for (int m = 1; m <= 6; ++m) {
                e2m = mul(e2m, e2);
                auto rep = quasimod::magnetic_check(mul(e2m, log_der), 1);
                std::string name = "E2^" + std::to_string(m) + " (delta E" + std::to_string(j) + ")/E" +
                                   std::to_string(j);
                if (m == 5) r.add(name + " not strongly magnetic", !rep.ok, magnetic_json(rep));
                else r.add(name + " strongly magnetic", rep.ok, magnetic_json(rep));
            }
        }
        auto ls8 = quasimod::magnetic_check(forms::named_form(FormName::LS8, hk_prec), 2);
        r.add("LS8 doubly magnetic", ls8.ok, magnetic_json(ls8));
        auto t8 = quasimod::magnetic_check(forms::named_form(FormName::Triple8, hk_prec), 3);
        r.add("Triple8 triply magnetic", t8.ok, magnetic_json(t8));

        for (FormName n : {FormName::HK_num1, FormName::HK_num2}) {
            QSeries f = forms::named_form(n, hk_prec);
            for (long p : {5L, 11L, 17L, 23L, 29L, 41L, 47L}) {
                auto rep = quasimod::magnetic_check(f, 1, p);
                r.add("delta^-1 " + std::string(forms::symbol(n)) + " " + std::to_string(p) + "-integral", rep.ok,
                      magnetic_json(rep));
            }
            Json failing = Json::array();
            for (long p : arith::primes_up_to(50))
                if (p % 6 == 1 && !quasimod::magnetic_check(f, 1, p).ok) failing.push_back(p);
            r.add("delta^-1 " + std::string(forms::symbol(n)) + " fails for some p = 1 mod 6", !failing.empty(),
                  {{"failing_primes", failing}});
        }
    });
}

Report verify_ode(long prec) {
    return run("ode", {{"prec", prec}}, [&](Report& r) {
        QSeries e4 = forms::cached_eisenstein(4, prec + 2);
        auto zero_check = [&](const std::string& name, const QSeries& v) {
            Json d{{"through", v.prec()}};
            if (auto n = v.valuation_if_any()) {
                d["exponent"] = *n;
                d["coefficient"] = str(v.coefficient(*n));
            }
            r.add(name, v.is_zero() && v.prec() >= prec, d);
        };
        zero_check("D E4 = 0", forms::specific_D_apply(e4).truncated(prec));
        zero_check("D_5 (delta E4) = 0", forms::hk_operator_apply(delta(e4), 5).truncated(prec));
        QSeries second = mul(e4, antiderivative(forms::named_form(FormName::F4a, prec + 2)));
        zero_check("D (E4 delta^-1 F4a) = 0", forms::specific_D_apply(second).truncated(prec));
        auto ir = integrality_check(second);
        r.add("E4 delta^-1 F4a integral", ir.ok, integrality_json(ir));
    });
}

Report run_misc(long prec) {
    return run("misc", {{"prec", prec}}, [&](Report& r) {
        r.merge(verify_raising(100));
        r.merge(verify_ode(300));
        r.merge(verify_magnetic_family(prec, 800));
    });
}

std::vector<quasimod::QuasiElement> sweep_elements(int weight) {
    using quasimod::QuasiElement;
    std::vector<QuasiElement> out;
    if (weight == 4) {
        for (long a = 0; a <= 2; ++a)
            for (long b = -4; b <= 4; ++b)
                for (long c = -4; c <= 4; ++c)
                    if (2 * a + 4 * b + 6 * c == 4 && !(a == 0 && b == 1 && c == 0))
                        out.push_back(QuasiElement::monomial(a, b, c) - QuasiElement::monomial(0, 1, 0));
    } else if (weight == 6) {
        for (long a = 0; a <= 4; ++a)
            for (long b = -6; b <= 6; ++b)
                for (long c = 0; c <= 4; ++c)
                    if (2 * a + 4 * b + 6 * c == 6 && !(a == 0 && b == 0 && c == 1))
                        out.push_back(QuasiElement::monomial(a, b, c) - QuasiElement::monomial(0, 0, 1));
    } else {
        throw UsageError("sweeps exist for weights 4 and 6");
    }
    return out;
}

Report run_sweep(int weight, long cert_prec, long magnetic_prec) {
    Json params{{"weight", weight}, {"cert_prec", cert_prec}, {"magnetic_prec", magnetic_prec}};
    return run(weight == 4 ? "w4" : "w6", params, [&](Report& r) {
        for (const auto& v : sweep_elements(weight)) {
            auto cert = weight == 4 ? quasimod::reduce_weight4(v) : quasimod::reduce_weight6(v);
            auto cc = quasimod::verify_certificate(cert, cert_prec);
            Json d{{"through", cc.checked_through}, {"delta_part", quasimod::to_string(cert.delta_part)}};
            Json gens = Json::object();
            for (const auto& [name, c] : cert.gens) gens[name] = str(c);
            d["generators"] = gens;
            d["mu"] = str(cert.mu);
            if (cc.first_mismatch) d["first_mismatch"] = *cc.first_mismatch;
            std::string text = quasimod::to_string(v);
            r.add(text + ": certificate", cc.ok(), d);

            // Magnetic: bounded denominators, with the bound read off the certificate.
            std::vector<Rational> coeffs;
            for (const auto& [name, c] : cert.gens) coeffs.push_back(c);
            for (const auto& [m, c] : cert.delta_part.terms()) coeffs.push_back(c);
            Integer scale = lcm_of_denominators(coeffs);
            QSeries s = quasimod::expand(v, magnetic_prec);
            auto strict = quasimod::magnetic_check(s, 1);
            auto scaled = strict.ok ? strict : quasimod::magnetic_check(Rational(scale) * s, 1);
            Json md = magnetic_json(scaled);
            md["scale"] = to_string(scale);
            md["strongly_magnetic"] = strict.ok;
            r.add(text + ": magnetic", scaled.ok, md);
        }
    });
}

const std::vector<std::string>& verify_ids() {
    static const std::vector<std::string> ids = {"th1",  "th2",    "w4",     "w6",          "identities",
                                                 "f4", "expansions", "raising", "hecke", "plus-congruences",
                                                 "congruences", "t4", "family", "ode"};
    return ids;
}

Report run_verify(const std::string& id, long prec) {
    auto or_default = [&](long d) { return prec > 0 ? prec : d; };
    if (id == "th1") return verify_th1(or_default(2000));
    if (id == "th2") return verify_th2(or_default(2000));
    if (id == "w4" || id == "th:w4") return run_sweep(4, 300, or_default(500));
    if (id == "w6" || id == "th:w6") return run_sweep(6, 300, or_default(500));
    if (id == "identities") return verify_identities(or_default(1000));
    if (id == "f4") return verify_f4_lifts(or_default(100));
    if (id == "expansions") return verify_expansions();
    if (id == "raising") return verify_raising(or_default(100));
    if (id == "hecke") return verify_hecke_layer();
    if (id == "plus-congruences") return verify_plus_congruences(or_default(200));
    if (id == "congruences") return verify_strong_congruences(or_default(2000));
    if (id == "t4") return verify_t4_recursion(or_default(100));
    if (id == "family") return verify_magnetic_family(or_default(1000), 800);
    if (id == "ode") return verify_ode(or_default(300));
    throw UsageError("unknown verification '" + id + "'");
}

}  // namespace magnetic::app
