#pragma once

#include "magnetic/app/report.hpp"
#include "magnetic/quasimod.hpp"

#include <string>
#include <vector>

namespace magnetic::app {

// delta^-1 F4a and delta^-1 F4b integral.
Report verify_th1(long prec = 2000);
// delta^-1 F6 and delta^-2 F6 integral.
Report verify_th2(long prec = 2000);
// Ramanujan system, delta Delta = E2 Delta, both Delta and both E24 constructions.
Report verify_identities(long prec = 1000);
// f4a, f4b: reference terms, lifts, integrality of 64 f4a and 108 f4b, divisibility transfer.
Report verify_f4_lifts(long coeffs = 100);
// Reference coefficients of g0, g1, g2, h0.
Report verify_expansions();
// The three relations for the raising operator.
Report verify_raising(long coeffs = 100);
// Operator identities for U, V, chi, T, the lift and the square part on named and random series.
Report verify_hecke_layer(unsigned seed = 20240601, int random_count = 50, int phi_psi_count = 100);
// f4a | T_{p^2}^n = 0 mod p^n, f6half | T_25^n = 0 mod 5^{2n}; inputs known through max(window p^2, 10 p^{2n}).
Report verify_plus_congruences(long window = 200);
// p^n | m implies p^{power n} | A(m) for F4a, F4b (power 1) and F6 (power 2), p^n <= 64.
Report verify_strong_congruences(long prec = 2000);
// g_r | T4' = 8 g_{r+1} + g_{r-1} in the families q^{-3*4^r} and q^{-4*4^r} of weight 5/2.
Report verify_t4_recursion(long coeffs = 100);
// Lift table rows; rows flagged extended are skipped unless extended is set.
Report run_table1(const std::vector<int>& rows, long coeffs = 60, long magnetic_prec = 500, bool extended = false);
// E2^m (delta E_j)/E_j, LS8, Triple8 and the p-integral antiderivatives.
Report verify_magnetic_family(long prec = 1000, long hk_prec = 800);
// Solutions of the differential equations D and D_5.
Report verify_ode(long prec = 300);
// Raising relations, ODE checks and the closing examples.
Report run_misc(long prec = 1000);
// Reduce every sweep element, verify its certificate and its magnetic property.
Report run_sweep(int weight, long cert_prec = 300, long magnetic_prec = 500);

// Elements of the documented sweeps: f(a,b,c) - f(0,1,0) with a <= 2, |b|,|c| <= 4 in weight 4;
// f(a,b,c) - f(0,0,1) with a <= 4, |b| <= 6, 0 <= c <= 4 in weight 6. Zero differences are left out.
std::vector<quasimod::QuasiElement> sweep_elements(int weight);

// Dispatch by name: th1 th2 w4 w6 identities f4 expansions raising hecke plus-congruences congruences t4 family ode.
Report run_verify(const std::string& id, long prec);
const std::vector<std::string>& verify_ids();

}  // namespace magnetic::app
