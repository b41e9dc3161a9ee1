#pragma once

#include "magnetic/forms.hpp"

#include <string>
#include <vector>

namespace magnetic::app {

// Psi(scale * f_m | hecke(T4')) = E4^e N(j) / D(j)^r, with f_m = q^{-m} + O(q) in weight 5/2.
struct LiftTableRow {
    int id = 0;
    Rational scale;
    long m = 0;
    std::vector<Rational> hecke;  // polynomial in T4', increasing degree
    forms::JQuotient expected;
    bool extended = false;  // needs the large f_43, f_67, f_163 pools
    std::string label;
};

const std::vector<LiftTableRow>& table1_rows();

}  // namespace magnetic::app
