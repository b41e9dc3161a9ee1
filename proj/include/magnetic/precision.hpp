#pragma once

#include "magnetic/qseries.hpp"

#include <string>

namespace magnetic {

// Runs build(working) with growing working precision until the result is
// known through target, then truncates. Each operation tracks precision
// honestly, so the loop only ever widens the input.
template <class Build>
QSeries with_precision(long target, long margin, Build&& build, const char* what = "series") {
    for (int attempt = 0; attempt < 12; ++attempt) {
        QSeries r = build(target + margin);
        if (r.prec() >= target) return r.truncated(target);
        margin += (target - r.prec()) + 1;
    }
    throw PrecisionError(std::string("could not reach requested precision for ") + what);
}

}  // namespace magnetic
