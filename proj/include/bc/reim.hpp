#pragma once

#include "bc/expr.hpp"
#include "bc/poly.hpp"

namespace bc {

// Exact real/imaginary decomposition of a rational function of z at
// z = x + i y: value = (re_num + i*im_num) / den with den = |denominator|^2
// real and nonnegative. For polynomial input den == 1.
struct ReImParts {
    BivariatePoly re_num;
    BivariatePoly im_num;
    BivariatePoly den;
};

struct NotRational : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ReImParts re_im_parts(const Expr& e);

}  // namespace bc
