#pragma once

#include <complex>
#include <map>
#include <string>

#include "bc/expr.hpp"

namespace bc {

using Complex = std::complex<double>;

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Principal-branch numeric evaluation consistent with the defining-cut
// table conventions. Evaluation at a pole returns an infinite/NaN complex
// rather than throwing; unbound parameters throw EvalError.
Complex eval_numeric(const Expr& e, Complex z,
                     const std::map<std::string, double>& params = {});

// Principal-branch evaluation of one registered function symbol.
Complex eval_function(const std::string& name, Complex w,
                      const std::vector<double>& fn_params = {});

// Bessel function of the first kind, complex argument, real order; power
// series with principal (w/2)^a. Accurate for moderate |w|.
Complex bessel_j(double order, Complex w);

}  // namespace bc
