#include "bc/eval.hpp"

#include <cmath>

namespace bc {

namespace {

const double kPi = 3.14159265358979323846;

Complex pow_rational(Complex b, const Rat& e) {
    if (is_integer(e)) {
        long long n = num(e).convert_to<long long>();
        if (n == 0) return {1.0, 0.0};
        Complex r{1.0, 0.0};
        Complex base = n > 0 ? b : 1.0 / b;
        long long k = std::llabs(n);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }
    return std::exp(to_double(e) * std::log(b));
}

}  // namespace

Complex bessel_j(double order, Complex w) {
    if (w == Complex(0.0, 0.0))
        return order == 0.0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    // (w/2)^a with the principal branch carries the cut for non-integer a.
    Complex half = w / 2.0;
    Complex term = std::exp(order * std::log(half)) / std::tgamma(order + 1.0);
    if (!std::isfinite(std::tgamma(order + 1.0))) {
        // Negative integer-ish order: use lgamma continuation via the series
        // starting index; fall back to reflection for exact negative integers.
        double r = std::round(order);
        if (std::abs(order - r) < 1e-12 && r < 0) {
            Complex v = bessel_j(-order, w);
            return (std::fmod(-r, 2.0) == 0.0) ? v : -v;
        }
    }
    Complex sum = term;
    Complex m2 = -half * half;
    for (int k = 1; k < 80; ++k) {
        term *= m2 / (static_cast<double>(k) * (order + k));
        sum += term;
        if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

Complex eval_function(const std::string& name, Complex w,
                      const std::vector<double>& fn_params) {
    if (name == "log") return std::log(w);
    if (name == "exp") return std::exp(w);
    if (name == "sin") return std::sin(w);
    if (name == "cos") return std::cos(w);
    if (name == "arcsin") return std::asin(w);
    if (name == "arccos") return std::acos(w);
    if (name == "arctan") return std::atan(w);
    if (name == "arccot") return Complex(kPi / 2.0, 0.0) - std::atan(w);
    if (name == "arcsinh") return std::asinh(w);
    if (name == "arccosh") return std::acosh(w);
    if (name == "arctanh") return std::atanh(w);
    if (name == "arccoth") return std::atanh(1.0 / w);
    if (name == "BesselJ") {
        if (fn_params.empty()) throw EvalError("BesselJ requires a bound order");
        return bessel_j(fn_params[0], w);
    }
    throw EvalError("no numeric evaluation for function: " + name);
}

Complex eval_numeric(const Expr& e, Complex z,
                     const std::map<std::string, double>& params) {
    switch (e->kind) {
        case ExprKind::Const:
            return {to_double(e->value.re), to_double(e->value.im)};
        case ExprKind::Var:
            return z;
        case ExprKind::Param: {
            auto it = params.find(e->name);
            if (it == params.end())
                throw EvalError("unbound parameter: " + e->name);
            return {it->second, 0.0};
        }
        case ExprKind::Add: {
            Complex s{0.0, 0.0};
            for (const auto& c : e->children) s += eval_numeric(c, z, params);
            return s;
        }
        case ExprKind::Mul: {
            Complex s{1.0, 0.0};
            for (const auto& c : e->children) s *= eval_numeric(c, z, params);
            return s;
        }
        case ExprKind::Pow:
            return pow_rational(eval_numeric(e->base, z, params), e->exponent);
        case ExprKind::Apply: {
            std::vector<double> fp;
            for (const auto& p : e->fn_params) {
                Complex v = eval_numeric(p, z, params);
                fp.push_back(v.real());
            }
            return eval_function(e->fn.name, eval_numeric(e->base, z, params), fp);
        }
    }
    throw EvalError("unreachable expression kind");
}

}  // namespace bc
