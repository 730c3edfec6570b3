#include "bc/reim.hpp"

namespace bc {

namespace {

// Complex bivariate value A + iB over a complex denominator C + iD.
struct CFrac {
    BivariatePoly a, b;  // numerator
    BivariatePoly c, d;  // denominator

    static CFrac from(BivariatePoly re, BivariatePoly im) {
        return {std::move(re), std::move(im), BivariatePoly::constant(Rat(1)), {}};
    }
};

CFrac add(const CFrac& u, const CFrac& v) {
    // (a+ib)/(c+id) + (a'+ib')/(c'+id')
    BivariatePoly na = u.a * v.c - u.b * v.d + v.a * u.c - v.b * u.d;
    BivariatePoly nb = u.a * v.d + u.b * v.c + v.a * u.d + v.b * u.c;
    BivariatePoly nc = u.c * v.c - u.d * v.d;
    BivariatePoly nd = u.c * v.d + u.d * v.c;
    return {na, nb, nc, nd};
}

CFrac mul(const CFrac& u, const CFrac& v) {
    return {u.a * v.a - u.b * v.b, u.a * v.b + u.b * v.a,
            u.c * v.c - u.d * v.d, u.c * v.d + u.d * v.c};
}

CFrac inv(const CFrac& u) { return {u.c, u.d, u.a, u.b}; }

CFrac convert(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
            return CFrac::from(BivariatePoly::constant(e->value.re),
                               BivariatePoly::constant(e->value.im));
        case ExprKind::Var:
            return CFrac::from(BivariatePoly::x(), BivariatePoly::y());
        case ExprKind::Add: {
            CFrac acc = convert(e->children[0]);
            for (size_t i = 1; i < e->children.size(); ++i)
                acc = add(acc, convert(e->children[i]));
            return acc;
        }
        case ExprKind::Mul: {
            CFrac acc = convert(e->children[0]);
            for (size_t i = 1; i < e->children.size(); ++i)
                acc = mul(acc, convert(e->children[i]));
            return acc;
        }
        case ExprKind::Pow: {
            if (!is_integer(e->exponent))
                throw NotRational("non-integer power in rational-function context");
            long long n = num(e->exponent).convert_to<long long>();
            CFrac base = convert(e->base);
            if (n < 0) {
                base = inv(base);
                n = -n;
            }
            CFrac acc = CFrac::from(BivariatePoly::constant(Rat(1)), {});
            for (long long i = 0; i < n; ++i) acc = mul(acc, base);
            return acc;
        }
        default:
            throw NotRational("expression is not rational in the variable: " +
                              unparse(e));
    }
}

}  // namespace

ReImParts re_im_parts(const Expr& e) {
    CFrac f = convert(e);
    // Multiply numerator by the denominator's conjugate: real denominator
    // |c + id|^2.
    ReImParts out;
    out.re_num = f.a * f.c + f.b * f.d;
    out.im_num = f.b * f.c - f.a * f.d;
    out.den = f.c * f.c + f.d * f.d;
    if (out.den.is_zero()) throw NotRational("zero denominator");
    return out;
}

}  // namespace bc
