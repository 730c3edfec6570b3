#include "bc/expr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bc/defining_cuts.hpp"

namespace bc {

namespace {

Expr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

}  // namespace

Expr make_const(GaussRat v) {
    ExprNode n;
    n.kind = ExprKind::Const;
    n.value = std::move(v);
    return node(std::move(n));
}

Expr make_const(Rat v) { return make_const(GaussRat(std::move(v))); }
Expr make_int(long long v) { return make_const(GaussRat(Rat(v))); }

Expr make_var(std::string name) {
    ExprNode n;
    n.kind = ExprKind::Var;
    n.name = std::move(name);
    return node(std::move(n));
}

Expr make_param(std::string name) {
    ExprNode n;
    n.kind = ExprKind::Param;
    n.name = std::move(name);
    return node(std::move(n));
}

Expr make_add(std::vector<Expr> terms) {
    if (terms.size() == 1) return terms[0];
    ExprNode n;
    n.kind = ExprKind::Add;
    n.children = std::move(terms);
    return node(std::move(n));
}

Expr make_mul(std::vector<Expr> factors) {
    if (factors.size() == 1) return factors[0];
    ExprNode n;
    n.kind = ExprKind::Mul;
    n.children = std::move(factors);
    return node(std::move(n));
}

Expr make_pow(Expr base, Rat exponent) {
    if (exponent == 1) return base;
    ExprNode n;
    n.kind = ExprKind::Pow;
    n.base = std::move(base);
    n.exponent = std::move(exponent);
    return node(std::move(n));
}

Expr make_apply(FunctionSymbol fn, Expr arg, std::vector<Expr> params) {
    ExprNode n;
    n.kind = ExprKind::Apply;
    n.fn = std::move(fn);
    n.base = std::move(arg);
    n.fn_params = std::move(params);
    return node(std::move(n));
}

Expr make_neg(Expr e) {
    // The sign folds into an existing constant so that "-1/2*u", which
    // unparse emits for Mul(-1/2, u), reparses to the identical tree.
    if (e->kind == ExprKind::Const) return make_const(-e->value);
    if (e->kind == ExprKind::Mul && !e->children.empty() &&
        e->children.front()->kind == ExprKind::Const) {
        std::vector<Expr> kids = e->children;
        kids.front() = make_const(-kids.front()->value);
        return make_mul(std::move(kids));
    }
    return make_mul({make_int(-1), std::move(e)});
}
Expr make_sub(Expr a, Expr b) { return make_add({std::move(a), make_neg(std::move(b))}); }
Expr make_div(Expr a, Expr b) {
    // Constant quotients collapse so that unparse("1/2") reparses to the
    // same Const node.
    if (a->kind == ExprKind::Const && b->kind == ExprKind::Const &&
        !b->value.is_zero())
        return make_const(a->value * b->value.inv());
    return make_mul({std::move(a), make_pow(std::move(b), Rat(-1))});
}
Expr make_sqrt(Expr e) { return make_pow(std::move(e), Rat(1, 2)); }

namespace {

// Precedence levels: add=1, mul=2, unary=3, pow=4, atom=5.
void unparse_rec(const Expr& e, std::ostringstream& os, int parent_prec);

void paren(const Expr& e, std::ostringstream& os, int prec, int parent_prec,
           const std::function<void()>& body) {
    (void)e;
    if (prec < parent_prec) {
        os << "(";
        body();
        os << ")";
    } else {
        body();
    }
}

void unparse_const(const GaussRat& v, std::ostringstream& os, int parent_prec) {
    auto one_part = [&](const Rat& r, bool imag) {
        std::ostringstream t;
        bool neg = r < 0;
        Rat a = neg ? Rat(-r) : r;
        if (imag && a == 1)
            t << "i";
        else {
            t << to_string(a);
            if (imag) t << "*i";
        }
        return std::pair<bool, std::string>(neg, t.str());
    };
    if (v.im == 0 || v.re == 0) {
        bool imag = v.re == 0 && v.im != 0;
        auto [neg, s] = one_part(imag ? v.im : v.re, imag);
        int prec = neg ? 3 : (imag && v.im != 1 ? 2 : 5);
        if (v.is_zero()) { os << "0"; return; }
        if (prec < parent_prec) os << "(";
        if (neg) os << "-";
        os << s;
        if (prec < parent_prec) os << ")";
        return;
    }
    if (1 < parent_prec) os << "(";
    auto [negr, sr] = one_part(v.re, false);
    if (negr) os << "-";
    os << sr;
    auto [negi, si] = one_part(v.im, true);
    os << (negi ? " - " : " + ") << si;
    if (1 < parent_prec) os << ")";
}

void unparse_rec(const Expr& e, std::ostringstream& os, int parent_prec) {
    switch (e->kind) {
        case ExprKind::Const:
            unparse_const(e->value, os, parent_prec);
            break;
        case ExprKind::Var:
        case ExprKind::Param:
            os << e->name;
            break;
        case ExprKind::Add: {
            if (1 < parent_prec) os << "(";
            bool first = true;
            for (const auto& c : e->children) {
                // Render (-1)*u factors and negative constants as subtraction.
                bool neg = false;
                Expr t = c;
                if (c->kind == ExprKind::Mul && !c->children.empty() &&
                    c->children[0]->kind == ExprKind::Const &&
                    c->children[0]->value == GaussRat(Rat(-1))) {
                    neg = true;
                    std::vector<Expr> rest(c->children.begin() + 1, c->children.end());
                    t = make_mul(std::move(rest));
                } else if (c->kind == ExprKind::Const && c->value.is_real() &&
                           c->value.re < 0) {
                    neg = true;
                    t = make_const(GaussRat(-c->value.re));
                }
                if (first) {
                    if (neg) os << "-";
                } else {
                    os << (neg ? " - " : " + ");
                }
                unparse_rec(t, os, 2);
                first = false;
            }
            if (1 < parent_prec) os << ")";
            break;
        }
        case ExprKind::Mul: {
            if (2 < parent_prec) os << "(";
            bool first = true;
            for (const auto& c : e->children) {
                if (!first) os << "*";
                unparse_rec(c, os, 3);
                first = false;
            }
            if (2 < parent_prec) os << ")";
            break;
        }
        case ExprKind::Pow: {
            if (e->exponent == Rat(1, 2)) {
                os << "sqrt(";
                unparse_rec(e->base, os, 0);
                os << ")";
                break;
            }
            if (4 < parent_prec) os << "(";
            unparse_rec(e->base, os, 5);
            os << "^";
            if (is_integer(e->exponent) && e->exponent >= 0)
                os << to_string(e->exponent);
            else
                os << "(" << to_string(e->exponent) << ")";
            if (4 < parent_prec) os << ")";
            break;
        }
        case ExprKind::Apply: {
            os << e->fn.name << "(";
            for (const auto& p : e->fn_params) {
                unparse_rec(p, os, 0);
                os << ", ";
            }
            unparse_rec(e->base, os, 0);
            os << ")";
            break;
        }
    }
}

}  // namespace

std::string unparse(const Expr& e) {
    std::ostringstream os;
    unparse_rec(e, os, 0);
    return os.str();
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Const: return a->value == b->value;
        case ExprKind::Var:
        case ExprKind::Param: return a->name == b->name;
        case ExprKind::Add:
        case ExprKind::Mul: {
            if (a->children.size() != b->children.size()) return false;
            for (size_t i = 0; i < a->children.size(); ++i)
                if (!expr_equal(a->children[i], b->children[i])) return false;
            return true;
        }
        case ExprKind::Pow:
            return a->exponent == b->exponent && expr_equal(a->base, b->base);
        case ExprKind::Apply: {
            if (!(a->fn == b->fn) || a->fn_params.size() != b->fn_params.size())
                return false;
            for (size_t i = 0; i < a->fn_params.size(); ++i)
                if (!expr_equal(a->fn_params[i], b->fn_params[i])) return false;
            return expr_equal(a->base, b->base);
        }
    }
    return false;
}

bool contains_var(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Var: return true;
        case ExprKind::Const:
        case ExprKind::Param: return false;
        case ExprKind::Add:
        case ExprKind::Mul:
            return std::any_of(e->children.begin(), e->children.end(),
                               [](const Expr& c) { return contains_var(c); });
        case ExprKind::Pow: return contains_var(e->base);
        case ExprKind::Apply: {
            if (contains_var(e->base)) return true;
            return std::any_of(e->fn_params.begin(), e->fn_params.end(),
                               [](const Expr& c) { return contains_var(c); });
        }
    }
    return false;
}

namespace {
void collect_params(const Expr& e, std::set<std::string>& out) {
    switch (e->kind) {
        case ExprKind::Param: out.insert(e->name); break;
        case ExprKind::Add:
        case ExprKind::Mul:
            for (const auto& c : e->children) collect_params(c, out);
            break;
        case ExprKind::Pow: collect_params(e->base, out); break;
        case ExprKind::Apply:
            collect_params(e->base, out);
            for (const auto& c : e->fn_params) collect_params(c, out);
            break;
        default: break;
    }
}
}  // namespace

std::vector<std::string> free_params(const Expr& e) {
    std::set<std::string> s;
    collect_params(e, s);
    return {s.begin(), s.end()};
}

bool is_rational_in_var(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
        case ExprKind::Var: return true;
        case ExprKind::Param: return false;  // parameters stay out of the exact layer
        case ExprKind::Add:
        case ExprKind::Mul:
            return std::all_of(e->children.begin(), e->children.end(),
                               [](const Expr& c) { return is_rational_in_var(c); });
        case ExprKind::Pow:
            return is_integer(e->exponent) && is_rational_in_var(e->base);
        case ExprKind::Apply: return false;
    }
    return false;
}

bool is_radical_in_var(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
        case ExprKind::Var: return true;
        case ExprKind::Param: return false;
        case ExprKind::Add:
        case ExprKind::Mul:
            return std::all_of(e->children.begin(), e->children.end(),
                               [](const Expr& c) { return is_radical_in_var(c); });
        case ExprKind::Pow: return is_radical_in_var(e->base);
        case ExprKind::Apply: return false;
    }
    return false;
}

namespace {
void collect_cut_bearing(const Expr& e, const std::string& path,
                         std::vector<CutBearingSubterm>& out) {
    switch (e->kind) {
        case ExprKind::Add:
        case ExprKind::Mul:
            for (size_t i = 0; i < e->children.size(); ++i)
                collect_cut_bearing(e->children[i], path + "." + std::to_string(i), out);
            break;
        case ExprKind::Pow:
            if (!is_integer(e->exponent) && contains_var(e->base))
                out.push_back({e, path});
            collect_cut_bearing(e->base, path + ".base", out);
            break;
        case ExprKind::Apply: {
            if (contains_var(e->base) &&
                DefiningCutTable::instance().has_cuts(e->fn) != Tri::No)
                out.push_back({e, path});
            collect_cut_bearing(e->base, path + ".arg", out);
            break;
        }
        default: break;
    }
}
}  // namespace

std::vector<CutBearingSubterm> cut_bearing_subterms(const Expr& e) {
    std::vector<CutBearingSubterm> out;
    collect_cut_bearing(e, "e", out);
    return out;
}

}  // namespace bc

namespace bc {
namespace {
GaussRat gpow(GaussRat b, long long n) {
    bool inv = n < 0;
    if (inv) n = -n;
    GaussRat r{Rat(1)};
    while (n-- > 0) r = r * b;
    return inv ? r.inv() : r;
}
}  // namespace

Expr fold_constants(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
        case ExprKind::Var:
        case ExprKind::Param:
            return e;
        case ExprKind::Add: {
            GaussRat c;
            std::vector<Expr> rest;
            for (const auto& ch : e->children) {
                Expr f = fold_constants(ch);
                if (f->kind == ExprKind::Const)
                    c = c + f->value;
                else if (f->kind == ExprKind::Add) {
                    for (const auto& g : f->children) {
                        if (g->kind == ExprKind::Const)
                            c = c + g->value;
                        else
                            rest.push_back(g);
                    }
                } else
                    rest.push_back(std::move(f));
            }
            if (rest.empty()) return make_const(c);
            if (!c.is_zero()) rest.push_back(make_const(c));
            if (rest.size() == 1) return rest[0];
            return make_add(std::move(rest));
        }
        case ExprKind::Mul: {
            GaussRat c{Rat(1)};
            std::vector<Expr> rest;
            for (const auto& ch : e->children) {
                Expr f = fold_constants(ch);
                if (f->kind == ExprKind::Const)
                    c = c * f->value;
                else if (f->kind == ExprKind::Mul) {
                    for (const auto& g : f->children) {
                        if (g->kind == ExprKind::Const)
                            c = c * g->value;
                        else
                            rest.push_back(g);
                    }
                } else
                    rest.push_back(std::move(f));
            }
            if (c.is_zero() || rest.empty()) return make_const(c);
            if (rest.size() == 1 && rest[0]->kind == ExprKind::Add &&
                !(c == GaussRat(Rat(1)))) {
                // Distribute a constant over a lone sum.
                std::vector<Expr> terms;
                for (const auto& t : rest[0]->children)
                    terms.push_back(fold_constants(make_mul({make_const(c), t})));
                return fold_constants(make_add(std::move(terms)));
            }
            if (!(c == GaussRat(Rat(1)))) rest.insert(rest.begin(), make_const(c));
            if (rest.size() == 1) return rest[0];
            return make_mul(std::move(rest));
        }
        case ExprKind::Pow: {
            Expr b = fold_constants(e->base);
            if (e->exponent == 1) return b;
            if (b->kind == ExprKind::Const && is_integer(e->exponent) &&
                !(b->value.is_zero() && e->exponent < 0)) {
                Rat ex = e->exponent;
                if (ex >= -16 && ex <= 16)
                    return make_const(gpow(b->value, ex.convert_to<long long>()));
            }
            return make_pow(std::move(b), e->exponent);
        }
        case ExprKind::Apply: {
            std::vector<Expr> ps;
            for (const auto& p : e->fn_params) ps.push_back(fold_constants(p));
            return make_apply(e->fn, fold_constants(e->base), std::move(ps));
        }
    }
    return e;
}

}  // namespace bc
