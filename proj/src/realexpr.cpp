#include "bc/realexpr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bc {

namespace {
RealExpr node(RealExprNode n) { return std::make_shared<const RealExprNode>(std::move(n)); }
}  // namespace

RealExpr re_const(Rat v) {
    RealExprNode n;
    n.kind = RealExprNode::Const;
    n.value = std::move(v);
    return node(std::move(n));
}

RealExpr re_surd(Rat k) {
    Rat q(1);
    normalize_surd(q, k);
    RealExprNode n;
    n.kind = RealExprNode::SurdConst;
    n.value = std::move(k);
    if (n.value == 1) return re_const(q);
    RealExpr surd = node(std::move(n));
    if (q == 1) return surd;
    return re_mul({re_const(q), std::move(surd)});
}

RealExpr re_var() {
    RealExprNode n;
    n.kind = RealExprNode::Var;
    return node(std::move(n));
}

RealExpr re_add(std::vector<RealExpr> terms) {
    if (terms.size() == 1) return terms[0];
    RealExprNode n;
    n.kind = RealExprNode::Add;
    n.children = std::move(terms);
    return node(std::move(n));
}

RealExpr re_mul(std::vector<RealExpr> factors) {
    // Flatten nested products and fold rational constants into one factor.
    std::vector<RealExpr> flat;
    Rat c(1);
    auto absorb = [&](const RealExpr& f, auto&& self) -> void {
        if (f->kind == RealExprNode::Const)
            c *= f->value;
        else if (f->kind == RealExprNode::Mul)
            for (const auto& ch : f->children) self(ch, self);
        else
            flat.push_back(f);
    };
    for (const auto& f : factors) absorb(f, absorb);
    if (c == 0) return re_const(Rat(0));
    if (flat.empty()) return re_const(c);
    if (c != 1) flat.insert(flat.begin(), re_const(c));
    if (flat.size() == 1) return flat[0];
    RealExprNode n;
    n.kind = RealExprNode::Mul;
    n.children = std::move(flat);
    return node(std::move(n));
}

RealExpr re_div(RealExpr a, RealExpr b) {
    if (b->kind == RealExprNode::Const && b->value == 1) return a;
    RealExprNode n;
    n.kind = RealExprNode::Div;
    n.a = std::move(a);
    n.b = std::move(b);
    return node(std::move(n));
}

RealExpr re_sqrt(RealExpr a) {
    RealExprNode n;
    n.kind = RealExprNode::Sqrt;
    n.a = std::move(a);
    return node(std::move(n));
}

RealExpr re_neg(RealExpr a) { return re_mul({re_const(Rat(-1)), std::move(a)}); }

RealExpr re_from_poly(const UnivariatePoly& p) {
    if (p.is_zero()) return re_const(Rat(0));
    if (p.degree() == 0) return re_const(p.coeff(0));
    std::vector<RealExpr> terms;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeff(i);
        if (c == 0) continue;
        std::vector<RealExpr> fs;
        if (c != 1 || i == 0) fs.push_back(re_const(c));
        for (int j = 0; j < i; ++j) fs.push_back(re_var());
        terms.push_back(re_mul(std::move(fs)));
    }
    return re_add(std::move(terms));
}

double re_eval(const RealExpr& e, double t) {
    switch (e->kind) {
        case RealExprNode::Const: return to_double(e->value);
        case RealExprNode::SurdConst: return std::sqrt(to_double(e->value));
        case RealExprNode::Var: return t;
        case RealExprNode::Add: {
            double s = 0.0;
            for (const auto& c : e->children) s += re_eval(c, t);
            return s;
        }
        case RealExprNode::Mul: {
            double s = 1.0;
            for (const auto& c : e->children) s *= re_eval(c, t);
            return s;
        }
        case RealExprNode::Div: {
            double d = re_eval(e->b, t);
            if (d == 0.0) return NAN;
            return re_eval(e->a, t) / d;
        }
        case RealExprNode::Sqrt: {
            double r = re_eval(e->a, t);
            if (r < 0.0) return NAN;
            return std::sqrt(r);
        }
    }
    return NAN;
}

namespace {
// Precedence: add=1, mul=2, atom=3.
void str_rec(const RealExpr& e, std::ostringstream& os, const std::string& var,
             int parent) {
    switch (e->kind) {
        case RealExprNode::Const: {
            bool needs = e->value < 0 && parent >= 2;
            if (needs) os << "(";
            os << to_string(e->value);
            if (needs) os << ")";
            break;
        }
        case RealExprNode::SurdConst:
            os << "sqrt(" << to_string(e->value) << ")";
            break;
        case RealExprNode::Var:
            os << var;
            break;
        case RealExprNode::Add: {
            if (parent >= 2) os << "(";
            bool first = true;
            for (const auto& c : e->children) {
                std::ostringstream term;
                str_rec(c, term, var, 1);
                std::string t = term.str();
                if (!first) os << (t.rfind('-', 0) == 0 ? " - " : " + ");
                os << (!first && t.rfind('-', 0) == 0 ? t.substr(1) : t);
                first = false;
            }
            if (parent >= 2) os << ")";
            break;
        }
        case RealExprNode::Mul: {
            if (parent >= 3) os << "(";
            const auto& ch = e->children;
            size_t i = 0;
            bool first = true;
            // A leading negative constant prints as a sign.
            if (!ch.empty() && ch[0]->kind == RealExprNode::Const && ch[0]->value < 0) {
                os << "-";
                if (ch[0]->value != -1 || ch.size() == 1) {
                    os << to_string(-ch[0]->value);
                    first = false;
                }
                i = 1;
            }
            for (; i < ch.size(); ++i) {
                if (!first) os << "*";
                // Runs of the variable print as a power.
                if (ch[i]->kind == RealExprNode::Var) {
                    size_t j = i;
                    while (j + 1 < ch.size() && ch[j + 1]->kind == RealExprNode::Var) ++j;
                    os << var;
                    if (j > i) os << "^" << (j - i + 1);
                    i = j;
                } else {
                    str_rec(ch[i], os, var, 2);
                }
                first = false;
            }
            if (parent >= 3) os << ")";
            break;
        }
        case RealExprNode::Div: {
            if (parent >= 3) os << "(";
            str_rec(e->a, os, var, 3);
            os << "/";
            str_rec(e->b, os, var, 3);
            if (parent >= 3) os << ")";
            break;
        }
        case RealExprNode::Sqrt:
            os << "sqrt(";
            str_rec(e->a, os, var, 0);
            os << ")";
            break;
    }
}
}  // namespace

std::string re_str(const RealExpr& e, const std::string& var) {
    std::ostringstream os;
    str_rec(e, os, var, 0);
    return os.str();
}

bool re_equal(const RealExpr& a, const RealExpr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case RealExprNode::Const:
        case RealExprNode::SurdConst: return a->value == b->value;
        case RealExprNode::Var: return true;
        case RealExprNode::Add:
        case RealExprNode::Mul:
            if (a->children.size() != b->children.size()) return false;
            for (size_t i = 0; i < a->children.size(); ++i)
                if (!re_equal(a->children[i], b->children[i])) return false;
            return true;
        case RealExprNode::Div:
            return re_equal(a->a, b->a) && re_equal(a->b, b->b);
        case RealExprNode::Sqrt: return re_equal(a->a, b->a);
    }
    return false;
}

int re_sqrt_depth(const RealExpr& e) {
    switch (e->kind) {
        case RealExprNode::Add:
        case RealExprNode::Mul: {
            int d = 0;
            for (const auto& c : e->children) d = std::max(d, re_sqrt_depth(c));
            return d;
        }
        case RealExprNode::Div:
            return std::max(re_sqrt_depth(e->a), re_sqrt_depth(e->b));
        case RealExprNode::Sqrt: return 1 + re_sqrt_depth(e->a);
        default: return 0;
    }
}

}  // namespace bc
