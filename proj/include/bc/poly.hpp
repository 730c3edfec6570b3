#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bc/interval.hpp"
#include "bc/rational.hpp"

namespace bc {

// Dense univariate polynomial over Q, coefficients low to high.
class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UnivariatePoly constant(Rat v) { return UnivariatePoly({std::move(v)}); }
    static UnivariatePoly monomial(int deg, Rat v = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const { return c_.back(); }

    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator-() const;
    UnivariatePoly scaled(const Rat& s) const;
    bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }

    // Division in Q[t]; throws on zero divisor.
    std::pair<UnivariatePoly, UnivariatePoly> divrem(const UnivariatePoly& d) const;
    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;

    Rat eval(const Rat& t) const;
    double eval(double t) const;
    // Evaluation at p + q*sqrt(k), exact arithmetic in Q(sqrt(k)).
    std::pair<Rat, Rat> eval_surd(const Rat& p, const Rat& q, const Rat& k) const;

    UnivariatePoly gcd(const UnivariatePoly& o) const;
    UnivariatePoly square_free_part() const;

    // Primitive integer form with positive leading coefficient.
    UnivariatePoly canonicalized() const;

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<Rat> c_;
    void trim();
};

// One isolated real root of a squarefree polynomial.
struct IsolatedRoot {
    Rat lo, hi;        // lo <= root <= hi; lo == hi for exact rational roots
    double approx;
    std::optional<Endpoint> exact;  // set when recognized as rational or quadratic surd
};

// Distinct real roots via squarefree decomposition plus Descartes-bound
// bisection; exact roots are recognized where possible (rationals and
// +-sqrt of a rational, optionally shifted).
std::vector<IsolatedRoot> isolate_real_roots(const UnivariatePoly& p);

// Shrink an isolating interval below the requested width.
void refine_root(const UnivariatePoly& squarefree, IsolatedRoot& r, const Rat& width);

// Resultant of two polynomials in Q[t] (Sylvester determinant).
Rat resultant(const UnivariatePoly& f, const UnivariatePoly& g);

// Sparse bivariate polynomial over Q in variables x, y.
class BivariatePoly {
  public:
    using Key = std::pair<int, int>;  // (deg_x, deg_y)

    BivariatePoly() = default;
    static BivariatePoly constant(Rat v);
    static BivariatePoly monomial(int dx, int dy, Rat v = Rat(1));
    static BivariatePoly x() { return monomial(1, 0); }
    static BivariatePoly y() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }
    int degree_x() const;
    int degree_y() const;
    int total_degree() const;

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator-() const;
    BivariatePoly scaled(const Rat& s) const;
    BivariatePoly pow(int n) const;
    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

    double eval(double xv, double yv) const;
    Rat eval(const Rat& xv, const Rat& yv) const;

    // Coefficients as polynomials in the other variable; index = degree in
    // `in_x ? x : y`.
    std::vector<UnivariatePoly> coeffs_in(bool in_x) const;
    static BivariatePoly from_coeffs_in(bool in_x, const std::vector<UnivariatePoly>& cs);

    UnivariatePoly substitute_x(const Rat& xv) const;  // -> poly in y
    UnivariatePoly substitute_y(const Rat& yv) const;  // -> poly in x

    // Primitive integer coefficients, positive leading coefficient under
    // graded lex (x > y). The project-wide canonical form.
    BivariatePoly canonicalized() const;
    // Largest monomial factor x^a y^b; returns (a, b) and the cofactor.
    std::tuple<int, int, BivariatePoly> extract_monomial() const;

    std::string str() const;

  private:
    std::map<Key, Rat> terms_;
    void set(const Key& k, Rat v);
    friend BivariatePoly mul_impl(const BivariatePoly&, const BivariatePoly&);
};

// Resultant eliminating `x` (when eliminate_x) of f and g, a polynomial in
// the surviving variable. Computed by exact interpolation.
UnivariatePoly bivariate_resultant(const BivariatePoly& f, const BivariatePoly& g,
                                   bool eliminate_x);

}  // namespace bc
