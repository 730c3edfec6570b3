#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace bc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline int sign(const Rat& r) { return r.sign(); }

// Continued-fraction reconstruction of a nearby rational with bounded
// denominator. Returns nothing if no candidate matches within tol.
std::optional<Rat> rational_reconstruct(double x, long long max_den = 1000000,
                                        double tol = 1e-9);

std::string to_string(const Rat& r);

// n = s^2 * k with k free of small square factors; returns (s, k). n >= 0.
std::pair<Int, Int> extract_square(Int n);

// Normalize q*sqrt(k) (k > 0 rational) so that k becomes a positive integer
// with no small square factors; k == 1 means the value is the rational q.
void normalize_surd(Rat& q, Rat& k);

// Gaussian rational a + b*i.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }
    GaussRat inv() const {
        Rat n = norm2();
        return {re / n, -im / n};
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
};

}  // namespace bc
