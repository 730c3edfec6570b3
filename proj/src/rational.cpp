#include "bc/rational.hpp"

#include <sstream>

namespace bc {

std::optional<Rat> rational_reconstruct(double x, long long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    double a = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(a);
        if (fl > 9e17 || fl < -9e17) break;
        long long ai = static_cast<long long>(fl);
        long long p2 = ai * p1 + p0;
        long long q2 = ai * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x)))
            return Rat(Int(p1), Int(q1));
        double frac = a - fl;
        if (frac < 1e-15) break;
        a = 1.0 / frac;
    }
    return std::nullopt;
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}

}  // namespace bc

namespace bc {

std::pair<Int, Int> extract_square(Int n) {
    Int s = 1;
    if (n <= 1) return {s, n};
    for (Int d = 2; d <= 1000 && d * d <= n; ++d) {
        while (n % (d * d) == 0) {
            n /= d * d;
            s *= d;
        }
    }
    Int r = sqrt(n);
    if (r * r == n) {
        s *= r;
        n = 1;
    }
    return {s, n};
}

void normalize_surd(Rat& q, Rat& k) {
    // q*sqrt(a/b) = (q/b)*sqrt(a*b)
    Int a = num(k), b = den(k);
    Int m = a * b;
    auto [s, kk] = extract_square(m);
    q = q * Rat(s, b);
    k = Rat(kk);
}

}  // namespace bc
