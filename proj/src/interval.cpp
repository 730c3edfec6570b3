#include "bc/interval.hpp"

#include <sstream>

namespace bc {

bool Endpoint::same_as(const Endpoint& o) const {
    if (kind != o.kind) return false;
    if (kind != Finite) return true;
    if (approx || o.approx)
        return std::abs(value() - o.value()) <= 1e-9 * (1 + std::abs(value()));
    return p == o.p && q == o.q && (q == 0 || k == o.k);
}

std::string Endpoint::str() const {
    switch (kind) {
        case NegInf: return "-inf";
        case PosInf: return "inf";
        default: break;
    }
    if (approx) {
        std::ostringstream os;
        os << "~" << approx_value;
        return os.str();
    }
    if (q == 0) return to_string(p);
    std::ostringstream os;
    if (p != 0) os << to_string(p) << (q > 0 ? "+" : "");
    if (q == Rat(1))
        ;
    else if (q == Rat(-1))
        os << "-";
    else
        os << to_string(q) << "*";
    os << "sqrt(" << to_string(k) << ")";
    return os.str();
}

std::string ExtendedInterval::str() const {
    std::ostringstream os;
    os << (lo_open ? "(" : "[") << lo.str() << ", " << hi.str()
       << (hi_open ? ")" : "]");
    return os.str();
}

}  // namespace bc
