#include "surgerylab/slope.hpp"

#include <stdexcept>

namespace surgerylab {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Slope::Slope(Int a, Int b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("slope: (0,0) is undefined");
    }
    Int g = gcd_int(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    num_ = std::move(a);
    den_ = std::move(b);
}

std::string Slope::str() const {
    if (is_infinity()) return "∞";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Slope Slope::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("slope: empty string");
    if (text == "∞" || text == "inf") return infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Slope(Int(text), 1);
        }
        Int a(text.substr(0, slash));
        Int b(text.substr(slash + 1));
        return Slope(a, b);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("slope: cannot parse '" + text + "'");
    }
}

std::strong_ordering Slope::operator<=>(const Slope& other) const {
    if (is_infinity() && other.is_infinity()) return std::strong_ordering::equal;
    if (is_infinity()) return std::strong_ordering::greater;
    if (other.is_infinity()) return std::strong_ordering::less;
    Int lhs = num_ * other.den_;
    Int rhs = other.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Slope normalize_slope(const Int& a, const Int& b) { return Slope(a, b); }

Int geometric_intersection(const Slope& s, const Slope& t) {
    Int d = s.numerator() * t.denominator() - s.denominator() * t.numerator();
    return d < 0 ? Int(-d) : d;
}

Slope chain_slope_map(const Slope& s) {
    // p/q -> (p-q)/q; q = 0 gives back ∞.
    return Slope(s.numerator() - s.denominator(), s.denominator());
}

Slope factor_knot_slope(const Int& r) { return Slope(r, 2); }

}  // namespace surgerylab
