#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace surgerylab {

using Int = boost::multiprecision::cpp_int;

/// A surgery slope: an element of Q ∪ {∞} stored as a coprime pair with
/// non-negative denominator.  ∞ is represented by (1,0) and 0 by (0,1),
/// so equality of slopes is equality of representatives.
class Slope {
public:
    Slope() : num_(0), den_(1) {}

    /// Normalizes an arbitrary pair (a,b) != (0,0).  Throws
    /// std::invalid_argument on (0,0), which is not a slope.
    Slope(Int a, Int b);

    static Slope infinity() { return Slope(1, 0); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_infinity() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Renders as "p/q", the bare integer when q = 1, or "∞".
    std::string str() const;

    /// Inverse of str(); also accepts "inf" and unreduced "a/b" input.
    static Slope parse(const std::string& text);

    bool operator==(const Slope&) const = default;

    /// Orders by value on Q, with ∞ greatest.  Used for canonical
    /// ordering of filling multisets.
    std::strong_ordering operator<=>(const Slope& other) const;

private:
    Int num_;
    Int den_;
};

/// Normalized slope from an integer pair; rejects (0,0).
Slope normalize_slope(const Int& a, const Int& b);

/// Minimal geometric intersection number |p s' - q r'| of p/q and r'/s'.
Int geometric_intersection(const Slope& s, const Slope& t);

/// The peripheral change of coordinates p/q -> (p-q)/q between the
/// surgery description on the augmented pretzel link and the chain-link
/// exterior; fixes ∞ and sends -1/k to -(k+1)/k.
Slope chain_slope_map(const Slope& s);

/// Slope induced on the order-two factor knot by integer r-surgery
/// upstairs: r/2 in normalized form.
Slope factor_knot_slope(const Int& r);

}  // namespace surgerylab
