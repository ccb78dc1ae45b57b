#pragma once

#include <string>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

enum class Parity { even, odd };

// A rational theta characteristic [eps; eps'] of genus g: two g-vectors of
// exact rationals. The top vector shifts the summation lattice, the bottom
// shifts the argument; both enter the series halved (classical convention).
struct Characteristic {
    std::vector<Rational> top;
    std::vector<Rational> bottom;

    Characteristic() = default;
    Characteristic(std::vector<Rational> t, std::vector<Rational> b);

    static Characteristic zeros(int g);
    static Characteristic from_ints(const std::vector<int>& t, const std::vector<int>& b);

    // Text format "a,b,...;c,d,..." with entries as integers or fractions,
    // top before ';'. Example: "1,0;1/2,0".
    static Characteristic parse(const std::string& text);
    std::string str() const;

    int genus() const { return static_cast<int>(top.size()); }
    bool is_integral() const;
    bool is_reduced() const; // integral with all entries in {0,1}

    bool operator==(const Characteristic& o) const { return top == o.top && bottom == o.bottom; }
};

struct ReducedCharacteristic {
    Characteristic ch;
    RootOfUnity phase; // Theta[input] == phase * Theta[ch], as functions of z
};

// Shift reduction for integral characteristics into {0,1}^2g. The phase is
// exp(i pi eps_red . e) where the subtracted shifts are 2m (top) and 2e
// (bottom). Throws not_integral.
ReducedCharacteristic reduce_characteristic(const Characteristic& ch);

// Same reduction for arbitrary rational characteristics: entries land in
// [0,2), shifts are still even integers, and the phase exponent is rational.
ReducedCharacteristic reduce_mod2(const Characteristic& ch);

// Canonical representative for theta *constants* only: reduces mod 2 and, if
// the negated-bottom reduction is lexicographically smaller, uses it (valid
// at z = 0 where Theta[eps;-eps'](0) = Theta[eps;eps'](0)).
ReducedCharacteristic canonical_null_form(const Characteristic& ch);

// Parity of a reduced integral characteristic: even iff eps'.eps = 0 mod 2.
// Odd characteristics have identically vanishing theta constants. Throws
// not_reduced.
Parity parity(const Characteristic& ch);

} // namespace theta
