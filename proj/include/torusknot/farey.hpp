#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace torusknot {

using Int = std::int64_t;

// Overflow-checked integer arithmetic. Every engine computation routes its
// products and sums through these so a silent wrap can never reach output.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

// A reduced fraction num/den with den >= 0. Infinity is the single value 1/0.
struct Slope {
    Int num = 1;
    Int den = 0;

    bool is_infinite() const { return den == 0; }
    bool is_integer() const { return den == 1; }
    std::string str() const;

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;
};

Slope make_slope(Int num, Int den);
Slope infinity();
Slope parse_slope(const std::string& text);

// a/b . c/d = ad - bc on canonical representatives.
Int dot(const Slope& a, const Slope& b);

Slope farey_sum(const Slope& a, const Slope& b);
Slope farey_diff(const Slope& a, const Slope& b);
bool is_edge(const Slope& a, const Slope& b);

// True when m lies in the open arc spanned by positive combinations of the
// canonical vectors of a and b (the arc containing a (+) b).
bool strictly_between(const Slope& a, const Slope& m, const Slope& b);

enum class Regime { negative, positive };

struct CFExpansion {
    std::vector<Int> digits;
    Regime regime = Regime::negative;

    friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

// Negative regime for r < -1: every digit <= -2.
// Positive regime for r > 1: first digit floor(r), later digits <= -2.
// Both read r = a1 - 1/(a2 - 1/(... - 1/am)).
CFExpansion cf_expand(const Slope& r);
Slope cf_value(const CFExpansion& e);
Slope cf_value(const std::vector<Int>& digits);

// Neighbours of r along the two minimal paths leaving r. The clockwise one
// increments the last digit, the anticlockwise one drops it. An expansion of
// length one has no digit to drop, so the anticlockwise neighbour of an
// integer is the terminal vertex infinity.
Slope clockwise_neighbor(const Slope& r);
Slope anticlockwise_neighbor(const Slope& r);

// Digits governing the solid torus whose meridian is 0. For r < -1 this is
// the expansion of r, for r > 1 the expansion of (1/r - 1)^-1.
std::vector<Int> upper_digits(const Slope& r);
// Digits governing the solid torus whose meridian is infinity: the expansion
// of (r - ceil(r))^-1. Empty for integers.
std::vector<Int> lower_digits(const Slope& r);

// |(a1+1)...(a_{m-1}+1) a_m| over upper_digits(r).
Int tight_count_solid_torus_upper(const Slope& r);
// |(b1+1)...(b_{n-1}+1) b_n| over lower_digits(r); 1 for integers.
Int tight_count_solid_torus_lower(const Slope& r);

}  // namespace torusknot
