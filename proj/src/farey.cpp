#include "torusknot/farey.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace torusknot {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int floor_div(Int a, Int b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

std::string Slope::str() const {
    if (is_infinite()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Slope make_slope(Int num, Int den) {
    if (num == 0 && den == 0) throw std::invalid_argument("0/0 is not a slope");
    if (den == 0) return infinity();
    Int g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    return Slope{num, den};
}

Slope infinity() { return Slope{1, 0}; }

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "infinity") return infinity();
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            Int n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return make_slope(n, 1);
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        Int n = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        Int d = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return make_slope(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed slope '" + text + "'");
    }
}

Int dot(const Slope& a, const Slope& b) {
    return checked_sub(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

Slope farey_sum(const Slope& a, const Slope& b) {
    return make_slope(checked_add(a.num, b.num), checked_add(a.den, b.den));
}

Slope farey_diff(const Slope& a, const Slope& b) {
    Int n = checked_sub(a.num, b.num), d = checked_sub(a.den, b.den);
    if (n == 0 && d == 0) throw std::domain_error("Farey difference of a slope with itself");
    return make_slope(n, d);
}

bool is_edge(const Slope& a, const Slope& b) {
    Int d = dot(a, b);
    return d == 1 || d == -1;
}

bool strictly_between(const Slope& a, const Slope& m, const Slope& b) {
    Int ab = dot(a, b);
    if (ab == 0) return false;
    Int am = dot(a, m), mb = dot(m, b);
    auto sgn = [](Int x) { return (x > 0) - (x < 0); };
    return sgn(am) == sgn(ab) && sgn(mb) == sgn(ab);
}

namespace {

// Expansion of x < -1 with digits <= -2: a = floor(x), x <- 1/(a - x).
std::vector<Int> expand_negative(Int num, Int den) {
    std::vector<Int> digits;
    while (true) {
        Int a = floor_div(num, den);
        digits.push_back(a);
        Int rem = checked_sub(checked_mul(a, den), num);  // (a - x) * den
        if (rem == 0) break;
        // 1 / (a - x) = den / rem, with rem < 0 so the next value is < -1.
        Int n2 = den, d2 = rem;
        if (d2 < 0) {
            n2 = -n2;
            d2 = -d2;
        }
        num = n2;
        den = d2;
    }
    return digits;
}

}  // namespace

CFExpansion cf_expand(const Slope& r) {
    if (r.is_infinite()) throw std::domain_error("continued fraction of infinity");
    if (r.num > -r.den && r.num < r.den) throw std::domain_error("continued fraction needs |r| > 1, got " + r.str());
    if (r.num == r.den || r.num == -r.den) throw std::domain_error("continued fraction needs |r| > 1, got " + r.str());
    CFExpansion e;
    if (r.num < 0) {
        e.regime = Regime::negative;
        e.digits = expand_negative(r.num, r.den);
        return e;
    }
    e.regime = Regime::positive;
    Int a1 = floor_div(r.num, r.den);
    e.digits.push_back(a1);
    Int rem = checked_sub(checked_mul(a1, r.den), r.num);
    if (rem != 0) {
        // r = a1 - 1/y with y = 1/(a1 - r) = den / rem < -1.
        auto tail = expand_negative(-r.den, -rem);
        e.digits.insert(e.digits.end(), tail.begin(), tail.end());
    }
    return e;
}

Slope cf_value(const std::vector<Int>& digits) {
    if (digits.empty()) return infinity();
    Int num = digits.back(), den = 1;
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        Int n2 = checked_sub(checked_mul(*it, num), den);
        den = num;
        num = n2;
    }
    return make_slope(num, den);
}

Slope cf_value(const CFExpansion& e) { return cf_value(e.digits); }

Slope clockwise_neighbor(const Slope& r) {
    auto e = cf_expand(r);
    e.digits.back() = checked_add(e.digits.back(), 1);
    return cf_value(e.digits);
}

Slope anticlockwise_neighbor(const Slope& r) {
    auto e = cf_expand(r);
    e.digits.pop_back();
    return cf_value(e.digits);
}

std::vector<Int> upper_digits(const Slope& r) {
    if (r.is_infinite()) throw std::domain_error("no solid torus count at infinity");
    if (r.num < 0) return cf_expand(r).digits;
    // (1/r - 1)^-1 = num / (den - num).
    return cf_expand(make_slope(r.num, checked_sub(r.den, r.num))).digits;
}

std::vector<Int> lower_digits(const Slope& r) {
    if (r.is_infinite()) throw std::domain_error("no solid torus count at infinity");
    if (r.is_integer()) return {};
    Int c = ceil_div(r.num, r.den);
    // (r - c)^-1 = den / (num - c den).
    return cf_expand(make_slope(r.den, checked_sub(r.num, checked_mul(c, r.den)))).digits;
}

namespace {

Int upper_product(const std::vector<Int>& d) {
    if (d.empty()) return 1;
    Int prod = 1;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) prod = checked_mul(prod, checked_add(d[i], 1));
    return std::llabs(checked_mul(prod, d.back()));
}

}  // namespace

Int tight_count_solid_torus_upper(const Slope& r) { return upper_product(upper_digits(r)); }

Int tight_count_solid_torus_lower(const Slope& r) { return upper_product(lower_digits(r)); }

}  // namespace torusknot
