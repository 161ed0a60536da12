#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "clut/errors.hpp"

namespace clut {

// Exact non-negative rational, always stored normalized: q >= 1, gcd(p,q) = 1.
// Complexity values live in [0,1]; the type itself allows any value >= 0.
// Rendered as "p/q" (so 1 prints as "1/1" and 0 as "0/1").
struct Rational {
    long long p = 0;
    long long q = 1;

    Rational() = default;
    Rational(long long num, long long den) : p(num), q(den) {
        if (den == 0) throw InputError("rational with zero denominator");
        if (den < 0) { p = -p; q = -q; }
        if (p < 0) throw InputError("negative rational not supported here");
        long long g = std::gcd(p, q);
        if (g > 1) { p /= g; q /= g; }
        if (p == 0) q = 1;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.p) * b.q;
        __int128 r = static_cast<__int128>(b.p) * a.q;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

    static Rational parse(const std::string& s) {
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                size_t pos = 0;
                long long v = std::stoll(s, &pos);
                if (pos != s.size()) throw InputError("trailing characters in rational '" + s + "'");
                return Rational(v, 1);
            }
            size_t pa = 0, pb = 0;
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            long long a = std::stoll(num, &pa);
            long long b = std::stoll(den, &pb);
            if (pa != num.size() || pb != den.size())
                throw InputError("trailing characters in rational '" + s + "'");
            return Rational(a, b);
        } catch (const std::invalid_argument&) {
            throw InputError("cannot parse rational '" + s + "'");
        } catch (const std::out_of_range&) {
            throw InputError("rational out of range '" + s + "'");
        }
    }
};

// Exact comparison of a rational against the quadratic-irrational lower bound
// 1 / (t - 2*sqrt(s)) with integers t >= 0, s >= 0 and t - 2*sqrt(s) > 0.
// Entirely in integer arithmetic:
//   p/q >= 1/(t - 2 sqrt(s))  <=>  p*t - q >= 2*p*sqrt(s)
//                             <=>  p*t - q >= 0  and  (p*t - q)^2 >= 4*p^2*s.
struct SurdCheck {
    bool holds = false;
    bool tight = false; // exact equality (only possible when s is a perfect square)
};

inline SurdCheck compare_to_surd_lower_bound(const Rational& c, long long t, long long s) {
    __int128 lhs = static_cast<__int128>(c.p) * t - c.q;
    if (lhs < 0) return {false, false};
    __int128 l2 = lhs * lhs;
    __int128 r2 = 4 * static_cast<__int128>(c.p) * c.p * s;
    return {l2 >= r2, l2 == r2};
}

// Human-readable form of the bound 1/(t - 2*sqrt(s)).
inline std::string surd_bound_text(long long t, long long s) {
    return "1/(" + std::to_string(t) + " - 2*sqrt(" + std::to_string(s) + "))";
}

} // namespace clut
