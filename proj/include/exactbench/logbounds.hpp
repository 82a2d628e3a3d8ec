#pragma once

#include "error.hpp"
#include "rational.hpp"

namespace exb {

// floor(log2(n)) for n >= 1
inline long floor_log2(const Int& n) {
    if (n <= 0) throw Error("floor_log2: argument must be positive");
    return long(boost::multiprecision::msb(n));
}

// Certified enclosure [lo, lo + 2^-bits] of log2(num/den) for odd coprime
// num, den (not both 1), by repeated interval squaring of the mantissa in
// fixed point.  Directed rounding keeps the enclosure valid; stopping early
// (when the interval straddles 2) only widens it.
struct Log2Enclosure {
    Rational lo;
    int bits = 0;  // width is 2^-bits
};

inline Log2Enclosure log2_enclosure(const Int& num, const Int& den, int precision) {
    long k;  // floor(log2(num/den))
    {
        long guess = floor_log2(num) - floor_log2(den);
        k = (guess >= 0 ? num >= (den << guess) : (num << -guess) >= den) ? guess : guess - 1;
    }
    const int p = precision;
    Int lo, hi;  // mantissa interval scaled by 2^p, value in [1, 2)
    {
        long sh = p - k;
        lo = sh >= 0 ? Int((num << sh) / den) : Int(num / (den << -sh));
        hi = lo + 1;
    }
    const Int one = Int(1) << p, two = one << 1;
    Int frac = 0;  // extracted fraction bits
    int i = 0;
    for (; i < precision - 64; ++i) {
        lo = (lo * lo) >> p;
        hi = ((hi * hi) + one - 1) >> p;
        if (lo >= two) {
            frac = (frac << 1) | 1;
            lo >>= 1;
            hi = (hi + 1) >> 1;
        } else if (hi < two) {
            frac <<= 1;
        } else {
            break;  // straddles 2: stop with the enclosure so far
        }
    }
    Log2Enclosure out;
    out.lo = Rational(k) + Rational(frac, Int(1) << i);
    out.bits = i;
    return out;
}

// Exact three-way comparison of log2(num/den) against a rational target.
inline int cmp_log2_ratio(Int num, Int den, const Rational& target) {
    if (num <= 0 || den <= 0) throw Error("cmp_log2_ratio: arguments must be positive");
    Int g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
    long e = 0;  // pull out the exact power of two
    if (num > 1) {
        long z = long(boost::multiprecision::lsb(num));
        num >>= z;
        e += z;
    }
    if (den > 1) {
        long z = long(boost::multiprecision::lsb(den));
        den >>= z;
        e -= z;
    }
    if (num == 1 && den == 1) {  // ratio is an exact power of two
        Rational v{Int(e), Int(1)};
        return v < target ? -1 : v > target ? 1 : 0;
    }
    // log2 of an odd ratio != 1 is irrational, so refinement terminates
    Rational rest = target - Rational(Int(e), Int(1));  // target minus the exact part
    for (int precision = 160;; precision *= 2) {
        Log2Enclosure enc = log2_enclosure(num, den, precision);
        Rational width{Int(1), Int(1) << enc.bits};
        if (enc.lo > rest) return 1;
        if (enc.lo + width < rest) return -1;
        if (precision > 1 << 20)
            throw Error("cmp_log2_ratio: failed to separate after 2^20 bits");
    }
}

}  // namespace exb
