#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace exb {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept canonical: gcd(num,den)=1, den>=1.
// Thin wrapper over boost cpp_rational so the rest of the code can rely on the
// canonical accessors and the strict "num/den" text format.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& n, const Int& d) {
        if (d == 0) throw Error("rational: zero denominator");
        v_ = boost::multiprecision::cpp_rational(n);
        v_ /= boost::multiprecision::cpp_rational(d);
    }

    Int num() const { return numerator(v_); }
    Int den() const { return denominator(v_); }

    bool is_integer() const { return denominator(v_) == 1; }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw Error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Largest integer <= value.
    Int floor() const {
        Int q = numerator(v_) / denominator(v_);
        if (v_ < 0 && q * denominator(v_) != numerator(v_)) --q;
        return q;
    }
    Int ceil() const { return -(-*this).floor(); }

    friend Rational abs(const Rational& a) { return a < 0 ? -a : a; }

    // Strict canonical text form: "num" when den==1, else "num/den".
    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    // Parses "a" or "a/b"; rejects anything non-canonical so serialized data
    // is unique per value.
    static Rational parse(const std::string& s) {
        auto bad = [&](const char* why) -> Rational {
            throw ParseError("", std::string("bad rational \"") + s + "\": " + why);
        };
        auto slash = s.find('/');
        std::string ns = s.substr(0, slash);
        std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!is_int_literal(ns) || !is_int_literal(ds)) return bad("not an integer pair");
        Int n(ns), d(ds);
        if (slash != std::string::npos && d == 1) return bad("denominator 1 must be omitted");
        if (d <= 0) return bad("denominator must be positive");
        if (gcd(n, d) != 1) return bad("not in lowest terms");
        return Rational(n, d);
    }

  private:
    static bool is_int_literal(const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) return false;
        if (t[i] == '0' && t.size() > i + 1) return false;  // no leading zeros
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    }

    boost::multiprecision::cpp_rational v_;
};

// Integer square root via boost (floor of sqrt); n must be >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt of negative");
    return sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// d is square-free iff no prime square divides it.  Trial division is fine at
// the scale we use (radicands stay small).
inline bool is_square_free(const Int& d) {
    if (d < 0) return false;
    if (d <= 1) return true;
    Int n = d;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

}  // namespace exb
