#pragma once

#include <string>
#include <utility>

#include "rational.hpp"

namespace exb {

// Element of a real quadratic field: (p + q*sqrt(d)) / r with integer p,q,r.
// Canonical form: r >= 1, gcd(p,q,r) = 1, d square-free and >= 0, and if the
// value is rational (q == 0, or d in {0,1}) it is stored with q = 0, d = 0.
// All comparisons are exact integer sign tests; no floating point anywhere.
class Surd {
  public:
    Surd() : p_(0), q_(0), r_(1), d_(0) {}
    Surd(const Rational& x) : p_(x.num()), q_(0), r_(x.den()), d_(0) {}  // NOLINT
    Surd(long n) : p_(n), q_(0), r_(1), d_(0) {}                         // NOLINT

    Surd(Int p, Int q, Int r, Int d) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
        normalize();
    }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    Rational to_rational() const {
        if (!is_rational()) throw Error("surd: " + str() + " is irrational");
        return Rational(p_, r_);
    }

    int sign() const {
        // sign of p + q*sqrt(d), r > 0.
        if (q_ == 0) return p_ == 0 ? 0 : (p_ > 0 ? 1 : -1);
        if (p_ == 0) return q_ > 0 ? 1 : -1;
        if (p_ > 0 && q_ > 0) return 1;
        if (p_ < 0 && q_ < 0) return -1;
        // Mixed signs: compare p^2 against q^2 d on the dominant side.
        Int lhs = p_ * p_, rhs = q_ * q_ * d_;
        if (lhs == rhs) return 0;
        bool p_dominates = lhs > rhs;
        return (p_ > 0) == p_dominates ? 1 : -1;
    }

    friend Surd operator-(const Surd& a) { return Surd(-a.p_, -a.q_, a.r_, a.d_); }

    friend Surd operator+(const Surd& a, const Surd& b) {
        Int d = common_field(a, b, "+");
        return Surd(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, a.r_ * b.r_, d);
    }
    friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

    friend Surd operator*(const Surd& a, const Surd& b) {
        Int d = common_field(a, b, "*");
        return Surd(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, a.r_ * b.r_, d);
    }

    friend Surd operator/(const Surd& a, const Surd& b) {
        if (b.sign() == 0) throw Error("surd: division by zero");
        // 1/b = r (p - q sqrt(d)) / (p^2 - q^2 d)
        Int norm = b.p_ * b.p_ - b.q_ * b.q_ * b.d_;
        Surd inv(b.r_ * b.p_, -b.r_ * b.q_, norm, b.d_);
        return a * inv;
    }

    friend bool operator==(const Surd& a, const Surd& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
    friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Surd& a, const Surd& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Surd& a, const Surd& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const Surd& a, const Surd& b) { return (a - b).sign() >= 0; }

    // Largest integer <= value, by isqrt bracketing plus an exact fixup.
    Int floor() const {
        Int s = isqrt(q_ * q_ * d_);          // s <= |q| sqrt(d) < s+1
        Int approx = p_ + (q_ >= 0 ? s : -(s + 1));
        Int k = div_floor(approx, r_);
        while (cmp_int(k) < 0) --k;           // value < k
        while (cmp_int(k + 1) >= 0) ++k;      // value >= k+1
        return k;
    }

    // Value minus floor(value); always in [0,1).
    Surd reduced_mod_1() const { return *this - Surd(Rational(floor())); }

    std::string str() const {
        std::string s = "(" + p_.str();
        if (q_ != 0) s += (q_ > 0 ? "+" : "-") + Int(abs(q_)).str() + "*sqrt(" + d_.str() + ")";
        s += ")/" + r_.str();
        return s;
    }

    // True when the stored fields already satisfy every canonical-form rule.
    // Used by parsers, which must reject non-canonical encodings.
    static bool is_canonical(const Int& p, const Int& q, const Int& r, const Int& d) {
        if (r < 1 || d < 0) return false;
        if (q == 0) return d == 0 && gcd(p, r) == 1;
        if (d <= 1 || !is_square_free(d)) return false;
        return gcd(gcd(p, q), r) == 1;
    }

  private:
    // value - k, exact sign.
    int cmp_int(const Int& k) const { return Surd(p_ - k * r_, q_, r_, d_).sign(); }

    static Int div_floor(const Int& a, const Int& b) {
        Int q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }

    static Int common_field(const Surd& a, const Surd& b, const char* op) {
        if (a.d_ == 0 || a.d_ == b.d_) return b.d_ == 0 ? a.d_ : b.d_;
        if (b.d_ == 0) return a.d_;
        throw Error(std::string("surd: incompatible fields in '") + op + "': sqrt(" +
                    a.d_.str() + ") vs sqrt(" + b.d_.str() + ")");
    }

    void normalize() {
        if (r_ == 0) throw Error("surd: zero denominator");
        if (d_ < 0) throw Error("surd: negative radicand");
        if (r_ < 0) { p_ = -p_; q_ = -q_; r_ = -r_; }
        if (d_ == 0 || d_ == 1) {
            if (d_ == 1) p_ += q_;
            q_ = 0;
            d_ = 0;
        } else if (q_ == 0) {
            d_ = 0;
        } else {
            // pull the square part of d into q
            Int square = 1;
            for (Int f = 2; f * f <= d_; ++f) {
                while (d_ % (f * f) == 0) {
                    d_ /= f * f;
                    square *= f;
                }
            }
            q_ *= square;
            if (d_ == 1) { p_ += q_; q_ = 0; d_ = 0; }
        }
        Int g = gcd(gcd(abs(p_), abs(q_)), r_);
        if (g > 1) { p_ /= g; q_ /= g; r_ /= g; }
    }

    Int p_, q_, r_, d_;
};

}  // namespace exb
