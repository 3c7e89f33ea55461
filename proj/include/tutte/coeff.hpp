#pragma once

// Exact coefficient arithmetic for the polynomial layer.
//
// A Coeff is a Gaussian rational a + b*i with arbitrary-precision rational
// components.  Plain integers and rationals are the b == 0 case; the imaginary
// unit only ever shows up in sign-flip convolution identities, where a square
// root of -1 is needed.  Keeping one coefficient type everywhere avoids
// templating the polynomial ring over a ring mode.

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tutte {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Coeff {
public:
    Coeff() : re_(0), im_(0) {}
    Coeff(long long v) : re_(v), im_(0) {}          // NOLINT: implicit on purpose
    Coeff(BigInt v) : re_(std::move(v)), im_(0) {}  // NOLINT
    Coeff(BigRat v) : re_(std::move(v)), im_(0) {}  // NOLINT
    Coeff(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}

    static Coeff i() { return Coeff(BigRat(0), BigRat(1)); }

    const BigRat& re() const { return re_; }
    const BigRat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_integer() const {
        return im_ == 0 && boost::multiprecision::denominator(re_) == 1;
    }

    Coeff operator-() const { return Coeff(-re_, -im_); }

    Coeff& operator+=(const Coeff& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Coeff& operator-=(const Coeff& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Coeff& operator*=(const Coeff& o) {
        BigRat r = re_ * o.re_ - im_ * o.im_;
        BigRat s = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }

    Coeff inverse() const {
        BigRat n = re_ * re_ + im_ * im_;
        if (n == 0) throw std::domain_error("division by zero coefficient");
        return Coeff(re_ / n, -im_ / n);
    }

    // a^e for integer e (negative allowed when invertible)
    Coeff pow(long long e) const {
        Coeff base = *this;
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        Coeff acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    // Renders "3", "-1/2", "i", "-i", "(1+2i)", "(1/2-i)".  Complex values are
    // parenthesized so they can be glued onto monomials with '*' unambiguously.
    std::string str() const {
        if (im_ == 0) return rat_str(re_);
        if (re_ == 0) {
            if (im_ == 1) return "i";
            if (im_ == -1) return "-i";
            return rat_str(im_) + "*i";
        }
        std::string s = "(" + rat_str(re_);
        if (im_ > 0) s += "+";
        if (im_ == 1)
            s += "i";
        else if (im_ == -1)
            s += "-i";
        else
            s += rat_str(im_) + "i";
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Coeff& c) {
        return os << c.str();
    }

private:
    static std::string rat_str(const BigRat& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    }

    BigRat re_, im_;
};

}  // namespace tutte
