#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qgenus {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar, the coefficient field of every expansion in this
/// library. Always stored in lowest terms with positive denominator.
/// There is no floating-point fallback anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        BigInt n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        BigInt g = boost::multiprecision::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        v_ = BigRat(n, d);
    }
    Rational(long long num, long long den)
        : Rational(BigInt(static_cast<std::int64_t>(num)),
                   BigInt(static_cast<std::int64_t>(den))) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return den() == 1; }

    /// Exact integer value; throws unless the denominator is 1.
    BigInt as_integer() const {
        if (!is_integer())
            throw std::domain_error("Rational: not an integer: " + str());
        return num();
    }

    Rational operator-() const { return Rational(BigRat(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long long e) const {
        if (e < 0) {
            if (is_zero())
                throw std::domain_error("Rational: zero to negative power");
            return Rational(BigRat(1) / v_).pow(-e);
        }
        Rational base = *this, out = 1;
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    /// 2^e for any integer e (negative exponents give exact fractions).
    static Rational pow2(long long e) { return Rational(2).pow(e); }

    /// "a/b" with "/b" omitted when the denominator is 1.
    std::string str() const {
        std::string s = num().str();
        if (!is_integer())
            s += "/" + den().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using BigRat = boost::multiprecision::cpp_rational;
    explicit Rational(const BigRat& v) : v_(v) {}

    BigRat v_;
};

inline Rational inverse(const Rational& r) { return Rational(1) / r; }

/// True when d divides r exactly (r must be an integer multiple of d).
inline bool divides(const BigInt& d, const Rational& r) {
    return r.is_integer() && r.num() % d == 0;
}

} // namespace qgenus
