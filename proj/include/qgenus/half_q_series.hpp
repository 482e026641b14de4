#pragma once

#include "qgenus/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgenus {

/// Truncated series in q^{1/2}: index j stores the coefficient of q^{j/2},
/// so half-integer exponents never leave the integers. The coefficient type
/// is either Rational or GradedClass; a default-constructed C must behave as
/// an absorbing zero.
///
/// Binary operations truncate to the smaller truncation of the two operands
/// and record it on the result.
template <typename C>
class HalfQSeries {
public:
    HalfQSeries() : trunc_(0), c_(1) {}
    explicit HalfQSeries(int trunc) : trunc_(trunc), c_(trunc + 1) {
        if (trunc < 0)
            throw std::invalid_argument("HalfQSeries: negative truncation");
    }
    HalfQSeries(int trunc, const C& constant) : HalfQSeries(trunc) { c_[0] = constant; }

    static HalfQSeries monomial(int trunc, int halfstep, const C& value) {
        HalfQSeries s(trunc);
        if (halfstep <= trunc)
            s.c_[halfstep] = value;
        return s;
    }

    /// Max stored half-step index J (coefficients of q^{0/2} .. q^{J/2}).
    int trunc() const { return trunc_; }

    /// Coefficient of q^{j/2}; indexing past the truncation is a range error.
    const C& coef(int j) const {
        if (j < 0 || j > trunc_)
            throw std::out_of_range("HalfQSeries: q-index " + std::to_string(j) +
                                    " beyond truncation " + std::to_string(trunc_));
        return c_[j];
    }
    void set_coef(int j, const C& v) {
        if (j < 0 || j > trunc_)
            throw std::out_of_range("HalfQSeries: q-index beyond truncation");
        c_[j] = v;
    }

    bool is_zero() const {
        for (const C& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_one() const {
        if (!is_unit_coef(c_[0])) return false;
        for (int j = 1; j <= trunc_; ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }

    /// A zero series with this series' truncation (and coefficient shape).
    HalfQSeries zero_like() const { return HalfQSeries(trunc_); }

    /// Smallest half-step with a nonzero coefficient, or -1 for the zero series.
    int order() const {
        for (int j = 0; j <= trunc_; ++j)
            if (!c_[j].is_zero()) return j;
        return -1;
    }

    HalfQSeries truncated(int new_trunc) const {
        HalfQSeries out(std::min(new_trunc, trunc_));
        for (int j = 0; j <= out.trunc_; ++j)
            out.c_[j] = c_[j];
        return out;
    }

    /// Multiplication by q^{k/2}; coefficients pushed past J are dropped.
    HalfQSeries shifted_up(int k) const {
        HalfQSeries out(trunc_);
        for (int j = 0; j + k <= trunc_; ++j)
            out.c_[j + k] = c_[j];
        return out;
    }

    HalfQSeries operator-() const {
        HalfQSeries out(trunc_);
        for (int j = 0; j <= trunc_; ++j)
            out.c_[j] = -c_[j];
        return out;
    }

    friend HalfQSeries operator+(const HalfQSeries& a, const HalfQSeries& b) {
        HalfQSeries out(std::min(a.trunc_, b.trunc_));
        for (int j = 0; j <= out.trunc_; ++j)
            out.c_[j] = a.c_[j] + b.c_[j];
        return out;
    }
    friend HalfQSeries operator-(const HalfQSeries& a, const HalfQSeries& b) {
        HalfQSeries out(std::min(a.trunc_, b.trunc_));
        for (int j = 0; j <= out.trunc_; ++j)
            out.c_[j] = a.c_[j] - b.c_[j];
        return out;
    }
    friend HalfQSeries operator*(const HalfQSeries& a, const HalfQSeries& b) {
        HalfQSeries out(std::min(a.trunc_, b.trunc_));
        for (int i = 0; i <= out.trunc_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= out.trunc_; ++j) {
                if (b.c_[j].is_zero()) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }

    HalfQSeries& operator+=(const HalfQSeries& o) { return *this = *this + o; }
    HalfQSeries& operator-=(const HalfQSeries& o) { return *this = *this - o; }
    HalfQSeries& operator*=(const HalfQSeries& o) { return *this = *this * o; }

    /// Scale every coefficient by a Rational (or by a fixed C).
    HalfQSeries scaled(const Rational& r) const {
        HalfQSeries out(trunc_);
        for (int j = 0; j <= trunc_; ++j)
            out.c_[j] = c_[j] * r;
        return out;
    }
    friend HalfQSeries operator*(const HalfQSeries& s, const Rational& r) { return s.scaled(r); }
    friend HalfQSeries operator*(const Rational& r, const HalfQSeries& s) { return s.scaled(r); }
    template <typename S>
    HalfQSeries scaled_by(const S& s) const {
        HalfQSeries out(trunc_);
        for (int j = 0; j <= trunc_; ++j)
            out.c_[j] = c_[j] * s;
        return out;
    }

    HalfQSeries pow(int e) const {
        if (e < 0)
            return inverse().pow(-e);
        HalfQSeries out(trunc_);
        out.c_[0] = unit_like(c_[0]);
        HalfQSeries base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    /// Series inverse; requires an invertible leading (q^0) coefficient.
    HalfQSeries inverse() const {
        if (c_[0].is_zero())
            throw std::domain_error("HalfQSeries: leading coefficient not invertible");
        const C inv0 = ::qgenus::inverse(c_[0]);
        HalfQSeries out(trunc_);
        out.c_[0] = inv0;
        for (int n = 1; n <= trunc_; ++n) {
            C acc{};
            for (int j = 1; j <= n; ++j)
                acc += c_[j] * out.c_[n - j];
            out.c_[n] = -(inv0 * acc);
        }
        return out;
    }

    /// exp of a series with zero q^0 coefficient, via n·B_n = Σ j·A_j·B_{n−j}.
    HalfQSeries exp() const {
        if (!c_[0].is_zero())
            throw std::domain_error("HalfQSeries: exp needs zero constant coefficient");
        HalfQSeries out(trunc_);
        out.c_[0] = unit_like(c_[0]);
        for (int n = 1; n <= trunc_; ++n) {
            C acc{};
            for (int j = 1; j <= n; ++j)
                acc += (c_[j] * Rational(j)) * out.c_[n - j];
            out.c_[n] = acc * Rational(1, n);
        }
        return out;
    }

    /// log of a series with q^0 coefficient equal to one.
    HalfQSeries log() const {
        if (!is_unit_coef(c_[0]))
            throw std::domain_error("HalfQSeries: log needs constant coefficient 1");
        HalfQSeries out(trunc_);
        for (int n = 1; n <= trunc_; ++n) {
            C acc = c_[n] * Rational(n);
            for (int j = 1; j < n; ++j)
                acc -= (out.c_[j] * Rational(j)) * c_[n - j];
            out.c_[n] = acc * Rational(1, n);
        }
        return out;
    }

    friend bool operator==(const HalfQSeries& a, const HalfQSeries& b) {
        int common = std::min(a.trunc_, b.trunc_);
        for (int j = 0; j <= common; ++j)
            if (!(a.c_[j] == b.c_[j])) return false;
        return true;
    }
    friend bool operator!=(const HalfQSeries& a, const HalfQSeries& b) { return !(a == b); }

    /// First half-step where the two series differ (up to the common
    /// truncation), or -1 when they agree.
    friend int first_mismatch(const HalfQSeries& a, const HalfQSeries& b) {
        int common = std::min(a.trunc_, b.trunc_);
        for (int j = 0; j <= common; ++j)
            if (!(a.c_[j] == b.c_[j])) return j;
        return -1;
    }

    /// "a0 + a2*q + a1*q^(1/2) + ..." with half-step-aware exponents.
    std::string str() const {
        std::string out;
        for (int j = 0; j <= trunc_; ++j) {
            if (c_[j].is_zero()) continue;
            std::string cs = coef_str(c_[j]);
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (neg) cs.erase(cs.begin());
            out += cs;
            out += q_power_suffix(j);
        }
        return out.empty() ? "0" : out;
    }

    static std::string q_power_suffix(int halfstep) {
        if (halfstep == 0) return "";
        if (halfstep == 2) return "*q";
        if (halfstep % 2 == 0) return "*q^" + std::to_string(halfstep / 2);
        return "*q^(" + std::to_string(halfstep) + "/2)";
    }

private:
    static bool is_unit_coef(const C& c) { return c.is_one(); }
    static C unit_like(const C& sample) { return sample.one_like(); }
    static std::string coef_str(const C& c) { return c.str(); }

    int trunc_;
    std::vector<C> c_;
};

// Rational plugs into the coefficient protocol directly.
template <>
inline bool HalfQSeries<Rational>::is_unit_coef(const Rational& c) { return c.is_one(); }
template <>
inline Rational HalfQSeries<Rational>::unit_like(const Rational&) { return Rational(1); }
template <>
inline std::string HalfQSeries<Rational>::coef_str(const Rational& c) { return c.str(); }

using QSeries = HalfQSeries<Rational>;

template <typename C>
inline HalfQSeries<C> inverse(const HalfQSeries<C>& s) { return s.inverse(); }

} // namespace qgenus
