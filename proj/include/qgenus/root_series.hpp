#pragma once

#include "qgenus/graded_class.hpp"
#include "qgenus/half_q_series.hpp"
#include "qgenus/power_sums.hpp"

#include <stdexcept>
#include <vector>

namespace qgenus {

/// Truncated series in one formal variable (a Chern root x, or the Euler
/// class u) whose coefficients are exact q^{1/2}-series. This is the joint
/// expansion ring used to expand theta quotients: variable powers are capped
/// at xtrunc (internal degree units) and q at qtrunc half-steps.
class RootSeries {
public:
    RootSeries(int xtrunc, int qtrunc)
        : xtrunc_(xtrunc), qtrunc_(qtrunc), c_(xtrunc + 1, QSeries(qtrunc)) {
        if (xtrunc < 0)
            throw std::invalid_argument("RootSeries: negative variable truncation");
    }

    static RootSeries constant(const QSeries& q0, int xtrunc) {
        RootSeries s(xtrunc, q0.trunc());
        s.c_[0] = q0;
        return s;
    }
    static RootSeries constant(const Rational& r, int xtrunc, int qtrunc) {
        return constant(QSeries(qtrunc, r), xtrunc);
    }
    static RootSeries one(int xtrunc, int qtrunc) {
        return constant(Rational(1), xtrunc, qtrunc);
    }
    static RootSeries variable(int xtrunc, int qtrunc) {
        RootSeries s(xtrunc, qtrunc);
        if (xtrunc >= 1)
            s.c_[1] = QSeries(qtrunc, Rational(1));
        return s;
    }

    /// e^{a·x} truncated: Σ_d a^d x^d / d!.
    static RootSeries exponential(const Rational& a, int xtrunc, int qtrunc) {
        RootSeries s(xtrunc, qtrunc);
        Rational coeff = 1;
        for (int d = 0; d <= xtrunc; ++d) {
            if (d > 0) coeff = coeff * a * Rational(1, d);
            s.c_[d] = QSeries(qtrunc, coeff);
        }
        return s;
    }

    int xtrunc() const { return xtrunc_; }
    int qtrunc() const { return qtrunc_; }

    const QSeries& coef(int d) const {
        if (d < 0 || d > xtrunc_)
            throw std::out_of_range("RootSeries: variable power beyond truncation");
        return c_[d];
    }
    void set_coef(int d, const QSeries& v) {
        if (d < 0 || d > xtrunc_)
            throw std::out_of_range("RootSeries: variable power beyond truncation");
        c_[d] = v.truncated(qtrunc_);
    }

    bool is_zero() const {
        for (const QSeries& s : c_)
            if (!s.is_zero()) return false;
        return true;
    }

    RootSeries operator-() const {
        RootSeries out(xtrunc_, qtrunc_);
        for (int d = 0; d <= xtrunc_; ++d)
            out.c_[d] = -c_[d];
        return out;
    }

    friend RootSeries operator+(const RootSeries& a, const RootSeries& b) {
        RootSeries out(std::min(a.xtrunc_, b.xtrunc_), std::min(a.qtrunc_, b.qtrunc_));
        for (int d = 0; d <= out.xtrunc_; ++d)
            out.c_[d] = (a.c_[d] + b.c_[d]).truncated(out.qtrunc_);
        return out;
    }
    friend RootSeries operator-(const RootSeries& a, const RootSeries& b) {
        RootSeries out(std::min(a.xtrunc_, b.xtrunc_), std::min(a.qtrunc_, b.qtrunc_));
        for (int d = 0; d <= out.xtrunc_; ++d)
            out.c_[d] = (a.c_[d] - b.c_[d]).truncated(out.qtrunc_);
        return out;
    }
    friend RootSeries operator*(const RootSeries& a, const RootSeries& b) {
        RootSeries out(std::min(a.xtrunc_, b.xtrunc_), std::min(a.qtrunc_, b.qtrunc_));
        for (int i = 0; i <= std::min(a.xtrunc_, out.xtrunc_); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= out.xtrunc_ && j <= b.xtrunc_; ++j) {
                if (b.c_[j].is_zero()) continue;
                out.c_[i + j] = (out.c_[i + j] + a.c_[i] * b.c_[j]).truncated(out.qtrunc_);
            }
        }
        return out;
    }

    RootSeries& operator+=(const RootSeries& o) { return *this = *this + o; }
    RootSeries& operator-=(const RootSeries& o) { return *this = *this - o; }
    RootSeries& operator*=(const RootSeries& o) { return *this = *this * o; }

    RootSeries scaled(const Rational& r) const {
        RootSeries out(xtrunc_, qtrunc_);
        for (int d = 0; d <= xtrunc_; ++d)
            out.c_[d] = c_[d].scaled(r);
        return out;
    }
    RootSeries scaled_q(const QSeries& s) const {
        RootSeries out(xtrunc_, qtrunc_);
        for (int d = 0; d <= xtrunc_; ++d)
            out.c_[d] = (c_[d] * s).truncated(qtrunc_);
        return out;
    }

    /// Multiplication by q^{k/2} across all coefficients.
    RootSeries q_shifted_up(int k) const {
        RootSeries out(xtrunc_, qtrunc_);
        for (int d = 0; d <= xtrunc_; ++d)
            out.c_[d] = c_[d].shifted_up(k);
        return out;
    }

    RootSeries x_truncated(int new_xtrunc) const {
        RootSeries out(std::min(new_xtrunc, xtrunc_), qtrunc_);
        for (int d = 0; d <= out.xtrunc_; ++d)
            out.c_[d] = c_[d];
        return out;
    }

    /// Exact division by x^k; the k lowest coefficients must vanish.
    RootSeries shifted_down(int k) const {
        for (int d = 0; d < k; ++d)
            if (!c_[d].is_zero())
                throw std::domain_error("RootSeries: division by x^k with nonzero low terms");
        RootSeries out(xtrunc_, qtrunc_);
        for (int d = 0; d + k <= xtrunc_; ++d)
            out.c_[d] = c_[d + k];
        return out;
    }

    /// Inverse; the x^0 coefficient must be an invertible q-series.
    RootSeries inverted() const {
        QSeries inv0 = c_[0].inverse();
        RootSeries out(xtrunc_, qtrunc_);
        out.c_[0] = inv0;
        for (int n = 1; n <= xtrunc_; ++n) {
            QSeries acc(qtrunc_);
            for (int j = 1; j <= n; ++j)
                acc += c_[j] * out.c_[n - j];
            out.c_[n] = -(inv0 * acc);
        }
        return out;
    }

    RootSeries pow(int e) const {
        if (e < 0)
            return inverted().pow(-e);
        RootSeries out = one(xtrunc_, qtrunc_);
        RootSeries base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    friend bool operator==(const RootSeries& a, const RootSeries& b) {
        int common = std::min(a.xtrunc_, b.xtrunc_);
        for (int d = 0; d <= common; ++d)
            if (!(a.c_[d] == b.c_[d])) return false;
        return true;
    }

    /// The multiplicative normalization F / F(x=0) − 1, which is nilpotent
    /// in the variable; its log/exp live entirely in x-degree ≥ 1.
    RootSeries reduced_log() const {
        RootSeries n = scaled_q(c_[0].inverse()) - one(xtrunc_, qtrunc_);
        RootSeries out(xtrunc_, qtrunc_);
        RootSeries power = one(xtrunc_, qtrunc_);
        for (int k = 1; k <= xtrunc_; ++k) {
            power *= n;
            if (power.is_zero()) break;
            out += power.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
        }
        return out;
    }

    /// Strict even-part extraction: odd coefficients must vanish exactly
    /// (they do for every symmetric factor; a survivor is a bug upstream).
    EvenSeries<QSeries> even_part_strict(CombineMode mode) const {
        for (int d = 1; d <= xtrunc_; d += 2)
            if (!c_[d].is_zero())
                throw std::logic_error("RootSeries: expected even series, found odd term x^" +
                                       std::to_string(d));
        EvenSeries<QSeries> f;
        f.mode = mode;
        f.a.assign(xtrunc_ / 2 + 1, QSeries(qtrunc_));
        for (int r = 0; 2 * r <= xtrunc_; ++r)
            f.a[r] = c_[2 * r];
        return f;
    }

    /// Substitute the variable by the Euler-class generator u.
    ClassSeries substitute_u(const RingSignature& sig) const {
        ClassSeries out(qtrunc_);
        GradedClass u = GradedClass::u(sig);
        GradedClass upow(sig, Rational(1));
        for (int d = 0; d <= xtrunc_; ++d) {
            if (d > 0) upow = upow * u;
            if (upow.is_zero()) break;
            for (int j = 0; j <= qtrunc_; ++j) {
                const Rational& cj = c_[d].coef(j);
                if (cj.is_zero()) continue;
                out.set_coef(j, out.coef(j) + upow * cj);
            }
        }
        return out;
    }

private:
    int xtrunc_;
    int qtrunc_;
    std::vector<QSeries> c_;
};

} // namespace qgenus
