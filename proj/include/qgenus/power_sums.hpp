#pragma once

#include "qgenus/graded_class.hpp"
#include "qgenus/half_q_series.hpp"
#include "qgenus/rational.hpp"

#include <stdexcept>
#include <vector>

namespace qgenus {

using ClassSeries = HalfQSeries<GradedClass>;

enum class CombineMode {
    additive,       ///< combined over roots as Σ_j f(x_j)
    multiplicative, ///< combined over roots as Π_j f(x_j)
};

/// Even univariate series f(x) = Σ_r a[r] x^{2r}. Only even powers exist;
/// multiplicative-factor series are normalized to a[0] = 1 with the overall
/// constant tracked in constant_factor.
template <typename C>
struct EvenSeries {
    CombineMode mode = CombineMode::additive;
    Rational constant_factor = Rational(1);
    std::vector<C> a;

    int max_r() const { return static_cast<int>(a.size()) - 1; }

    const C& coef(int r) const {
        if (r < 0 || r > max_r())
            throw std::out_of_range("EvenSeries: index beyond truncation");
        return a[r];
    }

    // Zero with the same truncation shape as this series' coefficients.
    C zero_coef() const { return a.empty() ? C{} : a[0] * Rational(0); }

    EvenSeries times(const EvenSeries& o) const {
        EvenSeries out;
        out.mode = mode;
        out.constant_factor = constant_factor * o.constant_factor;
        out.a.assign(std::min(a.size(), o.a.size()), zero_coef());
        for (std::size_t i = 0; i < out.a.size(); ++i)
            for (std::size_t j = 0; i + j < out.a.size(); ++j)
                out.a[i + j] += a[i] * o.a[j];
        return out;
    }

    /// Series inverse in x^2; a[0] must be invertible.
    EvenSeries inverted() const {
        if (a.empty() || a[0].is_zero())
            throw std::domain_error("EvenSeries: leading coefficient not invertible");
        EvenSeries out;
        out.mode = mode;
        out.constant_factor = constant_factor; // caller handles the constant
        out.a.assign(a.size(), zero_coef());
        C inv0 = inverse(a[0]);
        out.a[0] = inv0;
        for (std::size_t n = 1; n < a.size(); ++n) {
            C acc = zero_coef();
            for (std::size_t j = 1; j <= n; ++j)
                acc += a[j] * out.a[n - j];
            out.a[n] = -(inv0 * acc);
        }
        return out;
    }

    /// log of a series with a[0] = 1 (the x^0 coefficient comes out zero).
    EvenSeries logarithm() const {
        if (a.empty() || !a[0].is_one())
            throw std::domain_error("EvenSeries: log needs leading coefficient 1");
        EvenSeries out;
        out.mode = mode;
        out.a.assign(a.size(), zero_coef());
        for (std::size_t n = 1; n < a.size(); ++n) {
            C acc = a[n] * Rational(static_cast<long long>(n));
            for (std::size_t j = 1; j < n; ++j)
                acc -= (out.a[j] * Rational(static_cast<long long>(j))) * a[n - j];
            out.a[n] = acc * Rational(1, static_cast<long long>(n));
        }
        return out;
    }
};

/// Newton tables for a tangent bundle with num_roots formal Chern-root
/// pairs {±x_j}: power_sum(r) is s_{2r} = Σ_j x_j^{2r} written in the
/// Pontryagin generators p_i = e_i(x_1^2, ..., x_m^2).
///
/// For degrees ≤ D the tables are the universal Newton polynomials whenever
/// num_roots ≥ D/2, so results stabilize in m (tested as a property).
class PowerSumBridge {
public:
    PowerSumBridge(int num_roots, const RingSignature& sig)
        : num_roots_(num_roots), sig_(sig) {
        if (num_roots < 1)
            throw std::invalid_argument("PowerSumBridge: need at least one root pair");
        const int rmax = sig.max_degree / 2;
        psums_.reserve(rmax + 1);
        psums_.push_back(GradedClass(sig, Rational(num_roots))); // s_0 = m
        for (int r = 1; r <= rmax; ++r) {
            GradedClass acc(sig);
            for (int i = 1; i < r; ++i) {
                GradedClass e = elementary(i);
                if (e.is_zero()) continue;
                GradedClass term = e * psums_[r - i];
                acc += (i % 2 == 1) ? term : -term;
            }
            GradedClass er = elementary(r);
            if (!er.is_zero())
                acc += er * Rational(r % 2 == 1 ? r : -r);
            psums_.push_back(acc);
        }
    }

    int num_roots() const { return num_roots_; }
    const RingSignature& signature() const { return sig_; }
    int max_r() const { return static_cast<int>(psums_.size()) - 1; }

    /// s_{2r} as a GradedClass; s_0 is the constant num_roots.
    const GradedClass& power_sum(int r) const {
        if (r < 0 || r > max_r())
            throw std::out_of_range("PowerSumBridge: power sum beyond truncation");
        return psums_[r];
    }

private:
    // e_i of the squared roots: p_i inside the signature, zero beyond it or
    // beyond the number of root pairs.
    GradedClass elementary(int i) const {
        if (i > num_roots_ || i > sig_.num_p || 2 * i > sig_.max_degree)
            return GradedClass(sig_);
        return GradedClass::p(sig_, i);
    }

    int num_roots_;
    RingSignature sig_;
    std::vector<GradedClass> psums_;
};

/// Σ_j f(x_j) = m·a_0 + Σ_r a_r s_{2r} in the Pontryagin basis.
inline GradedClass symmetrize_additive(const EvenSeries<Rational>& f,
                                       const PowerSumBridge& bridge) {
    if (f.mode != CombineMode::additive)
        throw std::invalid_argument("symmetrize_additive: series not tagged additive");
    GradedClass out(bridge.signature());
    if (f.a.empty()) return out;
    out += GradedClass(bridge.signature(), f.a[0] * Rational(bridge.num_roots()));
    for (int r = 1; r <= std::min(f.max_r(), bridge.max_r()); ++r)
        out += bridge.power_sum(r) * f.a[r];
    return out;
}

/// Same with q-series coefficients; the result is a q-series of classes.
inline ClassSeries symmetrize_additive(const EvenSeries<QSeries>& f,
                                       const PowerSumBridge& bridge) {
    if (f.mode != CombineMode::additive)
        throw std::invalid_argument("symmetrize_additive: series not tagged additive");
    if (f.a.empty())
        return ClassSeries(0);
    const int J = f.a[0].trunc();
    ClassSeries out(J);
    for (int j = 0; j <= J; ++j) {
        GradedClass c(bridge.signature(), f.a[0].coef(j) * Rational(bridge.num_roots()));
        for (int r = 1; r <= std::min(f.max_r(), bridge.max_r()); ++r)
            c += bridge.power_sum(r) * f.a[r].coef(j);
        out.set_coef(j, c);
    }
    return out;
}

/// Π_j f(x_j) = constant^m · exp(Σ_j log f(x_j)); f must be normalized to
/// a_0 = 1.
inline GradedClass symmetrize_multiplicative(const EvenSeries<Rational>& f,
                                             const PowerSumBridge& bridge) {
    if (f.mode != CombineMode::multiplicative)
        throw std::invalid_argument("symmetrize_multiplicative: series not tagged multiplicative");
    EvenSeries<Rational> lg = f.logarithm();
    GradedClass acc(bridge.signature());
    for (int r = 1; r <= std::min(lg.max_r(), bridge.max_r()); ++r)
        acc += bridge.power_sum(r) * lg.a[r];
    GradedClass out = acc.exp();
    if (!f.constant_factor.is_one())
        out = out * f.constant_factor.pow(bridge.num_roots());
    return out;
}

inline ClassSeries symmetrize_multiplicative(const EvenSeries<QSeries>& f,
                                             const PowerSumBridge& bridge) {
    if (f.mode != CombineMode::multiplicative)
        throw std::invalid_argument("symmetrize_multiplicative: series not tagged multiplicative");
    EvenSeries<QSeries> lg = f.logarithm();
    if (lg.a.empty())
        return ClassSeries(0, GradedClass(1));
    const int J = lg.a[0].trunc();
    // A = Σ_r log-coefficients · s_{2r}, split as q^0 part + rest so both
    // exponentials act where they are nilpotent.
    ClassSeries arg(J);
    for (int j = 0; j <= J; ++j) {
        GradedClass c(bridge.signature());
        for (int r = 1; r <= std::min(lg.max_r(), bridge.max_r()); ++r)
            c += bridge.power_sum(r) * lg.a[r].coef(j);
        arg.set_coef(j, c);
    }
    GradedClass head = arg.coef(0);
    arg.set_coef(0, GradedClass(bridge.signature()));
    ClassSeries out = arg.exp().scaled_by(head.exp());
    if (!f.constant_factor.is_one())
        out = out.scaled(f.constant_factor.pow(bridge.num_roots()));
    return out;
}

} // namespace qgenus
