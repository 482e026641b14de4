#pragma once

#include "qgenus/graded_class.hpp"
#include "qgenus/power_sums.hpp"
#include "qgenus/root_series.hpp"

#include <stdexcept>

namespace qgenus {

namespace detail {

inline void require_dim_mult4(int dim, const char* who) {
    if (dim <= 0 || dim % 4 != 0)
        throw std::invalid_argument(std::string(who) + ": dimension must be a positive multiple of 4");
}

inline Rational factorial(int n) {
    Rational f = 1;
    for (int k = 2; k <= n; ++k)
        f *= Rational(k);
    return f;
}

} // namespace detail

/// (x/2)/sinh(x/2): the root factor of the A-hat form.
inline EvenSeries<Rational> a_hat_root_factor(int D) {
    EvenSeries<Rational> sinh_norm; // sinh(x/2)/(x/2)
    sinh_norm.mode = CombineMode::multiplicative;
    sinh_norm.a.resize(D / 2 + 1);
    for (int r = 0; 2 * r <= D; ++r)
        sinh_norm.a[r] = inverse(Rational(4).pow(r) * detail::factorial(2 * r + 1));
    return sinh_norm.inverted();
}

inline EvenSeries<Rational> cosh_half_root_factor(int D) {
    EvenSeries<Rational> f;
    f.mode = CombineMode::multiplicative;
    f.a.resize(D / 2 + 1);
    for (int r = 0; 2 * r <= D; ++r)
        f.a[r] = inverse(Rational(4).pow(r) * detail::factorial(2 * r));
    return f;
}

/// x/tanh(x/2) = 2 · (x/2)/tanh(x/2): normalized series with the constant 2
/// tracked separately, so the top component of the symmetrized product is
/// the signature form.
inline EvenSeries<Rational> l_hat_root_factor(int D) {
    EvenSeries<Rational> f = cosh_half_root_factor(D).times(a_hat_root_factor(D));
    f.constant_factor = Rational(2);
    return f;
}

/// Classical signature root factor x/tanh(x) (normalization cross-check).
inline EvenSeries<Rational> classical_l_root_factor(int D) {
    EvenSeries<Rational> sinh_norm; // sinh(x)/x
    sinh_norm.mode = CombineMode::multiplicative;
    sinh_norm.a.resize(D / 2 + 1);
    EvenSeries<Rational> cosh;
    cosh.mode = CombineMode::multiplicative;
    cosh.a.resize(D / 2 + 1);
    for (int r = 0; 2 * r <= D; ++r) {
        sinh_norm.a[r] = inverse(detail::factorial(2 * r + 1));
        cosh.a[r] = inverse(detail::factorial(2 * r));
    }
    return cosh.times(sinh_norm.inverted());
}

/// e^x + e^{-x}, the per-root summand of ch of the complexified tangent bundle.
inline EvenSeries<Rational> ch_root_summand(int D) {
    EvenSeries<Rational> f;
    f.mode = CombineMode::additive;
    f.a.resize(D / 2 + 1);
    for (int r = 0; 2 * r <= D; ++r)
        f.a[r] = Rational(2) * inverse(detail::factorial(2 * r));
    return f;
}

inline GradedClass a_hat_form(int dim, const RingSignature& sig) {
    detail::require_dim_mult4(dim, "a_hat_form");
    PowerSumBridge bridge(dim / 2, sig);
    return symmetrize_multiplicative(a_hat_root_factor(sig.max_degree), bridge);
}

inline GradedClass l_hat_form(int dim, const RingSignature& sig) {
    detail::require_dim_mult4(dim, "l_hat_form");
    PowerSumBridge bridge(dim / 2, sig);
    return symmetrize_multiplicative(l_hat_root_factor(sig.max_degree), bridge);
}

inline GradedClass ch_tangent(int dim, const RingSignature& sig) {
    PowerSumBridge bridge(dim / 2, sig);
    return symmetrize_additive(ch_root_summand(sig.max_degree), bridge);
}

inline GradedClass ch_tensor_square(int dim, const RingSignature& sig) {
    GradedClass t = ch_tangent(dim, sig);
    return t * t;
}

/// ch data of the rank-2 twisting bundle: ch(xi_C) = e^u + e^{-u}, plus the
/// hyperbolic squares of u/2 that enter the twisted identities. ch of the
/// determinant of xi_C is 1, so it never appears explicitly.
struct LineBundleClasses {
    GradedClass ch_xi;        ///< e^u + e^{-u}
    GradedClass cosh_half;    ///< cosh(u/2)
    GradedClass cosh_sq_half; ///< cosh^2(u/2)
    GradedClass sinh_sq_half; ///< sinh^2(u/2)
};

inline LineBundleClasses ch_line_bundle_terms(const RingSignature& sig) {
    GradedClass u = GradedClass::u(sig);
    GradedClass e_half = (u * Rational(1, 2)).exp();
    GradedClass e_mhalf = (u * Rational(-1, 2)).exp();
    LineBundleClasses out;
    out.ch_xi = u.exp() + (-u).exp();
    out.cosh_half = (e_half + e_mhalf) * Rational(1, 2);
    out.cosh_sq_half = out.cosh_half * out.cosh_half;
    GradedClass sh = (e_half - e_mhalf) * Rational(1, 2);
    out.sinh_sq_half = sh * sh;
    return out;
}

enum class ThetaElement { theta1, theta2 };

namespace detail {

/// ch of Lambda_t(xi_C - C^2) at t = sign * q^{halfstep/2}:
/// (1 + t e^u)(1 + t e^{-u}) / (1 + t)^2 in the class-valued q-series ring.
inline ClassSeries lambda_xi_factor(int sign, int halfstep, const RingSignature& sig, int J) {
    GradedClass one(sig, Rational(1));
    GradedClass eu = GradedClass::u(sig).exp();
    GradedClass emu = (-GradedClass::u(sig)).exp();
    ClassSeries f(J, one), g(J, one);
    if (halfstep <= J) {
        f.set_coef(halfstep, eu * Rational(sign));
        g.set_coef(halfstep, emu * Rational(sign));
    }
    ClassSeries den(J, one);
    if (halfstep <= J)
        den.set_coef(halfstep, GradedClass(sig, Rational(sign)));
    return f * g * (den * den).inverse();
}

} // namespace detail

/// Chern character of the Theta elements as a q^{1/2}-series of classes.
/// The reduced tangent factors go through the additive bridge level by level
/// (log of each root factor, then one exponential); the twisting-bundle
/// factors are functions of u alone and are multiplied in directly.
inline ClassSeries theta_element_ch(ThetaElement which, bool twisted, int dim,
                                    const RingSignature& sig, int J) {
    detail::require_dim_mult4(dim, "theta_element_ch");
    const int D = sig.max_degree;

    EvenSeries<QSeries> total_log;
    total_log.mode = CombineMode::additive;
    total_log.a.assign(D / 2 + 1, QSeries(J));

    RootSeries one = RootSeries::one(D, J);
    RootSeries ep = RootSeries::exponential(Rational(1), D, J);
    RootSeries em = RootSeries::exponential(Rational(-1), D, J);
    auto pair_factor = [&](int halfstep, int sign) {
        return (one + ep.q_shifted_up(halfstep).scaled(Rational(sign))) *
               (one + em.q_shifted_up(halfstep).scaled(Rational(sign)));
    };
    auto accumulate = [&](const RootSeries& factor, int sign) {
        EvenSeries<QSeries> lg =
            factor.reduced_log().even_part_strict(CombineMode::additive);
        for (std::size_t r = 0; r < total_log.a.size() && r < lg.a.size(); ++r)
            total_log.a[r] += sign > 0 ? lg.a[r] : -lg.a[r];
    };

    // Symmetric powers S_{q^n} of the reduced tangent bundle.
    for (int n = 1; 2 * n <= J; ++n)
        accumulate(pair_factor(2 * n, -1), -1);
    // Exterior powers: Lambda_{q^n} for the first element, Lambda_{-q^{n-1/2}}
    // for the second.
    if (which == ThetaElement::theta1) {
        for (int n = 1; 2 * n <= J; ++n)
            accumulate(pair_factor(2 * n, +1), +1);
    } else {
        for (int n = 1; 2 * n - 1 <= J; ++n)
            accumulate(pair_factor(2 * n - 1, -1), +1);
    }

    PowerSumBridge bridge(dim / 2, sig);
    ClassSeries out = symmetrize_additive(total_log, bridge).exp();

    if (twisted) {
        if (!sig.with_u)
            throw std::invalid_argument("theta_element_ch: twisted element needs u in signature");
        if (which == ThetaElement::theta1) {
            for (int n = 1; 2 * n <= J; ++n) {
                ClassSeries lam_inv = detail::lambda_xi_factor(+1, 2 * n, sig, J).inverse();
                out = out * lam_inv * lam_inv;
            }
            for (int n = 1; 2 * n - 1 <= J; ++n) {
                out = out * detail::lambda_xi_factor(+1, 2 * n - 1, sig, J);
                out = out * detail::lambda_xi_factor(-1, 2 * n - 1, sig, J);
            }
        } else {
            for (int n = 1; 2 * n - 1 <= J; ++n) {
                ClassSeries lam_inv = detail::lambda_xi_factor(-1, 2 * n - 1, sig, J).inverse();
                out = out * lam_inv * lam_inv;
                out = out * detail::lambda_xi_factor(+1, 2 * n - 1, sig, J);
            }
            for (int n = 1; 2 * n <= J; ++n)
                out = out * detail::lambda_xi_factor(+1, 2 * n, sig, J);
        }
    }
    return out;
}

} // namespace qgenus
