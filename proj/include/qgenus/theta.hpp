#pragma once

#include "qgenus/half_q_series.hpp"
#include "qgenus/power_sums.hpp"
#include "qgenus/rational.hpp"
#include "qgenus/root_series.hpp"

#include <stdexcept>
#include <string>

namespace qgenus {

/// Constant prefactor of a theta expansion that cannot live in a rational
/// q-series: powers of pi and i (from the trigonometric factor and the root
/// normalization x = X/(2*pi*i)) and eighth-powers of q (from the nome
/// prefactor 2 q^{1/8}). Ratios must cancel pi and i exactly and leave a
/// q-power in whole half-steps before a series is materialized; anything
/// else is a hard error, not a truncation.
struct ThetaPrefactor {
    int pi = 0;
    int i = 0;
    int q8 = 0;

    ThetaPrefactor operator+(const ThetaPrefactor& o) const { return {pi + o.pi, i + o.i, q8 + o.q8}; }
    ThetaPrefactor operator-(const ThetaPrefactor& o) const { return {pi - o.pi, i - o.i, q8 - o.q8}; }
    ThetaPrefactor operator*(int e) const { return {pi * e, i * e, q8 * e}; }
    friend bool operator==(const ThetaPrefactor& a, const ThetaPrefactor& b) {
        return a.pi == b.pi && a.i == b.i && a.q8 == b.q8;
    }
};

class ThetaExpansion {
public:
    ThetaExpansion(const ThetaPrefactor& pre, RootSeries body)
        : pre_(pre), body_(std::move(body)) {}

    const ThetaPrefactor& prefactor() const { return pre_; }
    const RootSeries& body() const { return body_; }

    ThetaExpansion times(const ThetaExpansion& o) const {
        return ThetaExpansion(pre_ + o.pre_, body_ * o.body_);
    }

    /// Quotient; x_shift cancels a common x^k factor of numerator and
    /// denominator before the denominator is inverted.
    ThetaExpansion over(const ThetaExpansion& den, int x_shift = 0) const {
        RootSeries num = x_shift > 0 ? body_.shifted_down(x_shift) : body_;
        RootSeries d = x_shift > 0 ? den.body_.shifted_down(x_shift) : den.body_;
        return ThetaExpansion(pre_ - den.pre_, num * d.inverted());
    }

    ThetaExpansion pow(int e) const {
        if (e < 0)
            throw std::invalid_argument("ThetaExpansion: negative power; divide instead");
        return ThetaExpansion(pre_ * e, body_.pow(e));
    }

    /// Collapse the prefactor into the series. pi and i must have cancelled,
    /// and the leftover q^{q8/8} must be a nonnegative whole number of
    /// half-steps.
    RootSeries materialize() const {
        if (pre_.pi != 0)
            throw std::logic_error("ThetaExpansion: non-cancelling pi prefactor (pi^" +
                                   std::to_string(pre_.pi) + ")");
        if (pre_.i % 4 != 0)
            throw std::logic_error("ThetaExpansion: non-cancelling i prefactor (i^" +
                                   std::to_string(pre_.i) + ")");
        if (pre_.q8 % 4 != 0 || pre_.q8 < 0)
            throw std::logic_error("ThetaExpansion: q^{1/8} prefactor does not reduce to "
                                   "half-steps (q8 exponent " + std::to_string(pre_.q8) + ")");
        return body_.q_shifted_up(pre_.q8 / 4);
    }

    /// Materialize an expansion with no variable dependence to a q-series.
    QSeries materialize_null() const {
        RootSeries s = materialize();
        for (int d = 1; d <= s.xtrunc(); ++d)
            if (!s.coef(d).is_zero())
                throw std::logic_error("ThetaExpansion: null value has variable dependence");
        return s.coef(0);
    }

private:
    ThetaPrefactor pre_;
    RootSeries body_;
};

namespace detail {

inline RootSeries sinh_half(int xtrunc, int J) {
    return (RootSeries::exponential(Rational(1, 2), xtrunc, J) -
            RootSeries::exponential(Rational(-1, 2), xtrunc, J))
        .scaled(Rational(1, 2));
}
inline RootSeries cosh_half(int xtrunc, int J) {
    return (RootSeries::exponential(Rational(1, 2), xtrunc, J) +
            RootSeries::exponential(Rational(-1, 2), xtrunc, J))
        .scaled(Rational(1, 2));
}

/// Π over levels of (1 + sign·e^{x} q^{level})(1 + sign·e^{-x} q^{level});
/// half = false walks integer levels q^n, half = true walks q^{n-1/2}.
/// Passing with_euler_factor multiplies in the matching (1 - q^n) factors.
inline RootSeries level_product(int xtrunc, int J, bool half, int sign, bool with_euler) {
    RootSeries out = RootSeries::one(xtrunc, J);
    RootSeries ep = RootSeries::exponential(Rational(1), xtrunc, J);
    RootSeries em = RootSeries::exponential(Rational(-1), xtrunc, J);
    for (int n = 1;; ++n) {
        int steps = half ? 2 * n - 1 : 2 * n; // exponent in half-steps
        if (steps > J) break;
        RootSeries fp = RootSeries::one(xtrunc, J) + ep.q_shifted_up(steps).scaled(Rational(sign));
        RootSeries fm = RootSeries::one(xtrunc, J) + em.q_shifted_up(steps).scaled(Rational(sign));
        out = out * fp * fm;
    }
    if (with_euler) {
        for (int n = 1; 2 * n <= J; ++n) {
            QSeries f(J, Rational(1));
            f.set_coef(2 * n, Rational(-1));
            out = out.scaled_q(f);
        }
    }
    return out;
}

/// Π (1 - q^n) through the q-truncation.
inline QSeries euler_product(int J) {
    QSeries out(J, Rational(1));
    for (int n = 1; 2 * n <= J; ++n) {
        QSeries f(J, Rational(1));
        f.set_coef(2 * n, Rational(-1));
        out = out * f;
    }
    return out;
}

} // namespace detail

/// theta(v): nome prefactor 2 q^{1/8}, sin(pi v) rewritten as -i sinh(x/2).
inline ThetaExpansion theta_at(int xtrunc, int J) {
    RootSeries body = detail::sinh_half(xtrunc, J).scaled(Rational(2)) *
                      detail::level_product(xtrunc, J, false, -1, true);
    return ThetaExpansion({0, 3, 1}, body);
}

/// theta_1(v): 2 q^{1/8} cos(pi v) -> cosh(x/2), integer levels, plus signs.
inline ThetaExpansion theta1_at(int xtrunc, int J) {
    RootSeries body = detail::cosh_half(xtrunc, J).scaled(Rational(2)) *
                      detail::level_product(xtrunc, J, false, +1, true);
    return ThetaExpansion({0, 0, 1}, body);
}

/// theta_2(v): half levels, minus signs, no nome prefactor.
inline ThetaExpansion theta2_at(int xtrunc, int J) {
    return ThetaExpansion({0, 0, 0}, detail::level_product(xtrunc, J, true, -1, true));
}

/// theta_3(v): half levels, plus signs.
inline ThetaExpansion theta3_at(int xtrunc, int J) {
    return ThetaExpansion({0, 0, 0}, detail::level_product(xtrunc, J, true, +1, true));
}

/// theta_j(0, tau) with the prefactors still tracked; xtrunc lifts the null
/// to a constant expansion for quotients against variable expansions.
inline ThetaExpansion theta_null(int j, int J, int xtrunc = 0) {
    ThetaExpansion at0 = [&]() -> ThetaExpansion {
        switch (j) {
        case 1: return theta1_at(0, J);
        case 2: return theta2_at(0, J);
        case 3: return theta3_at(0, J);
        default: throw std::invalid_argument("theta_null: index must be 1, 2 or 3");
        }
    }();
    if (xtrunc == 0) return at0;
    return ThetaExpansion(at0.prefactor(), RootSeries::constant(at0.body().coef(0), xtrunc));
}

/// d/dv theta(v, tau) at v = 0: only the sine factor survives, leaving
/// 2 q^{1/8} pi times the cubed Euler product.
inline ThetaExpansion theta_prime_null(int J, int xtrunc = 0) {
    QSeries eul = detail::euler_product(J);
    QSeries body_q = (eul * eul * eul).scaled(Rational(2));
    return ThetaExpansion({1, 0, 1}, RootSeries::constant(body_q, xtrunc));
}

/// The root multiplier in front of the genus quotients: the working variable
/// X absorbs 2 pi i, so the bare root is X/(2 pi i) = (1/2) X pi^{-1} i^{-1}.
inline ThetaExpansion variable_factor(int xtrunc, int J) {
    return ThetaExpansion({-1, -1, 0}, RootSeries::variable(xtrunc, J).scaled(Rational(1, 2)));
}

struct JacobiCheck {
    bool pass = false;
    int first_mismatch = -1; // half-step index, -1 when equal
    QSeries lhs, rhs;
};

/// theta'(0) = pi theta_1(0) theta_2(0) theta_3(0), checked in normalized
/// form: 2 Π(1-q^n)^3 against the product of the three null bodies, with the
/// pi and q^{1/8} prefactors required to match exactly.
inline JacobiCheck jacobi_identity_check(int J) {
    ThetaExpansion lhs = theta_prime_null(J);
    ThetaExpansion pi_unit(ThetaPrefactor{1, 0, 0}, RootSeries::one(0, J));
    ThetaExpansion rhs = pi_unit.times(theta_null(1, J)).times(theta_null(2, J)).times(theta_null(3, J));
    JacobiCheck out;
    out.lhs = lhs.body().coef(0);
    out.rhs = rhs.body().coef(0);
    if (!(lhs.prefactor() == rhs.prefactor())) {
        out.pass = false;
        out.first_mismatch = 0;
        return out;
    }
    out.first_mismatch = first_mismatch(out.lhs, out.rhs);
    out.pass = out.first_mismatch < 0;
    return out;
}

enum class ModularFormName { delta1, eps1, delta2, eps2 };

struct ModularForm {
    ModularFormName name;
    int weight = 0;
    std::string group; ///< "Gamma_0(2)" or "Gamma^0(2)"
    QSeries series;
};

inline const char* modular_form_label(ModularFormName n) {
    switch (n) {
    case ModularFormName::delta1: return "delta1";
    case ModularFormName::eps1: return "eps1";
    case ModularFormName::delta2: return "delta2";
    case ModularFormName::eps2: return "eps2";
    }
    return "?";
}

/// The four level-2 forms built from theta nulls:
///   delta1 = (theta_2^4 + theta_3^4)/8        eps1 = theta_2^4 theta_3^4 / 16
///   delta2 = -(theta_1^4 + theta_3^4)/8       eps2 = theta_1^4 theta_3^4 / 16
/// The fourth power of theta_1's 2 q^{1/8} prefactor is what produces the
/// q^{1/2} leading behavior of eps2.
inline ModularForm modular_form(ModularFormName name, int J) {
    ThetaExpansion t1 = theta_null(1, J).pow(4);
    ThetaExpansion t2 = theta_null(2, J).pow(4);
    ThetaExpansion t3 = theta_null(3, J).pow(4);
    ModularForm out;
    out.name = name;
    switch (name) {
    case ModularFormName::delta1:
        out.weight = 2;
        out.group = "Gamma_0(2)";
        out.series = (t2.materialize_null() + t3.materialize_null()).scaled(Rational(1, 8));
        break;
    case ModularFormName::eps1:
        out.weight = 4;
        out.group = "Gamma_0(2)";
        out.series = t2.times(t3).materialize_null().scaled(Rational(1, 16));
        break;
    case ModularFormName::delta2:
        out.weight = 2;
        out.group = "Gamma^0(2)";
        out.series = (t1.materialize_null() + t3.materialize_null()).scaled(Rational(-1, 8));
        break;
    case ModularFormName::eps2:
        out.weight = 4;
        out.group = "Gamma^0(2)";
        out.series = t1.times(t3).materialize_null().scaled(Rational(1, 16));
        break;
    }
    return out;
}

enum class RatioKind {
    l_factor,  ///< x theta'(0)/theta(x) * theta_1(x)/theta_1(0); q^0 limit (x/2)/tanh(x/2)
    a_factor,  ///< x theta'(0)/theta(x) * theta_2(x)/theta_2(0); q^0 limit (x/2)/sinh(x/2)
    twist_p1,  ///< theta_1^2(0)/theta_1^2(u) * theta_3(u)/theta_3(0) * theta_2(u)/theta_2(0)
    twist_p2,  ///< theta_2^2(0)/theta_2^2(u) * theta_3(u)/theta_3(0) * theta_1(u)/theta_1(0)
};

struct ThetaRatio {
    RatioKind kind;
    EvenSeries<QSeries> expansion; ///< in the root variable x, or in u
};

inline ThetaRatio theta_ratio(RatioKind kind, int D, int J) {
    ThetaRatio out;
    out.kind = kind;
    switch (kind) {
    case RatioKind::l_factor:
    case RatioKind::a_factor: {
        // One guard degree: cancelling the common x of numerator and
        // denominator shifts every coefficient down by one.
        const int Dg = D + 1;
        ThetaExpansion num = variable_factor(Dg, J).times(theta_prime_null(J, Dg));
        ThetaExpansion genus = num.over(theta_at(Dg, J), 1);
        ThetaExpansion twist = (kind == RatioKind::l_factor)
                                   ? theta1_at(Dg, J).over(theta_null(1, J, Dg))
                                   : theta2_at(Dg, J).over(theta_null(2, J, Dg));
        out.expansion = genus.times(twist).materialize().x_truncated(D).even_part_strict(
            CombineMode::multiplicative);
        break;
    }
    case RatioKind::twist_p1: {
        ThetaExpansion r = theta_null(1, J, D).pow(2).over(theta1_at(D, J).pow(2))
                               .times(theta3_at(D, J).over(theta_null(3, J, D)))
                               .times(theta2_at(D, J).over(theta_null(2, J, D)));
        out.expansion = r.materialize().even_part_strict(CombineMode::multiplicative);
        break;
    }
    case RatioKind::twist_p2: {
        ThetaExpansion r = theta_null(2, J, D).pow(2).over(theta2_at(D, J).pow(2))
                               .times(theta3_at(D, J).over(theta_null(3, J, D)))
                               .times(theta1_at(D, J).over(theta_null(1, J, D)));
        out.expansion = r.materialize().even_part_strict(CombineMode::multiplicative);
        break;
    }
    }
    return out;
}

} // namespace qgenus
