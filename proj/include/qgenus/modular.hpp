#pragma once

#include "qgenus/genera.hpp"
#include "qgenus/graded_class.hpp"
#include "qgenus/half_q_series.hpp"
#include "qgenus/power_sums.hpp"
#include "qgenus/theta.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qgenus {

/// The four decomposition families. 8k+4 runs at dimension 8k+4 with basis
/// (8 delta_2)^{2k+1-2r} eps_2^r; 8k runs at dimension 8k with exponents
/// 2k-2r. Twisted variants carry the extra plane bundle.
enum class CaseKind { untwisted_8k4, untwisted_8k, twisted_8k4, twisted_8k };

inline bool case_is_8k4(CaseKind c) {
    return c == CaseKind::untwisted_8k4 || c == CaseKind::twisted_8k4;
}
inline bool case_is_twisted(CaseKind c) {
    return c == CaseKind::twisted_8k4 || c == CaseKind::twisted_8k;
}
inline int case_dim(CaseKind c, int k) {
    int dim = case_is_8k4(c) ? 8 * k + 4 : 8 * k;
    if (dim <= 0)
        throw std::invalid_argument("case_dim: k out of range for this family");
    return dim;
}
/// Exponent w with P1 = 2^w [h_0 (8 delta_1)^{...} + ...]; equals dim/2.
inline int case_weight_exp(CaseKind c, int k) { return case_dim(c, k) / 2; }
inline int basis_delta_exp(CaseKind c, int k, int r) {
    return case_is_8k4(c) ? 2 * k + 1 - 2 * r : 2 * k - 2 * r;
}
inline const char* case_label(CaseKind c) {
    switch (c) {
    case CaseKind::untwisted_8k4: return "8k+4";
    case CaseKind::untwisted_8k: return "8k";
    case CaseKind::twisted_8k4: return "8k+4 twisted";
    case CaseKind::twisted_8k: return "8k twisted";
    }
    return "?";
}
/// Identifier-safe form of the case label, used in report ids.
inline const char* case_slug(CaseKind c) {
    switch (c) {
    case CaseKind::untwisted_8k4: return "8k4";
    case CaseKind::untwisted_8k: return "8k";
    case CaseKind::twisted_8k4: return "8k4-twisted";
    case CaseKind::twisted_8k: return "8k-twisted";
    }
    return "?";
}
inline RingSignature case_signature(CaseKind c, int k) {
    return signature_for_dim(case_dim(c, k), case_is_twisted(c));
}
/// Default q-truncation: k+1 unknowns need k half-steps, kept with extra
/// residual-check orders beyond the solve.
inline int default_q_trunc(int k) { return 2 * k + 6; }

/// Substitute the even-series variable by u.
inline ClassSeries even_series_at_u(const EvenSeries<QSeries>& f, const RingSignature& sig) {
    if (f.a.empty())
        return ClassSeries(0, GradedClass(1));
    const int J = f.a[0].trunc();
    ClassSeries out(J);
    GradedClass u2 = GradedClass::u(sig) * GradedClass::u(sig);
    GradedClass upow(sig, Rational(1));
    for (int r = 0; r <= f.max_r(); ++r) {
        if (r > 0) upow = upow * u2;
        if (upow.is_zero()) break;
        for (int j = 0; j <= J; ++j) {
            const Rational& c = f.a[r].coef(j);
            if (c.is_zero()) continue;
            out.set_coef(j, out.coef(j) + upow * c);
        }
    }
    return out;
}

/// Both construction routes of one of the P series, each coefficient already
/// reduced to its top-degree component. via_genus multiplies the genus form
/// by ch of the Theta element; via_theta expands the theta quotients per
/// root and symmetrizes through the bridge. The two must agree everywhere.
struct DualRoute {
    ClassSeries via_genus;
    ClassSeries via_theta;

    bool agree() const { return via_genus == via_theta; }
    int first_mismatch_halfstep() const { return first_mismatch(via_genus, via_theta); }
};

namespace detail {

inline ClassSeries top_extract(const ClassSeries& s, int D) {
    ClassSeries out(s.trunc());
    for (int j = 0; j <= s.trunc(); ++j)
        out.set_coef(j, s.coef(j).degree_part(D));
    return out;
}

} // namespace detail

/// P2: the A-hat side. Route (a) = {A-hat ch(Theta_2) [cosh(u/2)]}^(top);
/// route (b) = {Π_j per-root theta quotient [twist quotients]}^(top).
inline DualRoute build_p2(CaseKind kind, int k, int J = -1) {
    const int dim = case_dim(kind, k);
    const RingSignature sig = case_signature(kind, k);
    const int D = sig.max_degree;
    if (J < 0) J = default_q_trunc(k);
    const bool twisted = case_is_twisted(kind);

    GradedClass front = a_hat_form(dim, sig);
    if (twisted)
        front = front * ch_line_bundle_terms(sig).cosh_half;
    ClassSeries via_genus =
        theta_element_ch(ThetaElement::theta2, twisted, dim, sig, J).scaled_by(front);

    PowerSumBridge bridge(dim / 2, sig);
    ClassSeries via_theta =
        symmetrize_multiplicative(theta_ratio(RatioKind::a_factor, D, J).expansion, bridge);
    if (twisted)
        via_theta = via_theta * even_series_at_u(theta_ratio(RatioKind::twist_p2, D, J).expansion, sig);

    return DualRoute{detail::top_extract(via_genus, D), detail::top_extract(via_theta, D)};
}

/// P1: the L-hat side. Route (a) = {L-hat ch(Theta_1) [/cosh^2(u/2)]}^(top);
/// route (b) carries the 2^{dim/2} normalization of the per-root quotient.
inline DualRoute build_p1(CaseKind kind, int k, int J = -1) {
    const int dim = case_dim(kind, k);
    const RingSignature sig = case_signature(kind, k);
    const int D = sig.max_degree;
    if (J < 0) J = default_q_trunc(k);
    const bool twisted = case_is_twisted(kind);

    GradedClass front = l_hat_form(dim, sig);
    if (twisted)
        front = front * ch_line_bundle_terms(sig).cosh_sq_half.inverse();
    ClassSeries via_genus =
        theta_element_ch(ThetaElement::theta1, twisted, dim, sig, J).scaled_by(front);

    PowerSumBridge bridge(dim / 2, sig);
    ClassSeries via_theta =
        symmetrize_multiplicative(theta_ratio(RatioKind::l_factor, D, J).expansion, bridge)
            .scaled(Rational::pow2(case_weight_exp(kind, k)));
    if (twisted)
        via_theta = via_theta * even_series_at_u(theta_ratio(RatioKind::twist_p1, D, J).expansion, sig);

    return DualRoute{detail::top_extract(via_genus, D), detail::top_extract(via_theta, D)};
}

/// Solved coefficients of P2 against the (8 delta_2)^{...} eps_2^r basis,
/// plus whatever residual is left through the truncation (it must vanish).
template <typename C>
struct BasisDecomposition {
    CaseKind kind;
    int k = 0;
    std::vector<C> coeffs;
    HalfQSeries<C> residual;

    bool residual_zero() const { return residual.is_zero(); }
};

using Decomposition = BasisDecomposition<GradedClass>;

/// Triangular solve, ascending r: basis element r first contributes at
/// half-step r (eps_2 = q^{1/2} + ..., 8 delta_2(0) = -1), so each leading
/// coefficient determines one unknown.
template <typename C>
BasisDecomposition<C> decompose(const HalfQSeries<C>& p2, CaseKind kind, int k) {
    const int J = p2.trunc();
    if (J < k + 2)
        throw std::invalid_argument("decompose: truncation must cover k half-steps plus "
                                    "residual-check orders");
    QSeries delta2_8 = modular_form(ModularFormName::delta2, J).series.scaled(Rational(8));
    QSeries eps2 = modular_form(ModularFormName::eps2, J).series;

    BasisDecomposition<C> out;
    out.kind = kind;
    out.k = k;
    out.residual = p2;
    for (int r = 0; r <= k; ++r) {
        QSeries basis = delta2_8.pow(basis_delta_exp(kind, k, r)) * eps2.pow(r);
        for (int j = 0; j < r; ++j)
            if (!basis.coef(j).is_zero())
                throw std::logic_error("decompose: basis element not triangular");
        const Rational lead = basis.coef(r);
        if (lead.is_zero())
            throw std::logic_error("decompose: singular triangular system");
        C h = out.residual.coef(r) * inverse(lead);
        for (int j = r; j <= J; ++j)
            out.residual.set_coef(j, out.residual.coef(j) - h * basis.coef(j));
        out.coeffs.push_back(h);
    }
    return out;
}

/// The mirrored combination 2^{dim/2} Σ coeffs[r] (8 delta_1)^{...} eps_1^r.
/// Equality with the built P1 is this artifact's expansion-level certificate
/// of the weight-(dim/2) transformation law connecting the two routes.
template <typename C>
HalfQSeries<C> reconstruct_p1(const BasisDecomposition<C>& dec, int J) {
    QSeries delta1_8 = modular_form(ModularFormName::delta1, J).series.scaled(Rational(8));
    QSeries eps1 = modular_form(ModularFormName::eps1, J).series;
    HalfQSeries<C> out(J);
    for (int r = 0; r <= dec.k; ++r) {
        QSeries basis = delta1_8.pow(basis_delta_exp(dec.kind, dec.k, r)) * eps1.pow(r);
        for (int j = 0; j <= J; ++j)
            out.set_coef(j, out.coef(j) + dec.coeffs[r] * basis.coef(j));
    }
    const Rational pref = Rational::pow2(case_weight_exp(dec.kind, dec.k));
    for (int j = 0; j <= J; ++j)
        out.set_coef(j, out.coef(j) * pref);
    return out;
}

struct BasisExpansionCheck {
    bool pass = false;
    int k = 0, r = 0;
    bool family_8k4 = true;
    QSeries computed;          ///< (8 delta_1)^{...} eps_1^r
    Rational lead, q1, q2;     ///< printed leading, q^1 and q^2 coefficients
};

/// Recompute (8 delta_1)^{2k+1-2r} eps_1^r (or the 8k family power) and
/// compare the printed closed-form q^0, q^1, q^2 coefficients.
inline BasisExpansionCheck basis_expansion_check(bool family_8k4, int k, int r, int J = 8) {
    if (r < 0 || r > k)
        throw std::invalid_argument("basis_expansion_check: need 0 <= r <= k");
    BasisExpansionCheck out;
    out.k = k;
    out.r = r;
    out.family_8k4 = family_8k4;
    QSeries delta1_8 = modular_form(ModularFormName::delta1, J).series.scaled(Rational(8));
    QSeries eps1 = modular_form(ModularFormName::eps1, J).series;
    const int de = family_8k4 ? 2 * k + 1 - 2 * r : 2 * k - 2 * r;
    out.computed = delta1_8.pow(de) * eps1.pow(r);

    const long long kk = k, rr = r;
    if (family_8k4) {
        out.lead = Rational::pow2(2 * kk + 1 - 6 * rr);
        out.q1 = out.lead * Rational(48 * kk + 24 - 64 * rr);
        out.q2 = out.lead * Rational(1152 * kk * kk - 3072 * kk * rr + 2048 * rr * rr +
                                     624 * kk - 1024 * rr + 24);
    } else {
        out.lead = Rational::pow2(2 * kk - 6 * rr);
        out.q1 = out.lead * Rational(48 * kk - 64 * rr);
        out.q2 = out.lead * Rational(1152 * kk * kk - 3072 * kk * rr + 2048 * rr * rr -
                                     528 * kk + 512 * rr);
    }
    out.pass = out.computed.coef(0) == out.lead && out.computed.coef(1).is_zero() &&
               out.computed.coef(2) == out.q1 && out.computed.coef(3).is_zero() &&
               out.computed.coef(4) == out.q2;
    return out;
}

} // namespace qgenus
