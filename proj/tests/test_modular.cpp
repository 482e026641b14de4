#include "qgenus/modular.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qgenus;

TEST_CASE("case bookkeeping") {
    CHECK(case_dim(CaseKind::untwisted_8k4, 1) == 12);
    CHECK(case_dim(CaseKind::untwisted_8k, 2) == 16);
    CHECK(case_weight_exp(CaseKind::untwisted_8k4, 1) == 6);
    CHECK(case_weight_exp(CaseKind::twisted_8k, 2) == 8);
    CHECK(basis_delta_exp(CaseKind::untwisted_8k4, 1, 0) == 3);
    CHECK(basis_delta_exp(CaseKind::untwisted_8k, 2, 1) == 2);
    CHECK_THROWS_AS(case_dim(CaseKind::untwisted_8k, 0), std::invalid_argument);
}

TEST_CASE("both routes agree and leading coefficients match the genus tops") {
    for (CaseKind kind : {CaseKind::untwisted_8k4, CaseKind::untwisted_8k}) {
        for (int k = case_is_8k4(kind) ? 0 : 1; k <= 1; ++k) {
            const int dim = case_dim(kind, k);
            RingSignature sig = signature_for_dim(dim, false);
            DualRoute p2 = build_p2(kind, k);
            DualRoute p1 = build_p1(kind, k);
            INFO("case " << case_label(kind) << " k=" << k);
            CHECK(p2.agree());
            CHECK(p1.agree());
            CHECK(p2.via_genus.coef(0) == a_hat_form(dim, sig).degree_part(dim / 2));
            CHECK(p1.via_genus.coef(0) == l_hat_form(dim, sig).degree_part(dim / 2));
            // the L-hat side has integer q-powers only
            for (int j = 1; j <= p1.via_genus.trunc(); j += 2)
                CHECK(p1.via_genus.coef(j).is_zero());
        }
    }
}

TEST_CASE("twisted routes agree and specialize at u = 0") {
    const int k = 1, J = 6;
    DualRoute p2t = build_p2(CaseKind::twisted_8k4, k, J);
    DualRoute p1t = build_p1(CaseKind::twisted_8k4, k, J);
    CHECK(p2t.agree());
    CHECK(p1t.agree());
    DualRoute p2 = build_p2(CaseKind::untwisted_8k4, k, J);
    DualRoute p1 = build_p1(CaseKind::untwisted_8k4, k, J);
    for (int j = 0; j <= J; ++j) {
        CHECK(p2t.via_genus.coef(j).with_u_zero() == p2.via_genus.coef(j));
        CHECK(p1t.via_genus.coef(j).with_u_zero() == p1.via_genus.coef(j));
    }
}

TEST_CASE("decomposition: solved coefficients and printed forms") {
    const int k = 1, dim = 12;
    RingSignature sig = signature_for_dim(dim, false);
    ClassSeries p2 = build_p2(CaseKind::untwisted_8k4, k).via_genus;
    BasisDecomposition<GradedClass> dec = decompose(p2, CaseKind::untwisted_8k4, k);
    CHECK(dec.residual_zero());

    GradedClass ahat_top = a_hat_form(dim, sig).degree_part(6);
    CHECK(dec.coeffs[0] == -ahat_top);
    GradedClass cht = ch_tangent(dim, sig);
    GradedClass h1_expect =
        (a_hat_form(dim, sig) * (cht + GradedClass(60))).degree_part(6);
    CHECK(dec.coeffs[1] == h1_expect);
}

TEST_CASE("decomposition: 8k leading coefficient") {
    const int k = 1, dim = 8;
    RingSignature sig = signature_for_dim(dim, false);
    BasisDecomposition<GradedClass> dec =
        decompose(build_p2(CaseKind::untwisted_8k, k).via_genus, CaseKind::untwisted_8k, k);
    CHECK(dec.residual_zero());
    CHECK(dec.coeffs[0] == a_hat_form(dim, sig).degree_part(4));
}

TEST_CASE("twisted decomposition leading coefficient carries cosh(u/2)") {
    const int k = 1, dim = 12;
    RingSignature sig = signature_for_dim(dim, true);
    BasisDecomposition<GradedClass> dec =
        decompose(build_p2(CaseKind::twisted_8k4, k).via_genus, CaseKind::twisted_8k4, k);
    GradedClass expect =
        -(a_hat_form(dim, sig) * ch_line_bundle_terms(sig).cosh_half).degree_part(6);
    CHECK(dec.coeffs[0] == expect);
    CHECK(dec.residual_zero());
}

TEST_CASE("reconstruction equality and the q^0/q^1 consequences") {
    const int k = 1, dim = 12, J = 8;
    RingSignature sig = signature_for_dim(dim, false);
    DualRoute p1 = build_p1(CaseKind::untwisted_8k4, k, J);
    BasisDecomposition<GradedClass> dec =
        decompose(build_p2(CaseKind::untwisted_8k4, k, J).via_genus, CaseKind::untwisted_8k4, k);
    ClassSeries rec = reconstruct_p1(dec, J);
    CHECK(rec == p1.via_genus);

    // q^0: {L-hat}^top = 8 Σ 2^{6k-6r} h_r
    GradedClass lhat_top = l_hat_form(dim, sig).degree_part(6);
    GradedClass rhs0 = (dec.coeffs[0] * Rational(64) + dec.coeffs[1]) * Rational(8);
    CHECK(lhat_top == rhs0);

    // q^1: {L-hat ch(2T - 2 dim)}^top = 8 Σ 2^{6k-6r}(48k+24-64r) h_r
    GradedClass lhs1 = (l_hat_form(dim, sig) *
                        ((ch_tangent(dim, sig) - GradedClass(dim)) * Rational(2)))
                           .degree_part(6);
    GradedClass rhs1 =
        (dec.coeffs[0] * Rational(64 * 72) + dec.coeffs[1] * Rational(8)) * Rational(8);
    CHECK(lhs1 == rhs1);
}

TEST_CASE("twisted reconstruction gives the cosh^2 quotient at q^0") {
    const int k = 1, dim = 12, J = 6;
    RingSignature sig = signature_for_dim(dim, true);
    BasisDecomposition<GradedClass> dec =
        decompose(build_p2(CaseKind::twisted_8k4, k, J).via_genus, CaseKind::twisted_8k4, k);
    ClassSeries rec = reconstruct_p1(dec, J);
    GradedClass lhs = (l_hat_form(dim, sig) * ch_line_bundle_terms(sig).cosh_sq_half.inverse())
                          .degree_part(6);
    CHECK(rec.coef(0) == lhs);
    GradedClass rhs = (dec.coeffs[0] * Rational(64) + dec.coeffs[1]) * Rational(8);
    CHECK(lhs == rhs);
}

TEST_CASE("decompose preconditions") {
    ClassSeries p2 = build_p2(CaseKind::untwisted_8k4, 1, 2).via_genus;
    CHECK_THROWS_AS(decompose(p2, CaseKind::untwisted_8k4, 1), std::invalid_argument);
}

TEST_CASE("basis expansion printed coefficients") {
    // k=1, r=0: q^1 coefficient (48k+24)·2^3 = 72·8
    BasisExpansionCheck c = basis_expansion_check(true, 1, 0);
    CHECK(c.pass);
    CHECK(c.computed.coef(2) == Rational(72 * 8));
    // k=1, r=1: leading coefficient 2^{2k+1-6r} = 1/8
    c = basis_expansion_check(true, 1, 1);
    CHECK(c.pass);
    CHECK(c.lead == Rational(1, 8));
    // 8k family, k=2, r=0: q^2 coefficient (1152·4 - 528·2)·2^4 = 3552·16
    c = basis_expansion_check(false, 2, 0);
    CHECK(c.pass);
    CHECK(c.computed.coef(4) == Rational(3552 * 16));
    for (int k = 0; k <= 3; ++k)
        for (int r = 0; r <= k; ++r) {
            CHECK(basis_expansion_check(true, k, r).pass);
            CHECK(basis_expansion_check(false, k, r).pass);
        }
    CHECK_THROWS_AS(basis_expansion_check(true, 1, 2), std::invalid_argument);
}

TEST_CASE("combination coefficients over the raw q-coefficients are integral") {
    for (CaseKind kind : {CaseKind::untwisted_8k4, CaseKind::untwisted_8k}) {
        for (int k = case_is_8k4(kind) ? 0 : 1; k <= 3; ++k) {
            const int J = default_q_trunc(k);
            for (int j = 0; j <= k; ++j) {
                QSeries impulse = QSeries::monomial(J, j, Rational(1));
                BasisDecomposition<Rational> dec = decompose(impulse, kind, k);
                for (int r = 0; r <= k; ++r)
                    CHECK(dec.coeffs[r].is_integer());
            }
        }
    }
}

TEST_CASE("even series substituted at u") {
    RingSignature sig{1, 4, true};
    EvenSeries<QSeries> f;
    f.mode = CombineMode::multiplicative;
    f.a.assign(3, QSeries(4));
    f.a[0] = QSeries(4, Rational(1));
    f.a[1].set_coef(2, Rational(5)); // 5 q u^2
    ClassSeries s = even_series_at_u(f, sig);
    GradedClass u = GradedClass::u(sig);
    CHECK(s.coef(0) == GradedClass(sig, Rational(1)));
    CHECK(s.coef(2) == u * u * Rational(5));
}
