#include "qgenus/power_sums.hpp"

#include "qgenus/genera.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

using namespace qgenus;

namespace {

// Brute-force side of the bridge checks: dense polynomials in m explicit
// root variables, truncated by total degree. Entirely independent of the
// Newton-table code under test.
struct RootPoly {
    int m = 0, cap = 0;
    std::map<std::vector<int>, Rational> terms;

    static RootPoly constant(int m, int cap, const Rational& c) {
        RootPoly p{m, cap, {}};
        if (!c.is_zero()) p.terms[std::vector<int>(m, 0)] = c;
        return p;
    }

    void add_term(const std::vector<int>& e, const Rational& c) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg > cap || c.is_zero()) return;
        auto [it, fresh] = terms.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    RootPoly operator+(const RootPoly& o) const {
        RootPoly out = *this;
        for (const auto& [e, c] : o.terms) out.add_term(e, c);
        return out;
    }
    RootPoly operator*(const RootPoly& o) const {
        RootPoly out{m, cap, {}};
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                std::vector<int> e(m);
                for (int i = 0; i < m; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    bool operator==(const RootPoly& o) const { return terms == o.terms; }
};

// f(x_j) for one even series, in explicit variables.
RootPoly even_at_var(const EvenSeries<Rational>& f, int j, int m, int cap) {
    RootPoly out{m, cap, {}};
    for (int r = 0; r <= f.max_r(); ++r) {
        if (2 * r > cap) break;
        std::vector<int> e(m, 0);
        e[j] = 2 * r;
        out.add_term(e, f.a[r]);
    }
    return out;
}

// e_i of the squared variables, from Π_j (1 + x_j^2 t).
std::vector<RootPoly> elementary_squares(int m, int cap) {
    std::vector<RootPoly> e(m + 1, RootPoly::constant(m, cap, Rational(0)));
    e[0] = RootPoly::constant(m, cap, Rational(1));
    for (int j = 0; j < m; ++j) {
        for (int i = std::min(j + 1, m); i >= 1; --i) {
            RootPoly xj2{m, cap, {}};
            std::vector<int> exp_(m, 0);
            exp_[j] = 2;
            xj2.add_term(exp_, Rational(1));
            e[i] = e[i] + e[i - 1] * xj2;
        }
    }
    return e;
}

RootPoly substitute_pontryagin(const GradedClass& g, int m, int cap) {
    std::vector<RootPoly> e = elementary_squares(m, cap);
    RootPoly out{m, cap, {}};
    for (const auto& [mono, coef] : g.terms()) {
        REQUIRE(mono.u_exp() == 0);
        RootPoly term = RootPoly::constant(m, cap, coef);
        for (int i = 1; i <= Monomial::kMaxP; ++i)
            for (int k = 0; k < mono.p_exp(i); ++k)
                term = term * e[i];
        out = out + term;
    }
    return out;
}

} // namespace

TEST_CASE("newton identities: first power sums") {
    RingSignature sig{3, 6, false};
    PowerSumBridge bridge(5, sig);
    GradedClass p1 = GradedClass::p(sig, 1), p2 = GradedClass::p(sig, 2),
                p3 = GradedClass::p(sig, 3);
    CHECK(bridge.power_sum(0) == GradedClass(sig, Rational(5)));
    CHECK(bridge.power_sum(1) == p1);
    CHECK(bridge.power_sum(2) == p1 * p1 - p2 * Rational(2));          // worked by hand
    CHECK(bridge.power_sum(3) == p1.pow(3) - p1 * p2 * Rational(3) + p3 * Rational(3));
}

TEST_CASE("additive symmetrization") {
    RingSignature sig{3, 6, false};
    PowerSumBridge bridge(6, sig);
    // f = 1: constants add up to the number of roots
    EvenSeries<Rational> f;
    f.mode = CombineMode::additive;
    f.a = {Rational(1)};
    CHECK(symmetrize_additive(f, bridge) == GradedClass(sig, Rational(6)));
    // f = x^2 -> s_2 = p1
    f.a = {Rational(0), Rational(1)};
    CHECK(symmetrize_additive(f, bridge) == GradedClass::p(sig, 1));
    // f = x^4 -> s_4 = p1^2 - 2 p2
    f.a = {Rational(0), Rational(0), Rational(1)};
    GradedClass p1 = GradedClass::p(sig, 1), p2 = GradedClass::p(sig, 2);
    CHECK(symmetrize_additive(f, bridge) == p1 * p1 - p2 * Rational(2));
    // tag mismatch is an error
    f.mode = CombineMode::multiplicative;
    CHECK_THROWS_AS(symmetrize_additive(f, bridge), std::invalid_argument);
}

TEST_CASE("multiplicative symmetrization: total class") {
    RingSignature sig{3, 6, false};
    PowerSumBridge bridge(4, sig);
    EvenSeries<Rational> f; // 1 + x^2
    f.mode = CombineMode::multiplicative;
    f.a = {Rational(1), Rational(1), Rational(0), Rational(0)};
    GradedClass total = symmetrize_multiplicative(f, bridge);
    GradedClass expect = GradedClass(sig, Rational(1)) + GradedClass::p(sig, 1) +
                         GradedClass::p(sig, 2) + GradedClass::p(sig, 3);
    CHECK(total == expect);
    CHECK_THROWS_AS(symmetrize_additive(f, bridge), std::invalid_argument);
}

TEST_CASE("signature factor gives p1/3 in dimension 4") {
    RingSignature sig{1, 2, false};
    PowerSumBridge bridge(2, sig);
    GradedClass lhat = symmetrize_multiplicative(l_hat_root_factor(2), bridge);
    CHECK(lhat.degree_part(2) == GradedClass::p(sig, 1) * Rational(1, 3));
    CHECK(lhat.constant_term() == Rational(4)); // 2^m
}

TEST_CASE("explicit-roots oracle agrees with the bridge") {
    const int m = 3, cap = 6;
    RingSignature sig{3, cap, false};
    PowerSumBridge bridge(m, sig);

    EvenSeries<Rational> f;
    f.mode = CombineMode::additive;
    f.a = {Rational(3), Rational(1, 2), Rational(-2, 3), Rational(5)};

    RootPoly direct = RootPoly::constant(m, cap, Rational(0));
    for (int j = 0; j < m; ++j)
        direct = direct + even_at_var(f, j, m, cap);
    CHECK(substitute_pontryagin(symmetrize_additive(f, bridge), m, cap) == direct);

    EvenSeries<Rational> g;
    g.mode = CombineMode::multiplicative;
    g.a = {Rational(1), Rational(1, 4), Rational(-1, 6), Rational(1, 9)};
    RootPoly prod = RootPoly::constant(m, cap, Rational(1));
    for (int j = 0; j < m; ++j)
        prod = prod * even_at_var(g, j, m, cap);
    CHECK(substitute_pontryagin(symmetrize_multiplicative(g, bridge), m, cap) == prod);
}

TEST_CASE("bridge stability in the number of roots") {
    const int D = 8;
    RingSignature sig{4, D, false};
    EvenSeries<Rational> f = a_hat_root_factor(D);
    GradedClass base = symmetrize_multiplicative(f, PowerSumBridge(D, sig));
    for (int m : {D + 1, D + 5})
        CHECK(symmetrize_multiplicative(f, PowerSumBridge(m, sig)) == base);
}

TEST_CASE("even series inverse and log") {
    EvenSeries<Rational> f;
    f.mode = CombineMode::multiplicative;
    f.a = {Rational(1), Rational(2), Rational(3)};
    EvenSeries<Rational> inv = f.inverted();
    EvenSeries<Rational> prod = f.times(inv);
    CHECK(prod.a[0] == Rational(1));
    CHECK(prod.a[1].is_zero());
    CHECK(prod.a[2].is_zero());
    EvenSeries<Rational> lg = f.logarithm();
    CHECK(lg.a[0].is_zero());
    CHECK(lg.a[1] == Rational(2));               // log(1+2y+3y^2) = 2y + y^2 + ...
    CHECK(lg.a[2] == Rational(1));
    EvenSeries<Rational> bad;
    bad.mode = CombineMode::multiplicative;
    bad.a = {Rational(2)};
    CHECK_THROWS_AS(bad.logarithm(), std::domain_error);
}
