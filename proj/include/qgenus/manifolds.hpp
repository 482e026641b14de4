#pragma once

#include "qgenus/genera.hpp"
#include "qgenus/graded_class.hpp"
#include "qgenus/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgenus {

/// Partition of dim/4 as a weakly decreasing list of parts; the key of a
/// Pontryagin number <p_λ, [M]>.
using Partition = std::vector<int>;

inline std::string partition_str(const Partition& p) {
    std::string s = "p[";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

/// A manifold presented by its Pontryagin numbers, dimension and spin flag;
/// the complete data for every characteristic-number functional used here.
struct ManifoldClass {
    std::string name;
    int dim = 0;
    bool spin = false;
    std::map<Partition, Rational> pontryagin;

    Rational number(const Partition& p) const {
        auto it = pontryagin.find(p);
        return it == pontryagin.end() ? Rational(0) : it->second;
    }
};

namespace detail {

inline void partitions_rec(int n, int max_part, Partition& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// <G, [M]>: every term must be u-free of internal degree dim/2 (i.e. a
/// monomial in the p_i of total weight dim/4).
inline Rational pair_with_fundamental_class(const GradedClass& top, const ManifoldClass& m) {
    Rational out = 0;
    for (const auto& [mono, coef] : top.terms()) {
        if (mono.u_exp() != 0)
            throw std::invalid_argument("pairing: class has u-dependent terms");
        if (mono.degree() != m.dim / 2)
            throw std::invalid_argument("pairing: term of internal degree " +
                                        std::to_string(mono.degree()) + " against dimension " +
                                        std::to_string(m.dim));
        Partition p;
        for (int i = Monomial::kMaxP; i >= 1; --i)
            for (int e = 0; e < mono.p_exp(i); ++e)
                p.push_back(i);
        out += coef * m.number(p);
    }
    return out;
}

/// Quaternionic projective space HP^n: total Pontryagin class
/// (1+u)^{2n+2}(1+4u)^{-1} in Z[u]/(u^{n+1}) with <u^n,[HP^n]> = 1, so
/// <p_λ> is the product of the class coefficients over the parts.
inline ManifoldClass hp_space(int n) {
    if (n < 1)
        throw std::invalid_argument("hp_space: need n >= 1");
    std::vector<Rational> binom(n + 1, Rational(0)); // (1+u)^{2n+2} mod u^{n+1}
    Rational b = 1;
    for (int i = 0; i <= n; ++i) {
        binom[i] = b;
        b = b * Rational(2 * n + 2 - i) * Rational(1, i + 1);
    }
    std::vector<Rational> c(n + 1, Rational(0)); // p(HP^n) = Σ c[i] u^i
    Rational pw = 1;                             // (-4)^i from (1+4u)^{-1}
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j)
            c[i + j] += pw * binom[j];
        pw = pw * Rational(-4);
    }
    ManifoldClass m;
    m.name = "HP" + std::to_string(n);
    m.dim = 4 * n;
    m.spin = true; // H^2(HP^n; Z_2) = 0
    for (const Partition& lam : partitions_of(n)) {
        Rational v = 1;
        for (int part : lam)
            v *= c[part];
        m.pontryagin[lam] = v;
    }
    return m;
}

/// Named catalog entries. K3 is fixed by p1 = -48 (signature -16); the Bott
/// manifold by p1^2 = 896, p2 = 128, the unique dim-8 numbers with
/// A-hat = 1 and signature 0.
inline ManifoldClass catalog(const std::string& name) {
    if (name == "K3") {
        ManifoldClass m;
        m.name = "K3";
        m.dim = 4;
        m.spin = true;
        m.pontryagin[{1}] = Rational(-48);
        return m;
    }
    if (name == "Bott8") {
        ManifoldClass m;
        m.name = "Bott8";
        m.dim = 8;
        m.spin = true;
        m.pontryagin[{1, 1}] = Rational(896);
        m.pontryagin[{2}] = Rational(128);
        return m;
    }
    if (name.size() > 2 && name.rfind("HP", 0) == 0) {
        int n = 0;
        for (std::size_t i = 2; i < name.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(name[i])))
                throw std::invalid_argument("catalog: unknown manifold " + name);
            n = 10 * n + (name[i] - '0');
        }
        return hp_space(n);
    }
    throw std::invalid_argument("catalog: unknown manifold " + name);
}

/// Pontryagin numbers of M1 x M2 from the factors alone, by splitting every
/// part of λ across the two factors (p(T1 ⊕ T2) = p(T1) p(T2) and the
/// pairing factors through the Künneth bidegrees).
inline ManifoldClass product(const ManifoldClass& m1, const ManifoldClass& m2) {
    ManifoldClass out;
    out.name = m1.name + "×" + m2.name;
    out.dim = m1.dim + m2.dim;
    out.spin = m1.spin && m2.spin;
    const int w1 = m1.dim / 4, w2 = m2.dim / 4;
    for (const Partition& lam : partitions_of(w1 + w2)) {
        // Assign each part an (a, b) split with a + b = part; the nonzero
        // a's and b's must form partitions of w1 and w2 respectively.
        Rational total = 0;
        std::vector<int> a(lam.size(), 0);
        auto rec = [&](auto&& self, std::size_t idx, int sum_a) -> void {
            if (sum_a > w1) return;
            if (idx == lam.size()) {
                if (sum_a != w1) return;
                Partition mu, nu;
                for (std::size_t t = 0; t < lam.size(); ++t) {
                    if (a[t] > 0) mu.push_back(a[t]);
                    if (lam[t] - a[t] > 0) nu.push_back(lam[t] - a[t]);
                }
                std::sort(mu.begin(), mu.end(), std::greater<int>());
                std::sort(nu.begin(), nu.end(), std::greater<int>());
                total += m1.number(mu) * m2.number(nu);
                return;
            }
            for (int av = 0; av <= lam[idx]; ++av) {
                a[idx] = av;
                self(self, idx + 1, sum_a + av);
            }
            a[idx] = 0;
        };
        rec(rec, 0, 0);
        out.pontryagin[lam] = total;
    }
    return out;
}

enum class CharFunctional { signature, a_hat_genus, signature_t, signature_tt };

inline const char* functional_label(CharFunctional f) {
    switch (f) {
    case CharFunctional::signature: return "Sig";
    case CharFunctional::a_hat_genus: return "Ahat";
    case CharFunctional::signature_t: return "Sig(.,T)";
    case CharFunctional::signature_tt: return "Sig(.,TxT)";
    }
    return "?";
}

struct CharNumberResult {
    std::string manifold;
    CharFunctional functional = CharFunctional::signature;
    Rational value;
    std::vector<std::string> annotations;
};

/// <functional form, [M]>: Sig pairs the top of the L-hat form (which equals
/// the classical L-genus top), the twisted signatures pair L-hat·ch(T) and
/// L-hat·ch(T)^2, and the A-hat genus pairs the A-hat top.
inline CharNumberResult char_number(const ManifoldClass& m, CharFunctional f) {
    RingSignature sig = signature_for_dim(m.dim, false);
    const int D = sig.max_degree;
    GradedClass value;
    switch (f) {
    case CharFunctional::signature:
        value = l_hat_form(m.dim, sig);
        break;
    case CharFunctional::a_hat_genus:
        value = a_hat_form(m.dim, sig);
        break;
    case CharFunctional::signature_t:
        value = l_hat_form(m.dim, sig) * ch_tangent(m.dim, sig);
        break;
    case CharFunctional::signature_tt: {
        GradedClass cht = ch_tangent(m.dim, sig);
        value = l_hat_form(m.dim, sig) * cht * cht;
        break;
    }
    }
    CharNumberResult out;
    out.manifold = m.name;
    out.functional = f;
    out.value = pair_with_fundamental_class(value.degree_part(D), m);
    return out;
}

struct ProductFormulaCheck {
    bool pass = false;
    std::string detail;
    Rational direct_t, combined_t;
    Rational direct_tt, combined_tt;
};

/// Product formulas for the twisted signatures:
///   Sig(M1×M2, T)   = Sig(M1) Sig(M2, T) + Sig(M2) Sig(M1, T)
///   Sig(M1×M2, T⊗T) = Sig(M1) Sig(M2, T⊗T) + 2 Sig(M1,T) Sig(M2,T)
///                     + Sig(M2) Sig(M1, T⊗T)
/// checked against the direct pairing on the product.
inline ProductFormulaCheck verify_product_formulas(const ManifoldClass& m1,
                                                   const ManifoldClass& m2) {
    ManifoldClass prod = product(m1, m2);
    auto val = [](const ManifoldClass& m, CharFunctional f) {
        return char_number(m, f).value;
    };
    ProductFormulaCheck out;
    Rational s1 = val(m1, CharFunctional::signature);
    Rational s2 = val(m2, CharFunctional::signature);
    Rational t1 = val(m1, CharFunctional::signature_t);
    Rational t2 = val(m2, CharFunctional::signature_t);
    Rational tt1 = val(m1, CharFunctional::signature_tt);
    Rational tt2 = val(m2, CharFunctional::signature_tt);

    out.direct_t = val(prod, CharFunctional::signature_t);
    out.combined_t = s1 * t2 + s2 * t1;
    out.direct_tt = val(prod, CharFunctional::signature_tt);
    out.combined_tt = s1 * tt2 + Rational(2) * t1 * t2 + s2 * tt1;
    out.pass = out.direct_t == out.combined_t && out.direct_tt == out.combined_tt;
    if (!out.pass)
        out.detail = "product formula mismatch on " + prod.name;
    return out;
}

struct DivisibilityCheck {
    std::string rule;
    BigInt modulus;
    Rational value;
    bool holds = false;
    Rational quotient; ///< value / modulus when it divides
    bool witness = false; ///< odd quotient: the divisibility is tight here
};

struct DivisibilityReport {
    std::string manifold;
    int dim = 0;
    std::vector<DivisibilityCheck> checks;
    bool all_hold = true;
};

/// The divisibility suite for a closed spin manifold from the catalog:
///   dims 8k+4: 256 | Sig(M,T), 2^15 | Sig(M,T) - 16 Sig(M),
///              256·7 | Sig(M,T⊗T) in dim 4, 256 | Sig(M,T⊗T) for k >= 1
///   dims 8k:   2048 | Sig(M,T), 2048·23 | Sig(M,T⊗T) in dim 8,
///              2048 | Sig(M,T⊗T) for k >= 2
inline DivisibilityReport divisibility_report(const ManifoldClass& m) {
    if (!m.spin)
        throw std::invalid_argument("divisibility_report: manifold is not spin");
    DivisibilityReport rep;
    rep.manifold = m.name;
    rep.dim = m.dim;

    Rational s = char_number(m, CharFunctional::signature).value;
    Rational st = char_number(m, CharFunctional::signature_t).value;
    Rational stt = char_number(m, CharFunctional::signature_tt).value;

    auto push = [&rep](const std::string& rule, const BigInt& mod, const Rational& v) {
        DivisibilityCheck c;
        c.rule = rule;
        c.modulus = mod;
        c.value = v;
        c.holds = divides(mod, v);
        if (c.holds) {
            c.quotient = v * Rational(BigInt(1), mod);
            c.witness = c.quotient.is_integer() && c.quotient.num() % 2 != 0;
        }
        rep.all_hold = rep.all_hold && c.holds;
        rep.checks.push_back(c);
    };

    if (m.dim % 8 == 4) {
        push("256 | Sig(M,T)", BigInt(256), st);
        push("2^15 | Sig(M,T) - 16 Sig(M)", BigInt(1) << 15, st - Rational(16) * s);
        if (m.dim == 4)
            push("256*7 | Sig(M,TxT)", BigInt(256 * 7), stt);
        else
            push("256 | Sig(M,TxT)", BigInt(256), stt);
    } else if (m.dim % 8 == 0) {
        push("2048 | Sig(M,T)", BigInt(2048), st);
        if (m.dim == 8)
            push("2048*23 | Sig(M,TxT)", BigInt(2048 * 23), stt);
        else
            push("2048 | Sig(M,TxT)", BigInt(2048), stt);
    }
    return rep;
}

} // namespace qgenus
