#pragma once

#include "qgenus/manifolds.hpp"
#include "qgenus/theorems.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <vector>

namespace qgenus {

struct SuiteOptions {
    std::vector<int> dims;      ///< restrict dimension-indexed cases; empty = all
    int max_dim = 28;           ///< untwisted cap
    int max_dim_twisted = 20;
    int q_trunc = -1;           ///< J override, -1 = per-case default
    std::string theorem_filter; ///< "2.1".."2.6"; empty = full suite
    std::vector<unsigned> seeds{1, 2, 3};
};

/// One deferred case: id, dimension tag (0 = dimension-free) and the pure
/// computation producing its report. Cases are independent and may run on
/// any schedule; ids are unique and sortable.
struct SuiteCase {
    std::string id;
    int dim = 0;
    std::function<VerificationReport()> run;
};

namespace detail {

inline std::string dim_tag(int dim) {
    return (dim < 10 ? "dim0" : "dim") + std::to_string(dim);
}

inline VerificationReport simple_report(const std::string& id, int dim, bool pass,
                                        const std::string& detail) {
    VerificationReport r;
    r.id = id;
    r.dim = dim;
    r.pass = pass;
    r.detail = detail;
    return r;
}

inline GradedClass random_class(std::mt19937& rng, const RingSignature& sig,
                                bool zero_constant) {
    std::uniform_int_distribution<int> coefd(-9, 9), cntd(2, 6), pick(0, 99), dend(1, 4);
    std::vector<GradedClass> gens;
    for (int i = 1; i <= sig.num_p; ++i)
        if (2 * i <= sig.max_degree) gens.push_back(GradedClass::p(sig, i));
    if (sig.with_u) gens.push_back(GradedClass::u(sig));
    GradedClass g(sig, zero_constant ? Rational(0) : Rational(coefd(rng)));
    const int terms = cntd(rng);
    for (int t = 0; t < terms; ++t) {
        GradedClass mono = gens[pick(rng) % gens.size()];
        if (pick(rng) % 2)
            mono = mono * gens[pick(rng) % gens.size()];
        int c = coefd(rng);
        if (c == 0) c = 1;
        g += mono * Rational(c, dend(rng));
    }
    return g;
}

inline QSeries random_qseries(std::mt19937& rng, int J, bool unit_lead) {
    std::uniform_int_distribution<int> coefd(-9, 9), dend(1, 4);
    QSeries s(J, unit_lead ? Rational(1) : Rational(0));
    while (s.coef(0).is_zero() && !unit_lead)
        s.set_coef(0, Rational(coefd(rng)));
    for (int j = 1; j <= J; ++j)
        s.set_coef(j, Rational(coefd(rng), dend(rng)));
    return s;
}

} // namespace detail

/// Randomized ring-law checks on small operands; deterministic per seed.
inline VerificationReport verify_ring_laws(unsigned seed) {
    detail::Stopwatch timer;
    std::mt19937 rng(seed);
    RingSignature sig{4, 8, true};
    std::string fail;
    for (int round = 0; round < 8 && fail.empty(); ++round) {
        GradedClass a = detail::random_class(rng, sig, false);
        GradedClass b = detail::random_class(rng, sig, false);
        GradedClass c = detail::random_class(rng, sig, false);
        if (!(a * b == b * a)) fail = "commutativity";
        else if (!((a * b) * c == a * (b * c))) fail = "associativity";
        else if (!((a + b) * c == a * c + b * c)) fail = "distributivity";
        else {
            // truncation is a ring homomorphism
            int D2 = 5;
            GradedClass lhs = (a * b).truncated(D2);
            GradedClass rhs = (a.truncated(D2) * b.truncated(D2)).truncated(D2);
            if (!(lhs == rhs)) fail = "truncation homomorphism";
        }
    }
    VerificationReport rep = detail::simple_report(
        "property-ring-laws-seed" + std::to_string(seed), 0, fail.empty(),
        fail.empty() ? "" : "ring law failed: " + fail);
    rep.seconds = timer.seconds();
    return rep;
}

/// exp/log and mul/inv round-trips, exact through the truncations.
inline VerificationReport verify_roundtrips(unsigned seed) {
    detail::Stopwatch timer;
    std::mt19937 rng(seed);
    RingSignature sig{4, 8, true};
    std::string fail;
    for (int round = 0; round < 6 && fail.empty(); ++round) {
        GradedClass f = detail::random_class(rng, sig, true);
        if (!(f.exp().log() == f)) fail = "class log(exp(f)) != f";
        GradedClass g = f + GradedClass(1);
        if (fail.empty() && !(g.log().exp() == g)) fail = "class exp(log(g)) != g";
        if (fail.empty() && !((g * g.inverse()).is_one())) fail = "class g * inv(g) != 1";
        QSeries s = detail::random_qseries(rng, 10, false);
        if (fail.empty() && !((s * s.inverse()).is_one())) fail = "series s * inv(s) != 1";
        QSeries t = detail::random_qseries(rng, 10, true);
        if (fail.empty() && !(t.log().exp() == t)) fail = "series exp(log(t)) != t";
    }
    VerificationReport rep = detail::simple_report(
        "property-roundtrips-seed" + std::to_string(seed), 0, fail.empty(), fail);
    rep.seconds = timer.seconds();
    return rep;
}

/// Newton-table stability: for fixed degree cap the symmetrized results do
/// not depend on the number of root pairs once it covers the cap, and the
/// additive rank term moves exactly with it.
inline VerificationReport verify_bridge_stability() {
    detail::Stopwatch timer;
    const int D = 10;
    RingSignature sig{5, D, false};
    std::string fail;
    EvenSeries<Rational> mult = a_hat_root_factor(D);
    EvenSeries<Rational> add = ch_root_summand(D);
    GradedClass base_m = symmetrize_multiplicative(mult, PowerSumBridge(D, sig));
    GradedClass base_a = symmetrize_additive(add, PowerSumBridge(D, sig));
    for (int m : {D + 1, D + 4, D + 9}) {
        PowerSumBridge bridge(m, sig);
        if (!(symmetrize_multiplicative(mult, bridge) == base_m)) {
            fail = "multiplicative symmetrization depends on m";
            break;
        }
        GradedClass shifted = symmetrize_additive(add, bridge);
        if (!(shifted - base_a == GradedClass(sig, add.a[0] * Rational(m - D)))) {
            fail = "additive rank term off";
            break;
        }
    }
    VerificationReport rep =
        detail::simple_report("property-bridge-stability", 0, fail.empty(), fail);
    rep.seconds = timer.seconds();
    return rep;
}

/// Dual-route agreement, residual vanishing, reconstruction equality and the
/// u = 0 specialization for one decomposition case.
inline std::vector<VerificationReport> modular_case_reports(CaseKind kind, int k, int J = -1) {
    const int dim = case_dim(kind, k);
    if (J < 0) J = default_q_trunc(k);
    const std::string suffix = std::string(case_is_twisted(kind) ? "twisted-" : "") +
                               detail::dim_tag(dim);
    std::vector<VerificationReport> out;

    detail::Stopwatch t_all;
    DualRoute p2 = build_p2(kind, k, J);
    DualRoute p1 = build_p1(kind, k, J);

    {
        VerificationReport r;
        r.id = "routes-p2-" + suffix;
        r.dim = dim;
        r.degree_trunc = dim / 2;
        r.q_trunc = J;
        detail::fill_series_comparison(r, p2.via_genus, p2.via_theta);
        r.seconds = t_all.seconds();
        out.push_back(r);
    }
    {
        detail::Stopwatch t;
        VerificationReport r;
        r.id = "routes-p1-" + suffix;
        r.dim = dim;
        r.degree_trunc = dim / 2;
        r.q_trunc = J;
        detail::fill_series_comparison(r, p1.via_genus, p1.via_theta);
        r.seconds = t.seconds();
        out.push_back(r);
    }

    BasisDecomposition<GradedClass> dec = decompose(p2.via_genus, kind, k);
    {
        detail::Stopwatch t;
        VerificationReport r;
        r.id = "decompose-residual-" + suffix;
        r.dim = dim;
        r.degree_trunc = dim / 2;
        r.q_trunc = J;
        r.pass = dec.residual_zero();
        if (!r.pass) {
            r.fail_q_halfstep = dec.residual.order();
            r.residual = dec.residual.coef(r.fail_q_halfstep);
            r.fail_degree = detail::min_term_degree(r.residual);
            r.detail = "decomposition residual nonzero";
        }
        r.seconds = t.seconds();
        out.push_back(r);
    }
    {
        detail::Stopwatch t;
        VerificationReport r;
        r.id = "reconstruct-p1-" + suffix;
        r.dim = dim;
        r.degree_trunc = dim / 2;
        r.q_trunc = J;
        detail::fill_series_comparison(r, reconstruct_p1(dec, J), p1.via_genus);
        r.seconds = t.seconds();
        out.push_back(r);
    }
    if (case_is_twisted(kind)) {
        detail::Stopwatch t;
        VerificationReport r;
        r.id = "u0-specialization-" + suffix;
        r.dim = dim;
        r.degree_trunc = dim / 2;
        r.q_trunc = J;
        CaseKind plain = case_is_8k4(kind) ? CaseKind::untwisted_8k4 : CaseKind::untwisted_8k;
        ClassSeries plain_p2 = build_p2(plain, k, J).via_genus;
        ClassSeries specialized(J);
        for (int j = 0; j <= J; ++j)
            specialized.set_coef(j, p2.via_genus.coef(j).with_u_zero());
        detail::fill_series_comparison(r, specialized, plain_p2);
        r.seconds = t.seconds();
        out.push_back(r);
    }
    return out;
}

/// Combination coefficients of the solved h_r over the raw q-coefficients of
/// P2 are integers (checked by decomposing unit impulses), and the modular
/// forms have integer tails beyond their printed fractional leads.
inline VerificationReport verify_integrality(CaseKind kind, int k) {
    detail::Stopwatch timer;
    const int J = default_q_trunc(k);
    std::string fail;
    for (int j = 0; j <= k && fail.empty(); ++j) {
        QSeries impulse = QSeries::monomial(J, j, Rational(1));
        BasisDecomposition<Rational> dec = decompose(impulse, kind, k);
        for (int r = 0; r <= k; ++r) {
            if (!dec.coeffs[r].is_integer()) {
                fail = "combination coefficient c[" + std::to_string(r) + "][" +
                       std::to_string(j) + "] = " + dec.coeffs[r].str() + " not integral";
                break;
            }
        }
    }
    VerificationReport rep = detail::simple_report(
        std::string("integrality-") + case_slug(kind) + "-k" + std::to_string(k),
        case_dim(kind, k), fail.empty(), fail);
    rep.q_trunc = J;
    rep.seconds = timer.seconds();
    return rep;
}

/// Byte-exact check of the printed expansions:
///   delta1 = 1/4 + 6q + 6q^2     eps1 = 1/16 - q + 7q^2
///   delta2 = -1/8 - 3q^{1/2} - 3q     eps2 = q^{1/2} + 8q
/// plus integer tails through q^8.
inline VerificationReport verify_printed_modular_forms() {
    detail::Stopwatch timer;
    std::string fail;
    const int J = 16;
    QSeries d1 = modular_form(ModularFormName::delta1, J).series;
    QSeries e1 = modular_form(ModularFormName::eps1, J).series;
    QSeries d2 = modular_form(ModularFormName::delta2, J).series;
    QSeries e2 = modular_form(ModularFormName::eps2, J).series;

    auto expect = [&fail](const QSeries& s, int j, const Rational& v, const char* name) {
        if (fail.empty() && !(s.coef(j) == v))
            fail = std::string(name) + " q-index " + std::to_string(j) + " is " +
                   s.coef(j).str() + ", printed " + v.str();
    };
    expect(d1, 0, Rational(1, 4), "delta1");
    expect(d1, 1, Rational(0), "delta1");
    expect(d1, 2, Rational(6), "delta1");
    expect(d1, 3, Rational(0), "delta1");
    expect(d1, 4, Rational(6), "delta1");
    expect(e1, 0, Rational(1, 16), "eps1");
    expect(e1, 2, Rational(-1), "eps1");
    expect(e1, 4, Rational(7), "eps1");
    expect(d2, 0, Rational(-1, 8), "delta2");
    expect(d2, 1, Rational(-3), "delta2");
    expect(d2, 2, Rational(-3), "delta2");
    expect(e2, 0, Rational(0), "eps2");
    expect(e2, 1, Rational(1), "eps2");
    expect(e2, 2, Rational(8), "eps2");

    if (fail.empty()) {
        if (d1.truncated(4).str() != "1/4 + 6*q + 6*q^2") fail = "delta1 text form";
        else if (e1.truncated(4).str() != "1/16 - 1*q + 7*q^2") fail = "eps1 text form";
        else if (d2.truncated(2).str() != "-1/8 - 3*q^(1/2) - 3*q") fail = "delta2 text form";
        else if (e2.truncated(2).str() != "1*q^(1/2) + 8*q") fail = "eps2 text form";
    }
    // integer tails beyond the printed fractional leads
    for (int j = 1; j <= J && fail.empty(); ++j) {
        if (!d1.coef(j).is_integer() || !e1.coef(j).is_integer() ||
            !d2.coef(j).is_integer() || !e2.coef(j).is_integer())
            fail = "non-integer Fourier coefficient at q-index " + std::to_string(j);
    }
    VerificationReport rep = detail::simple_report("modular-printed", 0, fail.empty(), fail);
    rep.q_trunc = J;
    rep.seconds = timer.seconds();
    return rep;
}

inline VerificationReport verify_jacobi(int J = 24) {
    detail::Stopwatch timer;
    JacobiCheck jc = jacobi_identity_check(J);
    VerificationReport rep = detail::simple_report(
        "jacobi-identity", 0, jc.pass,
        jc.pass ? "" : "first mismatch at half-step " + std::to_string(jc.first_mismatch));
    rep.q_trunc = J;
    rep.seconds = timer.seconds();
    return rep;
}

/// The paper-fixed manifold integers and the signature normalization
/// cross-check (L-hat top pairs like the classical L-genus top).
inline VerificationReport verify_manifold_integers() {
    detail::Stopwatch timer;
    std::string fail;
    auto expect = [&fail](const ManifoldClass& m, CharFunctional f, long long v) {
        if (!fail.empty()) return;
        Rational got = char_number(m, f).value;
        if (!(got == Rational(v)))
            fail = m.name + " " + functional_label(f) + " = " + got.str() + ", expected " +
                   std::to_string(v);
    };
    ManifoldClass k3 = catalog("K3"), hp2 = catalog("HP2"), b8 = catalog("Bott8");
    expect(hp2, CharFunctional::signature, 1);
    expect(hp2, CharFunctional::a_hat_genus, 0);
    expect(k3, CharFunctional::signature, -16);
    expect(k3, CharFunctional::signature_t, -256);
    expect(k3, CharFunctional::signature_tt, -1792);
    expect(b8, CharFunctional::a_hat_genus, 1);
    expect(b8, CharFunctional::signature, 0);
    expect(b8, CharFunctional::signature_t, 2048);
    expect(b8, CharFunctional::signature_tt, 47104);
    expect(product(k3, b8), CharFunctional::signature_tt, -1802240);
    ManifoldClass hp = hp2;
    for (int n = 1; n <= 3; ++n) {
        expect(hp, CharFunctional::signature_t, 0);
        expect(hp, CharFunctional::signature_tt, 0);
        expect(hp, CharFunctional::signature, 1);
        if (n < 3) hp = product(hp, hp2);
    }

    // Sig through the L-hat form equals the classical L-genus pairing.
    if (fail.empty()) {
        for (const ManifoldClass& m : {k3, hp2, b8, catalog("HP3")}) {
            RingSignature sig = signature_for_dim(m.dim, false);
            GradedClass classical =
                symmetrize_multiplicative(classical_l_root_factor(sig.max_degree),
                                          PowerSumBridge(m.dim / 2, sig))
                    .degree_part(sig.max_degree);
            Rational a = pair_with_fundamental_class(classical, m);
            Rational b = char_number(m, CharFunctional::signature).value;
            if (!(a == b)) {
                fail = "signature normalization differs on " + m.name;
                break;
            }
        }
    }
    VerificationReport rep = detail::simple_report("manifold-integers", 0, fail.empty(), fail);
    rep.seconds = timer.seconds();
    return rep;
}

/// All spin catalog products up to max_dim (catalog: K3, HP2, HP3, Bott8).
inline std::vector<ManifoldClass> catalog_products(int max_dim) {
    std::vector<ManifoldClass> base = {catalog("K3"), catalog("HP2"), catalog("Bott8"),
                                       catalog("HP3")};
    std::vector<ManifoldClass> out;
    // multisets over the four generators, depth-first with non-decreasing index
    auto rec = [&](auto&& self, std::size_t first, const ManifoldClass& acc, bool have) -> void {
        for (std::size_t i = first; i < base.size(); ++i) {
            int dim = (have ? acc.dim : 0) + base[i].dim;
            if (dim > max_dim) continue;
            ManifoldClass next = have ? product(acc, base[i]) : base[i];
            out.push_back(next);
            self(self, i, next, true);
        }
    };
    rec(rec, 0, ManifoldClass{}, false);
    return out;
}

inline VerificationReport report_divisibility(const ManifoldClass& m) {
    detail::Stopwatch timer;
    DivisibilityReport div = divisibility_report(m);
    std::string det;
    for (const auto& c : div.checks)
        if (!c.holds)
            det += c.rule + " fails with value " + c.value.str() + "; ";
    VerificationReport rep = detail::simple_report(
        "divisibility-" + detail::dim_tag(m.dim) + "-" + m.name, m.dim, div.all_hold, det);
    rep.seconds = timer.seconds();
    return rep;
}

/// Best-possible witnesses: quotients of the tight catalog families match
/// the fixed values (-1 for K3-by-HP2 towers over 256, +1 for Bott8 towers
/// over 2048, and the dim-4/8 tensor-square quotients).
inline VerificationReport verify_witnesses(int max_dim = 28) {
    detail::Stopwatch timer;
    std::string fail;
    auto quotient = [](const ManifoldClass& m, CharFunctional f, long long mod) {
        return char_number(m, f).value * Rational(1, mod);
    };
    ManifoldClass k3 = catalog("K3"), hp2 = catalog("HP2"), b8 = catalog("Bott8");
    // K3 × (HP2)^k, dims 8k+4
    ManifoldClass m = k3;
    while (fail.empty()) {
        if (!(quotient(m, CharFunctional::signature_t, 256) == Rational(-1)))
            fail = m.name + ": Sig(.,T)/256 != -1";
        if (m.dim + 8 > max_dim) break;
        m = product(m, hp2);
    }
    // Bott8 × (HP2)^{k-1}, dims 8k
    m = b8;
    while (fail.empty()) {
        if (!(quotient(m, CharFunctional::signature_t, 2048) == Rational(1)))
            fail = m.name + ": Sig(.,T)/2048 != +1";
        if (m.dim + 8 > max_dim) break;
        m = product(m, hp2);
    }
    if (fail.empty() && !(quotient(k3, CharFunctional::signature_tt, 256 * 7) == Rational(-1)))
        fail = "K3: Sig(.,TxT)/(256*7) != -1";
    if (fail.empty() && !(quotient(b8, CharFunctional::signature_tt, 2048 * 23) == Rational(1)))
        fail = "Bott8: Sig(.,TxT)/(2048*23) != +1";
    // the two 8k+4 tensor-square families with coprime reduced quotients
    if (fail.empty()) {
        Rational qa = quotient(product(k3, b8), CharFunctional::signature_tt, 256);   // -55*128
        Rational qb = quotient(product(k3, hp2), CharFunctional::signature_tt, 256); // -7
        if (!(qa == Rational(-7040)) || !(qb == Rational(-7)))
            fail = "8k+4 tensor-square witness quotients off: " + qa.str() + ", " + qb.str();
    }
    VerificationReport rep = detail::simple_report("divisibility-witnesses", 0, fail.empty(), fail);
    rep.seconds = timer.seconds();
    return rep;
}

inline VerificationReport report_product_formulas(const ManifoldClass& a, const ManifoldClass& b) {
    detail::Stopwatch timer;
    ProductFormulaCheck chk = verify_product_formulas(a, b);
    VerificationReport rep = detail::simple_report(
        "product-formula-" + a.name + "-" + b.name, a.dim + b.dim, chk.pass, chk.detail);
    rep.seconds = timer.seconds();
    return rep;
}

/// Assemble the full deferred case list for the given options. Ids are
/// unique; the executor may run them in any order or in parallel.
inline std::vector<SuiteCase> standard_suite_cases(const SuiteOptions& opt) {
    std::vector<SuiteCase> cases;
    auto add = [&cases](const std::string& id, int dim, std::function<VerificationReport()> fn) {
        cases.push_back(SuiteCase{id, dim, std::move(fn)});
    };
    auto dim_selected = [&opt](int dim) {
        if (opt.dims.empty()) return true;
        for (int d : opt.dims)
            if (d == dim) return true;
        return false;
    };
    const int J = opt.q_trunc;

    // theorem cases
    for (TheoremId t : {TheoremId::t2_1, TheoremId::t2_2, TheoremId::t2_3, TheoremId::t2_4,
                        TheoremId::t2_5, TheoremId::t2_6}) {
        if (!opt.theorem_filter.empty() && opt.theorem_filter != theorem_label(t))
            continue;
        const CaseKind kind = theorem_case(t);
        const int cap = case_is_twisted(kind) ? opt.max_dim_twisted : opt.max_dim;
        for (int dim : theorem_dims(t, cap)) {
            if (!dim_selected(dim)) continue;
            int k = theorem_k_for_dim(t, dim);
            add("theorem-" + std::string(theorem_label(t)) + "-" + detail::dim_tag(dim), dim,
                [t, k, J] { return verify_theorem(t, k, J); });
        }
    }
    if (!opt.theorem_filter.empty())
        return cases;

    // corollaries (three-way agreement)
    for (const CorollarySpec& c : corollary_table()) {
        if (!dim_selected(c.dim) || c.dim > opt.max_dim) continue;
        std::string id = c.id;
        std::string padded = id.size() < 4 ? "2.0" + id.substr(2) : id;
        add("corollary-" + padded + "-" + detail::dim_tag(c.dim), c.dim,
            [id, J] { return verify_corollary(id, J); });
    }

    // coefficient formulas and integrality
    for (CaseKind kind : {CaseKind::untwisted_8k4, CaseKind::untwisted_8k,
                          CaseKind::twisted_8k4, CaseKind::twisted_8k}) {
        const int cap = case_is_twisted(kind) ? opt.max_dim_twisted : opt.max_dim;
        for (int k = case_is_8k4(kind) ? 0 : 1;; ++k) {
            int dim = case_dim(kind, k);
            if (dim > cap) break;
            if (!dim_selected(dim)) continue;
            add("coefficients-" + std::string(case_slug(kind)) + "-k" + std::to_string(k), dim,
                [kind, k, J] { return verify_coefficient_formulas(kind, k, J); });
            add("integrality-" + std::string(case_slug(kind)) + "-k" + std::to_string(k), dim,
                [kind, k] { return verify_integrality(kind, k); });
        }
    }

    // modular machinery per case: routes, residual, reconstruction, u=0
    for (CaseKind kind : {CaseKind::untwisted_8k4, CaseKind::untwisted_8k,
                          CaseKind::twisted_8k4, CaseKind::twisted_8k}) {
        const int cap = case_is_twisted(kind) ? opt.max_dim_twisted : opt.max_dim;
        for (int k = case_is_8k4(kind) ? 0 : 1;; ++k) {
            int dim = case_dim(kind, k);
            if (dim > cap) break;
            if (!dim_selected(dim)) continue;
            const std::string suffix =
                std::string(case_is_twisted(kind) ? "twisted-" : "") + detail::dim_tag(dim);
            std::vector<std::string> ids = {"routes-p2-" + suffix, "routes-p1-" + suffix,
                                            "decompose-residual-" + suffix,
                                            "reconstruct-p1-" + suffix};
            if (case_is_twisted(kind))
                ids.push_back("u0-specialization-" + suffix);
            for (std::size_t i = 0; i < ids.size(); ++i) {
                add(ids[i], dim, [kind, k, J, i] {
                    return modular_case_reports(kind, k, J).at(i);
                });
            }
        }
    }

    // basis expansions, 0 <= r <= k <= 3, both families
    for (int family = 0; family < 2; ++family) {
        for (int k = 0; k <= 3; ++k) {
            int dim = family == 0 ? 8 * k + 4 : 8 * k;
            if (dim == 0 || dim > opt.max_dim || !dim_selected(dim)) continue;
            for (int r = 0; r <= k; ++r) {
                bool is84 = family == 0;
                add(std::string("basis-") + (is84 ? "8k4" : "8k") + "-k" + std::to_string(k) +
                        "-r" + std::to_string(r),
                    dim, [is84, k, r] {
                        detail::Stopwatch t;
                        BasisExpansionCheck c = basis_expansion_check(is84, k, r);
                        VerificationReport rep = detail::simple_report(
                            std::string("basis-") + (is84 ? "8k4" : "8k") + "-k" +
                                std::to_string(k) + "-r" + std::to_string(r),
                            is84 ? 8 * k + 4 : 8 * k, c.pass,
                            c.pass ? "" : "printed q^0..q^2 coefficients differ: " +
                                              c.computed.truncated(4).str());
                        rep.seconds = t.seconds();
                        return rep;
                    });
            }
        }
    }

    // dimension-free cases
    if (opt.dims.empty()) {
        add("jacobi-identity", 0, [] { return verify_jacobi(24); });
        add("modular-printed", 0, [] { return verify_printed_modular_forms(); });
        add("twist-bundle-identity", 0, [] { return verify_twist_bundle_identity(14); });
        add("manifold-integers", 0, [] { return verify_manifold_integers(); });
        add("divisibility-witnesses", 0, [] { return verify_witnesses(28); });
        add("property-bridge-stability", 0, [] { return verify_bridge_stability(); });
        for (unsigned seed : opt.seeds) {
            add("property-ring-laws-seed" + std::to_string(seed), 0,
                [seed] { return verify_ring_laws(seed); });
            add("property-roundtrips-seed" + std::to_string(seed), 0,
                [seed] { return verify_roundtrips(seed); });
        }
    }

    // manifold suite: product formulas on catalog pairs, divisibility on all
    // spin catalog products within the cap
    {
        std::vector<ManifoldClass> base = {catalog("K3"), catalog("HP2"), catalog("Bott8"),
                                           catalog("HP3")};
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i; j < base.size(); ++j) {
                int dim = base[i].dim + base[j].dim;
                if (dim > opt.max_dim || !dim_selected(dim)) continue;
                ManifoldClass a = base[i], b = base[j];
                add("product-formula-" + a.name + "-" + b.name, dim,
                    [a, b] { return report_product_formulas(a, b); });
            }
        for (const ManifoldClass& m : catalog_products(opt.max_dim)) {
            if (!dim_selected(m.dim)) continue;
            ManifoldClass copy = m;
            add("divisibility-" + detail::dim_tag(m.dim) + "-" + m.name, m.dim,
                [copy] { return report_divisibility(copy); });
        }
    }

    return cases;
}

} // namespace qgenus
