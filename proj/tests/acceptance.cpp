// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Everything is exact rational arithmetic; "pass" always
// means an identically zero residual, never a tolerance.

#include "qgenus/suite.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace qgenus;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what;
    if (!pass && !detail.empty())
        std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass)
        ++failures;
}

bool run_reports(const std::vector<VerificationReport>& reports, std::string& detail) {
    bool all = true;
    for (const auto& r : reports) {
        if (!r.pass) {
            all = false;
            detail += r.id + " (" + r.detail + ") ";
        }
    }
    return all;
}

} // namespace

int main() {
    detail::Stopwatch total;

    // 1. printed modular form expansions, byte for byte
    {
        VerificationReport r = verify_printed_modular_forms();
        criterion(1, "modular form expansions match the printed values", r.pass, r.detail);
    }

    // 2. Jacobi identity as a normalized q-series identity through q^12
    {
        VerificationReport r = verify_jacobi(24);
        criterion(2, "Jacobi triple-product identity through q^12", r.pass, r.detail);
    }

    // 3. the six cancellation identities: exact zero residuals
    {
        std::string detail;
        std::vector<VerificationReport> reports;
        for (TheoremId t : {TheoremId::t2_1, TheoremId::t2_2, TheoremId::t2_3, TheoremId::t2_4})
            for (int dim : theorem_dims(t, 28))
                reports.push_back(verify_theorem(t, theorem_k_for_dim(t, dim)));
        for (TheoremId t : {TheoremId::t2_5, TheoremId::t2_6})
            for (int dim : theorem_dims(t, 20))
                reports.push_back(verify_theorem(t, theorem_k_for_dim(t, dim)));
        bool pass = run_reports(reports, detail);
        criterion(3, "identities 2.1-2.4 exact for dims 4..28, 2.5-2.6 for dims 4..20 "
                     "with u carried to full truncation", pass, detail);
    }

    // 4. the twelve corollaries, three-way agreement and pinned coefficients
    {
        std::string detail;
        std::vector<VerificationReport> reports;
        for (const CorollarySpec& c : corollary_table())
            reports.push_back(verify_corollary(c.id));
        bool pass = run_reports(reports, detail);

        RingSignature s12 = signature_for_dim(12, false);
        pass = pass && verify_corollary("2.2").rhs ==
                           -(a_hat_form(12, s12).degree_part(6) * Rational::pow2(14));
        RingSignature s8 = signature_for_dim(8, false);
        pass = pass && verify_corollary("2.8").rhs ==
                           a_hat_form(8, s8).degree_part(4) * Rational(2048);
        pass = pass && (l_hat_form(8, s8) * ch_tensor_square(8, s8)).degree_part(4) ==
                           a_hat_form(8, s8).degree_part(4) * Rational(23 * 2048);
        RingSignature s20 = signature_for_dim(20, false);
        pass = pass && verify_corollary("2.6").rhs ==
                           -(a_hat_form(20, s20).degree_part(10) * Rational::pow2(26));
        criterion(4, "twelve corollaries agree three ways; coefficients -2^14, 2048, "
                     "23*2048, -2^26 reproduced", pass, detail);
    }

    // 5. solver coefficients equal the printed closed forms
    {
        std::string detail;
        std::vector<VerificationReport> reports;
        for (int k = 0; k <= 3; ++k)
            reports.push_back(verify_coefficient_formulas(CaseKind::untwisted_8k4, k));
        for (int k = 1; k <= 3; ++k)
            reports.push_back(verify_coefficient_formulas(CaseKind::untwisted_8k, k));
        for (int k = 0; k <= 2; ++k)
            reports.push_back(verify_coefficient_formulas(CaseKind::twisted_8k4, k));
        for (int k = 1; k <= 2; ++k)
            reports.push_back(verify_coefficient_formulas(CaseKind::twisted_8k, k));
        bool pass = run_reports(reports, detail);
        criterion(5, "h0/h1, z0/z1 and their twisted variants match the solver exactly",
                  pass, detail);
    }

    // 6. basis expansions at q^0, q^1, q^2 for all 0 <= r <= k <= 3
    {
        std::string detail;
        bool pass = true;
        for (int k = 0; k <= 3; ++k)
            for (int r = 0; r <= k; ++r) {
                if (!basis_expansion_check(true, k, r).pass) {
                    pass = false;
                    detail += "8k+4 family k=" + std::to_string(k) + " r=" + std::to_string(r) + " ";
                }
                if (!basis_expansion_check(false, k, r).pass) {
                    pass = false;
                    detail += "8k family k=" + std::to_string(k) + " r=" + std::to_string(r) + " ";
                }
            }
        criterion(6, "basis expansions match printed q^0..q^2 coefficients for r <= k <= 3",
                  pass, detail);
    }

    // 7. fixed manifold integers
    {
        VerificationReport r = verify_manifold_integers();
        criterion(7, "catalog characteristic numbers (HP2, K3, Bott8, products)", r.pass,
                  r.detail);
    }

    // 8. divisibility suite with best-possible witnesses
    {
        std::string detail;
        std::vector<VerificationReport> reports;
        for (const ManifoldClass& m : catalog_products(28))
            reports.push_back(report_divisibility(m));
        reports.push_back(verify_witnesses(28));
        bool pass = run_reports(reports, detail);
        criterion(8, "divisibility suite on all spin catalog products up to dim 28 "
                     "with exact witness quotients", pass, detail);
    }

    // 9. property suites: dual routes, reconstruction, u = 0, round trips,
    // bridge stability
    {
        std::string detail;
        std::vector<VerificationReport> reports;
        for (int k = 0; k <= 3; ++k)
            for (const auto& r : modular_case_reports(CaseKind::untwisted_8k4, k))
                reports.push_back(r);
        for (int k = 1; k <= 3; ++k)
            for (const auto& r : modular_case_reports(CaseKind::untwisted_8k, k))
                reports.push_back(r);
        for (int k = 0; k <= 2; ++k)
            for (const auto& r : modular_case_reports(CaseKind::twisted_8k4, k))
                reports.push_back(r);
        for (int k = 1; k <= 2; ++k)
            for (const auto& r : modular_case_reports(CaseKind::twisted_8k, k))
                reports.push_back(r);
        for (unsigned seed : {1u, 2u, 3u}) {
            reports.push_back(verify_ring_laws(seed));
            reports.push_back(verify_roundtrips(seed));
        }
        reports.push_back(verify_bridge_stability());
        for (CaseKind kind : {CaseKind::untwisted_8k4, CaseKind::untwisted_8k})
            for (int k = case_is_8k4(kind) ? 0 : 1; k <= 3; ++k)
                reports.push_back(verify_integrality(kind, k));
        bool pass = run_reports(reports, detail);
        criterion(9, "dual-route agreement, reconstruction, u=0 specialization, "
                     "round trips, bridge stability — all exact", pass, detail);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: FAILURES present")
              << " (" << total.seconds() << "s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
