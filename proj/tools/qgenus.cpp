// Command-line front end: verification suites, expansions and manifold
// computations with deterministic text and JSON output.
//
//   qgenus verify --all --max-dim 28
//   qgenus verify --theorem 2.1 --dim 12
//   qgenus expand delta2 --order 4
//   qgenus expand P2 --dim 12 --order 4
//   qgenus manifold "K3×Bott8"
//
// Exit codes: 0 all checks pass, 1 a verified identity failed, 2 bad config.

#include "qgenus/manifolds.hpp"
#include "qgenus/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace qgenus;

namespace {

json class_to_json(const GradedClass& g) {
    json out = json::object();
    for (const auto& [mono, coef] : g.terms())
        out[mono.str()] = coef.str();
    return out;
}

json qseries_to_json(const QSeries& s) {
    json out = json::object();
    for (int j = 0; j <= s.trunc(); ++j)
        if (!s.coef(j).is_zero())
            out["q^(" + std::to_string(j) + "/2)"] = s.coef(j).str();
    return out;
}

json class_series_to_json(const ClassSeries& s) {
    json out = json::object();
    for (int j = 0; j <= s.trunc(); ++j)
        if (!s.coef(j).is_zero())
            out["q^(" + std::to_string(j) + "/2)"] = class_to_json(s.coef(j));
    return out;
}

json report_to_json(const VerificationReport& r) {
    json out = json::object();
    out["case"] = r.id;
    out["dim"] = r.dim;
    out["D"] = r.degree_trunc;
    out["J"] = r.q_trunc;
    out["status"] = r.pass ? "pass" : "fail";
    out["lhs"] = class_to_json(r.lhs);
    out["rhs"] = class_to_json(r.rhs);
    out["residual"] = class_to_json(r.residual);
    if (!r.pass) {
        out["fail_q_halfstep"] = r.fail_q_halfstep;
        out["fail_degree"] = r.fail_degree;
        out["detail"] = r.detail;
    }
    return out;
}

int run_cases(const SuiteOptions& opt, int jobs, const std::string& format,
              const std::string& out_path) {
    std::vector<SuiteCase> cases = standard_suite_cases(opt);
    std::sort(cases.begin(), cases.end(),
              [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });
    if (cases.empty()) {
        std::cerr << "no cases selected\n";
        return 2;
    }

    std::vector<VerificationReport> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                results[i] = cases[i].run();
            } catch (const std::exception& e) {
                VerificationReport r;
                r.id = cases[i].id;
                r.dim = cases[i].dim;
                r.pass = false;
                r.detail = std::string("exception: ") + e.what();
                results[i] = r;
            }
        }
    };
    int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    bool all_pass = true;
    for (const auto& r : results)
        all_pass = all_pass && r.pass;

    json doc = json::object();
    doc["command"] = "verify";
    doc["cases"] = json::array();
    for (const auto& r : results)
        doc["cases"].push_back(report_to_json(r));
    doc["status"] = all_pass ? "pass" : "fail";

    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        for (const auto& r : results) // timings stay off the machine stream
            std::cerr << "timing " << r.id << " " << r.seconds << "s\n";
    } else {
        const bool verbose_values = results.size() <= 10;
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id;
            if (r.dim > 0) std::cout << " (dim " << r.dim << ")";
            if (r.degree_trunc > 0) std::cout << " D=" << r.degree_trunc;
            if (r.q_trunc > 0) std::cout << " J=" << r.q_trunc;
            std::cout << "  [" << static_cast<long long>(r.seconds * 1e6) / 1000.0 << "ms]";
            std::cout << "\n";
            if (!r.pass) {
                std::cout << "       " << r.detail << "\n";
                if (r.fail_q_halfstep >= 0)
                    std::cout << "       first mismatch at q-halfstep " << r.fail_q_halfstep
                              << ", degree " << r.fail_degree << "\n";
                if (!r.lhs.is_zero() || !r.rhs.is_zero()) {
                    std::cout << "       lhs = " << r.lhs.str() << "\n";
                    std::cout << "       rhs = " << r.rhs.str() << "\n";
                }
            } else if (verbose_values && (!r.lhs.is_zero() || !r.rhs.is_zero())) {
                std::cout << "       lhs = " << r.lhs.str() << "\n";
                std::cout << "       rhs = " << r.rhs.str() << "\n";
            }
        }
        std::cout << (all_pass ? "all checks passed" : "FAILURES present") << " ("
                  << results.size() << " cases)\n";
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << doc.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_expand(const std::string& target, int dim, int order, int degree, bool twisted,
               const std::string& which, const std::string& format,
               const std::string& out_path) {
    json doc = json::object();
    doc["command"] = "expand";
    doc["target"] = target;
    std::string text;

    auto series_out = [&](const QSeries& s) {
        doc["J"] = s.trunc();
        doc["coefficients"] = qseries_to_json(s);
        text = s.str();
    };

    if (target == "delta1" || target == "eps1" || target == "delta2" || target == "eps2") {
        int J = order < 0 ? 8 : order;
        ModularFormName name = target == "delta1" ? ModularFormName::delta1
                               : target == "eps1" ? ModularFormName::eps1
                               : target == "delta2" ? ModularFormName::delta2
                                                    : ModularFormName::eps2;
        ModularForm f = modular_form(name, J);
        doc["weight"] = f.weight;
        doc["group"] = f.group;
        series_out(f.series);
    } else if (target == "theta-ratio") {
        int D = degree < 0 ? 6 : degree;
        int J = order < 0 ? 6 : order;
        RatioKind kind;
        if (which == "L" || which == "l") kind = RatioKind::l_factor;
        else if (which.empty() || which == "A" || which == "a") kind = RatioKind::a_factor;
        else if (which == "twist-p1") kind = RatioKind::twist_p1;
        else if (which == "twist-p2") kind = RatioKind::twist_p2;
        else {
            std::cerr << "unknown theta-ratio kind: " << which << "\n";
            return 2;
        }
        ThetaRatio ratio = theta_ratio(kind, D, J);
        doc["D"] = D;
        doc["J"] = J;
        json rows = json::object();
        for (int r = 0; r <= ratio.expansion.max_r(); ++r) {
            rows["x^" + std::to_string(2 * r)] = qseries_to_json(ratio.expansion.a[r]);
            text += "x^" + std::to_string(2 * r) + ": " + ratio.expansion.a[r].str() + "\n";
        }
        doc["coefficients"] = rows;
    } else if (target == "theta-element" || target == "P1" || target == "P2") {
        if (dim <= 0 || dim % 4 != 0) {
            std::cerr << "expand " << target << " needs --dim (a positive multiple of 4)\n";
            return 2;
        }
        const bool is84 = dim % 8 == 4;
        const int k = is84 ? (dim - 4) / 8 : dim / 8;
        if (!is84 && k < 1) {
            std::cerr << "dimension too small\n";
            return 2;
        }
        CaseKind kind = is84 ? (twisted ? CaseKind::twisted_8k4 : CaseKind::untwisted_8k4)
                             : (twisted ? CaseKind::twisted_8k : CaseKind::untwisted_8k);
        int J = order < 0 ? default_q_trunc(k) : order;
        ClassSeries s(0);
        if (target == "theta-element") {
            RingSignature sig = signature_for_dim(dim, twisted);
            if (degree > 0) sig.max_degree = degree;
            ThetaElement el = (which == "theta1") ? ThetaElement::theta1 : ThetaElement::theta2;
            s = theta_element_ch(el, twisted, dim, sig, J);
            doc["D"] = sig.max_degree;
        } else {
            if (degree > 0) {
                std::cerr << "--degree does not apply to " << target
                          << "; its truncation is dim/2\n";
                return 2;
            }
            s = (target == "P1") ? build_p1(kind, k, J).via_genus : build_p2(kind, k, J).via_genus;
            doc["D"] = dim / 2;
        }
        doc["dim"] = dim;
        doc["J"] = J;
        doc["coefficients"] = class_series_to_json(s);
        for (int j = 0; j <= s.trunc(); ++j)
            if (!s.coef(j).is_zero())
                text += "q^(" + std::to_string(j) + "/2): " + s.coef(j).str() + "\n";
    } else {
        std::cerr << "unknown expand target: " << target << "\n";
        return 2;
    }

    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_manifold(const std::string& expr, const std::string& format,
                 const std::string& out_path) {
    // names combined with ×, x or *
    std::string e = expr;
    // normalize the multiplication sign (UTF-8 0xC3 0x97)
    for (std::size_t i = 0; i + 1 < e.size();) {
        if (static_cast<unsigned char>(e[i]) == 0xC3 &&
            static_cast<unsigned char>(e[i + 1]) == 0x97) {
            e.replace(i, 2, "*");
        } else {
            ++i;
        }
    }
    std::vector<std::string> names;
    std::string cur;
    for (char c : e) {
        if (c == '*' || c == 'x') {
            if (cur.empty()) {
                std::cerr << "manifold: empty factor in expression\n";
                return 2;
            }
            names.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) names.push_back(cur);
    if (names.empty()) {
        std::cerr << "manifold: empty expression\n";
        return 2;
    }

    ManifoldClass m;
    try {
        m = catalog(names[0]);
        for (std::size_t i = 1; i < names.size(); ++i)
            m = product(m, catalog(names[i]));
    } catch (const std::exception& ex) {
        std::cerr << "manifold: " << ex.what() << "\n";
        return 2;
    }

    json doc = json::object();
    doc["command"] = "manifold";
    doc["manifold"] = m.name;
    doc["dim"] = m.dim;
    doc["spin"] = m.spin;
    json values = json::object();
    std::string text = m.name + " (dim " + std::to_string(m.dim) +
                       (m.spin ? ", spin)" : ")") + "\n";
    for (CharFunctional f : {CharFunctional::signature, CharFunctional::a_hat_genus,
                             CharFunctional::signature_t, CharFunctional::signature_tt}) {
        CharNumberResult r = char_number(m, f);
        values[functional_label(f)] = r.value.str();
        text += std::string("  ") + functional_label(f) + " = " + r.value.str() + "\n";
    }
    doc["values"] = values;
    if (m.spin) {
        DivisibilityReport rep = divisibility_report(m);
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json jc = json::object();
            jc["rule"] = c.rule;
            jc["value"] = c.value.str();
            jc["holds"] = c.holds;
            if (c.holds) jc["quotient"] = c.quotient.str();
            jc["witness"] = c.witness;
            checks.push_back(jc);
            text += "  " + c.rule + ": " + (c.holds ? "holds" : "VIOLATED") +
                    (c.holds ? ", quotient " + c.quotient.str() : "") +
                    (c.witness ? " (odd: tight)" : "") + "\n";
        }
        doc["divisibility"] = checks;
        if (!rep.all_hold) {
            std::cout << (format == "json" ? doc.dump(2) + "\n" : text);
            return 1;
        }
    }
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << doc.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of twisted anomaly cancellation identities"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", out_path;
    app.add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the JSON report to a file");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification cases");
    std::vector<int> dims;
    int max_dim = 28, jobs = 1, order = -1, degree = -1;
    bool all = false;
    std::string theorem;
    std::vector<unsigned> seeds;
    verify->add_option("--dim", dims, "restrict to these dimensions");
    verify->add_option("--max-dim", max_dim, "largest dimension verified (default 28)");
    verify->add_option("--order", order, "q-series truncation override (half-steps)");
    verify->add_option("--degree", degree, "not applicable to verify");
    verify->add_option("--theorem", theorem, "verify one identity: 2.1 .. 2.6");
    verify->add_flag("--all", all, "run the full suite (default)");
    verify->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    verify->add_option("--seeds", seeds, "seeds for the randomized ring-law cases");

    // expand
    auto* expand = app.add_subcommand("expand", "print exact q-expansions");
    std::string target, which;
    int edim = -1, eorder = -1, edegree = -1;
    bool twisted = false;
    expand->add_option("target", target,
                       "delta1|eps1|delta2|eps2|theta-ratio|theta-element|P1|P2")
        ->required();
    expand->add_option("--dim", edim, "dimension (P1/P2/theta-element)");
    expand->add_option("--order", eorder, "q truncation in half-steps");
    expand->add_option("--degree", edegree, "internal degree truncation");
    expand->add_flag("--twisted", twisted, "twisted variant");
    expand->add_option("--which", which, "theta-element: theta1|theta2; theta-ratio: L|A|twist-p1|twist-p2");

    // manifold
    auto* manifold = app.add_subcommand("manifold", "characteristic numbers of catalog products");
    std::string expr;
    manifold->add_option("expr", expr, "catalog names joined with ×, e.g. K3×Bott8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            for (int d : dims)
                if (d <= 0 || d % 4 != 0) {
                    std::cerr << "verify: dimension " << d << " is not a positive multiple of 4\n";
                    return 2;
                }
            if (degree >= 0) {
                std::cerr << "verify: --degree is fixed at dim/2 for identity checks; "
                             "use expand to explore other truncations\n";
                return 2;
            }
            if (!theorem.empty()) {
                TheoremId t;
                if (!theorem_parse(theorem, t)) {
                    std::cerr << "verify: unknown theorem id " << theorem << "\n";
                    return 2;
                }
            }
            SuiteOptions opt;
            opt.dims = dims;
            opt.max_dim = max_dim;
            opt.max_dim_twisted = std::min(20, max_dim);
            opt.q_trunc = order;
            opt.theorem_filter = theorem;
            if (!seeds.empty()) opt.seeds = seeds;
            (void)all;
            return run_cases(opt, jobs, format, out_path);
        }
        if (expand->parsed())
            return cmd_expand(target, edim, eorder, edegree, twisted, which, format, out_path);
        if (manifold->parsed())
            return cmd_manifold(expr, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
