#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <string>
#include <vector>

#include "cycgm/flags.hpp"
#include "cycgm/parser.hpp"
#include "cycgm/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cycgm;

namespace {

// 0 = success, 1 = verification failure, 2 = usage error, 3 = computation error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& src) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : src) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<BranchValue> parse_branch(const std::string& src) {
    static const std::regex rational_re(R"([+-]?\d+(/\d+)?)");
    static const std::regex name_re(R"([A-Za-z_]\w*)");
    std::vector<BranchValue> out;
    for (const auto& tok : split_list(src)) {
        if (std::regex_match(tok, rational_re))
            out.emplace_back(rational_from_string(tok));
        else if (std::regex_match(tok, name_re))
            out.emplace_back(tok);
        else
            throw UsageError("bad branch value '" + tok + "' (rational or identifier expected)");
    }
    return out;
}

std::vector<BranchValue> synthetic_branch(int n) {
    std::vector<BranchValue> out;
    for (int i = 1; i <= n; ++i) out.emplace_back("t" + std::to_string(i));
    return out;
}

json branch_json(const CoverFamily& cover) {
    json arr = json::array();
    for (const auto& v : cover.branch) arr.push_back(branch_value_str(v));
    return arr;
}

json matrix_json(const RfMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_matrix(const RfMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << ", ";
            std::cout << m.at(i, j).str();
        }
        std::cout << "]\n";
    }
}

std::string form_str(const Eigenform& f) {
    const std::string u = f.numerator.str();
    const std::string tail = "dx/y^" + std::to_string(f.l);
    if (u == "1") return tail;
    const bool needs_parens = u.find(' ') != std::string::npos;
    return (needs_parens ? "(" + u + ")" : u) + "*" + tail;
}

std::size_t direction_index(const CoverFamily& cover, const std::string& name) {
    const auto k = cover.branch_index_of(name);
    if (!k) throw UsageError("'" + name + "' is not a symbolic branch parameter of this family");
    return *k;
}

void emit(const json& doc, bool as_json) {
    if (as_json) std::cout << doc.dump(2) << "\n";
}

// ---- subcommand bodies -------------------------------------------------

int run_genus(int d, int n, bool as_json) {
    const long g = genus(d, n);
    if (as_json)
        emit(json{{"d", d}, {"n", n}, {"genus", g}}, true);
    else
        std::cout << g << "\n";
    return 0;
}

int run_basis(const CoverFamily& cover, int j, bool as_json) {
    const auto basis = holomorphic_basis(cover, j);
    const int l = ((-j) % cover.d + cover.d) % cover.d;
    if (as_json) {
        json b = json::array();
        for (const auto& f : basis) b.push_back(f.numerator.str());
        emit(json{{"d", cover.d},
                  {"n", cover.n},
                  {"branch", branch_json(cover)},
                  {"j", j},
                  {"l", l},
                  {"basis", b}},
             true);
    } else {
        std::cout << "j = " << j << ", l = " << l << ", dimension " << basis.size() << "\n";
        for (const auto& f : basis) std::cout << "  " << form_str(f) << "\n";
    }
    return 0;
}

int run_divisor(const CoverFamily& cover, const std::string& section, int l, bool as_json) {
    const Eigenform form = make_eigenform(cover, l, parse_poly_in_x(section, cover.table));
    const Divisor div = divisor(form);
    std::vector<long> sig;
    bool holomorphic = true;
    for (const auto& p : div.points)
        if (p.order < 0) holomorphic = false;
    if (holomorphic) sig = stratum_signature(form);
    if (as_json) {
        json points = json::array();
        for (const auto& p : div.points) {
            json e{{"point", p.str().substr(0, p.str().find(':'))}, {"order", p.order}};
            points.push_back(std::move(e));
        }
        json doc{{"d", cover.d},
                 {"n", cover.n},
                 {"branch", branch_json(cover)},
                 {"section", form.numerator.str()},
                 {"l", l},
                 {"divisor", points},
                 {"degree", div.degree}};
        doc["signature"] = holomorphic ? json(sig) : json(nullptr);
        emit(doc, true);
    } else {
        std::cout << form_str(form) << "\n";
        for (const auto& p : div.points) std::cout << "  " << p.str() << "\n";
        std::cout << "degree: " << div.degree << " = 2g-2\n";
        if (holomorphic) {
            std::cout << "stratum: H(";
            for (std::size_t i = 0; i < sig.size(); ++i) std::cout << (i ? "," : "") << sig[i];
            std::cout << ")\n";
        } else {
            std::cout << "form has poles; no stratum\n";
        }
    }
    return 0;
}

int run_connection(const CoverFamily& cover, const std::string& wrt, bool as_json) {
    const ConnectionMatrix cm = connection_matrix(cover, direction_index(cover, wrt));
    if (as_json) {
        emit(json{{"d", cover.d},
                  {"n", cover.n},
                  {"branch", branch_json(cover)},
                  {"wrt", wrt},
                  {"matrix", matrix_json(cm.entries)}},
             true);
    } else {
        std::cout << "connection matrix w.r.t. " << wrt << " in the basis x^i*dx/y^" << cover.d - 1
                  << ":\n";
        print_matrix(cm.entries);
    }
    return 0;
}

int run_curvature(const CoverFamily& cover, const std::vector<std::string>& dirs, bool as_json) {
    if (dirs.size() != 2) throw UsageError("--dirs expects exactly two parameter names");
    const RfMatrix result =
        curvature(cover, direction_index(cover, dirs[0]), direction_index(cover, dirs[1]));
    if (as_json) {
        emit(json{{"d", cover.d},
                  {"n", cover.n},
                  {"branch", branch_json(cover)},
                  {"dirs", dirs},
                  {"matrix", matrix_json(result)},
                  {"zero", result.is_zero()}},
             true);
    } else {
        print_matrix(result);
        std::cout << "flat: " << (result.is_zero() ? "yes" : "NO") << "\n";
    }
    return 0;
}

json report_json(const CoverFamily& cover, const FlagReport& report, const Certificate& cert) {
    json vectors = json::array();
    for (const auto& v : report.vectors) {
        json col = json::array();
        for (const auto& e : v) col.push_back(e.str());
        vectors.push_back(std::move(col));
    }
    json doc{{"d", cover.d},
             {"n", cover.n},
             {"branch", branch_json(cover)},
             {"section", report.section.numerator.str()},
             {"directions", report.directions},
             {"vectors", vectors},
             {"ranks", report.ranks}};
    doc["det"] = report.determinant ? json(report.determinant->str()) : json(nullptr);
    doc["verdict"] = report.full_rank ? "full-rank" : "rank-deficient";
    doc["certified"] = cert.certified;
    doc["witness"] = cert.witness ? json(cert.witness->str()) : json(nullptr);
    doc["reason"] = cert.reason;
    return doc;
}

void print_report(const FlagReport& report, const Certificate& cert) {
    std::cout << "section: " << form_str(report.section) << "\n";
    std::cout << "ranks:";
    for (int r : report.ranks) std::cout << " " << r;
    std::cout << "\nverdict: " << (report.full_rank ? "full-rank" : "rank-deficient") << "\n";
    if (report.determinant) std::cout << "det: " << report.determinant->str() << "\n";
    std::cout << "non-linearity certificate: " << (cert.certified ? "CERTIFIED" : "not certified")
              << " (" << cert.reason << ")\n";
    if (cert.witness) {
        std::cout << "witness: " << cert.witness->str() << "\n";
        if (!cert.witness->den().is_constant())
            std::cout << "generic away from zeros of: " << cert.witness->den().str() << "\n";
    }
}

int run_flag_rank(const CoverFamily& cover, const std::string& section, const std::string& dir,
                  int order, bool as_json) {
    const GaussManin gm(cover);
    const Eigenform form =
        make_eigenform(cover, cover.d - 1, parse_poly_in_x(section, cover.table));
    direction_index(cover, dir);
    const FlagReport report = derived_flag(gm, form, dir, order);
    const Certificate cert = nonlinearity_certificate(report);
    if (as_json) {
        json doc = report_json(cover, report, cert);
        doc["order"] = order;
        emit(doc, true);
    } else {
        print_report(report, cert);
    }
    return 0;
}

int run_span(const CoverFamily& cover, const std::string& section,
             const std::vector<std::string>& dirs, bool scaled, bool as_json) {
    const GaussManin gm(cover);
    const Eigenform form =
        make_eigenform(cover, cover.d - 1, parse_poly_in_x(section, cover.table));
    const FlagReport report = multi_direction_span(gm, form, dirs, scaled);
    const Certificate cert = nonlinearity_certificate(report);
    if (as_json) {
        json doc = report_json(cover, report, cert);
        doc["scaled"] = scaled;
        emit(doc, true);
    } else {
        print_report(report, cert);
    }
    return 0;
}

int run_monodromy(const CoverFamily& cover, int j, bool as_json) {
    const MonodromyReport report = finite_monodromy_check(cover, j);
    if (as_json) {
        json orbit = json::array();
        for (const auto& e : report.orbit)
            orbit.push_back(json{{"j", e.j}, {"h10", e.h10}, {"h01", e.h01}, {"pure", e.pure}});
        emit(json{{"d", cover.d},
                  {"n", cover.n},
                  {"j", j},
                  {"orbit", orbit},
                  {"finite", report.finite}},
             true);
    } else {
        for (const auto& e : report.orbit) {
            std::cout << "  j=" << e.j << ": h10=" << e.h10 << " h01=" << e.h01
                      << (e.pure ? " pure" : " NOT pure");
            if (h10_info(cover, e.j).outside_proved_regime) std::cout << " (extrapolated count)";
            std::cout << "\n";
        }
        std::cout << (report.finite ? "finite monodromy: certified"
                                    : "finite monodromy: criterion inconclusive")
                  << "\n";
    }
    return 0;
}

int run_verify(const std::optional<std::string>& only, const std::optional<std::string>& fault,
               bool as_json) {
    if (only) {
        const auto& names = check_names();
        if (std::find(names.begin(), names.end(), *only) == names.end())
            throw UsageError("unknown check '" + *only + "'");
    }
    if (fault) {
        const auto& names = fault_names();
        if (std::find(names.begin(), names.end(), *fault) == names.end())
            throw UsageError("unknown fault '" + *fault + "'");
    }
    VerifyOptions opts;
    opts.only = only;
    opts.fault = fault;
    const auto results = verify_paper(opts);
    int passed = 0, failed = 0, errors = 0;
    for (const auto& r : results) {
        switch (r.status) {
            case CheckResult::Status::Pass: ++passed; break;
            case CheckResult::Status::Fail: ++failed; break;
            case CheckResult::Status::Error: ++errors; break;
        }
    }
    if (as_json) {
        json checks = json::array();
        for (const auto& r : results) {
            json e{{"name", r.name}};
            switch (r.status) {
                case CheckResult::Status::Pass: e["status"] = "pass"; break;
                case CheckResult::Status::Fail: e["status"] = "fail"; break;
                case CheckResult::Status::Error: e["status"] = "error"; break;
            }
            if (r.status == CheckResult::Status::Fail) {
                e["expected"] = r.expected;
                e["actual"] = r.actual;
            }
            if (r.status == CheckResult::Status::Error) e["message"] = r.message;
            checks.push_back(std::move(e));
        }
        emit(json{{"checks", checks}, {"passed", passed}, {"failed", failed}, {"errors", errors}},
             true);
    } else {
        for (const auto& r : results) {
            switch (r.status) {
                case CheckResult::Status::Pass: std::cout << "[PASS] " << r.name << "\n"; break;
                case CheckResult::Status::Fail:
                    std::cout << "[FAIL] " << r.name << "\n  expected: " << r.expected
                              << "\n  actual:   " << r.actual << "\n";
                    break;
                case CheckResult::Status::Error:
                    std::cout << "[ERROR] " << r.name << ": " << r.message << "\n";
                    break;
            }
        }
        std::cout << passed << "/" << results.size() << " checks passed\n";
    }
    return (failed + errors) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gauss-Manin toolkit for cyclic covers y^d = (x-t_1)...(x-t_n)"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::function<int()> action;

    // genus
    {
        auto* cmd = app.add_subcommand("genus", "Riemann-Hurwitz genus of the family");
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto js = std::make_shared<bool>(false);
        cmd->add_option("--d", *d, "covering degree")->required();
        cmd->add_option("--n", *n, "number of branch points")->required();
        cmd->add_flag("--json", *js, "machine-readable output");
        cmd->callback([&action, d, n, js] { action = [=] { return run_genus(*d, *n, *js); }; });
    }

    // Shared option pack for family-based subcommands.
    struct FamilyOpts {
        int d = 0;
        int n = 0;
        std::string branch;
        bool json = false;
        CoverFamily cover() const {
            if (!branch.empty()) {
                auto values = parse_branch(branch);
                return make_cover(d, static_cast<int>(values.size()), std::move(values));
            }
            if (n < 2) throw UsageError("either --branch or --n is required");
            return make_cover(d, n, synthetic_branch(n));
        }
    };
    auto add_family = [](CLI::App* cmd, const std::shared_ptr<FamilyOpts>& f, bool need_branch) {
        cmd->add_option("--d", f->d, "covering degree")->required();
        auto* branch =
            cmd->add_option("--branch", f->branch, "comma-separated branch values (rationals or parameter names)");
        if (need_branch)
            branch->required();
        else
            cmd->add_option("--n", f->n, "number of branch points (synthesizes t1..tn)");
        cmd->add_flag("--json", f->json, "machine-readable output");
    };

    // basis
    {
        auto* cmd = app.add_subcommand("basis", "monomial basis of the holomorphic eigenspace");
        auto f = std::make_shared<FamilyOpts>();
        auto j = std::make_shared<int>(0);
        add_family(cmd, f, false);
        cmd->add_option("--j", *j, "eigenvalue exponent")->required();
        cmd->callback([&action, f, j] { action = [=] { return run_basis(f->cover(), *j, f->json); }; });
    }

    // divisor
    {
        auto* cmd = app.add_subcommand("divisor", "zero divisor and stratum signature of an eigenform");
        auto f = std::make_shared<FamilyOpts>();
        auto section = std::make_shared<std::string>();
        auto l = std::make_shared<int>(-1);
        add_family(cmd, f, true);
        cmd->add_option("--section", *section, "numerator polynomial U(x)")->required();
        cmd->add_option("--l", *l, "power of y in the denominator (default d-1)");
        cmd->callback([&action, f, section, l] {
            action = [=] {
                const CoverFamily cover = f->cover();
                const int ll = *l < 0 ? cover.d - 1 : *l;
                return run_divisor(cover, *section, ll, f->json);
            };
        });
    }

    // connection
    {
        auto* cmd = app.add_subcommand("connection", "Gauss-Manin connection matrix");
        auto f = std::make_shared<FamilyOpts>();
        auto wrt = std::make_shared<std::string>();
        add_family(cmd, f, true);
        cmd->add_option("--wrt", *wrt, "branch parameter to differentiate along")->required();
        cmd->callback([&action, f, wrt] {
            action = [=] { return run_connection(f->cover(), *wrt, f->json); };
        });
    }

    // curvature
    {
        auto* cmd = app.add_subcommand("curvature", "curvature of the connection (flatness check)");
        auto f = std::make_shared<FamilyOpts>();
        auto dirs = std::make_shared<std::string>();
        add_family(cmd, f, true);
        cmd->add_option("--dirs", *dirs, "two branch parameters, comma-separated")->required();
        cmd->callback([&action, f, dirs] {
            action = [=] { return run_curvature(f->cover(), split_list(*dirs), f->json); };
        });
    }

    // flag-rank
    {
        auto* cmd = app.add_subcommand("flag-rank", "rank of a section and its iterated derivatives");
        auto f = std::make_shared<FamilyOpts>();
        auto section = std::make_shared<std::string>();
        auto dir = std::make_shared<std::string>();
        auto order = std::make_shared<int>(2);
        add_family(cmd, f, true);
        cmd->add_option("--section", *section, "numerator polynomial U(x)")->required();
        cmd->add_option("--dir", *dir, "branch parameter to differentiate along")->required();
        cmd->add_option("--order", *order, "highest derivative order (default 2)");
        cmd->callback([&action, f, section, dir, order] {
            action = [=] { return run_flag_rank(f->cover(), *section, *dir, *order, f->json); };
        });
    }

    // span
    {
        auto* cmd = app.add_subcommand("span", "span of first derivatives along several directions");
        auto f = std::make_shared<FamilyOpts>();
        auto section = std::make_shared<std::string>();
        auto dirs = std::make_shared<std::string>();
        auto scaled = std::make_shared<bool>(false);
        add_family(cmd, f, true);
        cmd->add_option("--section", *section, "numerator polynomial U(x)")->required();
        cmd->add_option("--dirs", *dirs, "branch parameters, comma-separated")->required();
        cmd->add_flag("--scaled", *scaled, "scale each derivative column by P'(t_k)");
        cmd->callback([&action, f, section, dirs, scaled] {
            action = [=] {
                return run_span(f->cover(), *section, split_list(*dirs), *scaled, f->json);
            };
        });
    }

    // monodromy
    {
        auto* cmd = app.add_subcommand("monodromy", "finite-monodromy criterion on a Galois orbit");
        auto f = std::make_shared<FamilyOpts>();
        auto j = std::make_shared<int>(0);
        add_family(cmd, f, false);
        cmd->add_option("--j", *j, "eigenvalue exponent")->required();
        cmd->callback([&action, f, j] {
            action = [=] { return run_monodromy(f->cover(), *j, f->json); };
        });
    }

    // verify-paper
    {
        auto* cmd = app.add_subcommand("verify-paper", "replay every published computation");
        auto only = std::make_shared<std::string>();
        auto fault = std::make_shared<std::string>();
        auto js = std::make_shared<bool>(false);
        cmd->add_option("--only", *only, "run a single named check");
        cmd->add_option("--inject-fault", *fault,
                        "perturb a connection coefficient; the run must fail (self-test)");
        cmd->add_flag("--json", *js, "machine-readable output");
        cmd->callback([&action, only, fault, js] {
            action = [=] {
                const auto opt = [](const std::string& s) {
                    return s.empty() ? std::nullopt : std::optional<std::string>(s);
                };
                return run_verify(opt(*only), opt(*fault), *js);
            };
        });
    }

    try {
        app.parse(argc, argv);
        if (action) exit_code = action();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const cycgm::ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const cycgm::Error& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
