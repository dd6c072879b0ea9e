#include "cycgm/verify.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "cycgm/flags.hpp"
#include "cycgm/forms.hpp"
#include "cycgm/parser.hpp"

namespace cycgm {

namespace {

struct Ctx {
    GmWeights weights(int d) const {
        if (fault) return faulted_weights(*fault, d);
        return GmWeights::standard(d);
    }
    std::optional<std::string> fault;
};

CoverFamily cover64() {
    return make_cover(6, 4, {Rational(0), Rational(1), Rational(-1), std::string("u")});
}

CoverFamily cover65() {
    return make_cover(6, 5,
                      {Rational(0), Rational(1), std::string("a"), std::string("b"), std::string("c")});
}

CoverFamily cover103() {
    return make_cover(10, 3, {Rational(0), Rational(1), std::string("v")});
}

std::string matrix_str(const RfMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << m.at(i, j).str();
        }
        out << "]";
        if (i + 1 < m.rows()) out << " ";
    }
    return out.str();
}

std::string vector_str(const std::vector<RatFunc>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].str();
    }
    out << ")";
    return out.str();
}

std::string signature_str(const std::vector<long>& sig) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) out << ",";
        out << sig[i];
    }
    out << ")";
    return out.str();
}

void set_fail(CheckResult& r, std::string expected, std::string actual) {
    r.status = CheckResult::Status::Fail;
    r.expected = std::move(expected);
    r.actual = std::move(actual);
}

// ---- individual checks -----------------------------------------------

void check_genus(CheckResult& r, int d, int n, long expected) {
    const long actual = genus(d, n);
    if (actual != expected) set_fail(r, std::to_string(expected), std::to_string(actual));
}

void check_lemma_basis(CheckResult& r, const CoverFamily& cover, int j, int expected_dim) {
    const auto basis = holomorphic_basis(cover, j);
    if (static_cast<int>(basis.size()) != expected_dim) {
        set_fail(r, "dimension " + std::to_string(expected_dim),
                 "dimension " + std::to_string(basis.size()));
        return;
    }
    PolyInX monomial = PolyInX::constant(cover.table, RatFunc::constant(cover.table, Rational(1)));
    const PolyInX x = PolyInX::x(cover.table);
    for (const auto& form : basis) {
        if (form.numerator != monomial) {
            set_fail(r, monomial.str(), form.numerator.str());
            return;
        }
        monomial = monomial * x;
    }
}

void check_stratum(CheckResult& r, const Eigenform& form, const std::vector<long>& expected) {
    const Divisor div = divisor(form);
    const long want_degree = 2 * form.cover.genus - 2;
    if (div.degree != want_degree) {
        set_fail(r, "degree " + std::to_string(want_degree), "degree " + std::to_string(div.degree));
        return;
    }
    const auto sig = stratum_signature(form);
    if (sig != expected) set_fail(r, signature_str(expected), signature_str(sig));
}

RfMatrix expected_matrix64(const VarTablePtr& table) {
    const MultiPoly den = parse_poly("6*u*(1 - u^2)", table);
    const std::vector<std::vector<std::string>> rows = {
        {"5*u^2 - 4", "u", "u^2"},
        {"5*u", "5*u^2", "5*u"},
        {"2", "2*u", "2*u^2"},
    };
    RfMatrix m(table, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m.at(i, j) = RatFunc::make(parse_poly(rows[i][j], table), den);
    return m;
}

void check_gm_matrix64(CheckResult& r, const Ctx& ctx) {
    const CoverFamily cover = cover64();
    const GaussManin gm(cover, ctx.weights(cover.d));
    const RfMatrix actual = gm.matrix(*cover.branch_index_of("u"));
    const RfMatrix expected = expected_matrix64(cover.table);
    if (actual != expected) set_fail(r, matrix_str(expected), matrix_str(actual));
}

std::vector<RatFunc> expected_vector(const VarTablePtr& table,
                                     const std::vector<std::string>& nums,
                                     const std::string& den) {
    const MultiPoly d = parse_poly(den, table);
    std::vector<RatFunc> out;
    for (const auto& n : nums) out.push_back(RatFunc::make(parse_poly(n, table), d));
    return out;
}

void check_gm_vec_nabla_p2(CheckResult& r, const Ctx& ctx) {
    const CoverFamily cover = cover64();
    const GaussManin gm(cover, ctx.weights(cover.d));
    const std::size_t k = *cover.branch_index_of("u");
    const PolyInX p2 = parse_poly_in_x("x^2", cover.table);
    const auto actual = gm.coordinates(gm.derivative(p2, k));
    const auto expected = expected_vector(cover.table, {"u^2", "5*u", "2*u^2"}, "6*u*(1 - u^2)");
    if (actual != expected) set_fail(r, vector_str(expected), vector_str(actual));
}

void check_gm_vec_second(CheckResult& r, const Ctx& ctx) {
    const CoverFamily cover = cover64();
    const GaussManin gm(cover, ctx.weights(cover.d));
    const std::size_t k = *cover.branch_index_of("u");
    const PolyInX p2 = parse_poly_in_x("x^2", cover.table);
    const RatFunc scale = RatFunc::from_poly(parse_poly("6*(1 - u^2)", cover.table));
    const PolyInX inner = gm.derivative(p2, k) * scale;
    const auto actual = gm.coordinates(gm.derivative(inner, k));
    const auto expected =
        expected_vector(cover.table, {"7 + u^2", "40*u", "24 - 8*u^2"}, "6*(1 - u^2)");
    if (actual != expected) set_fail(r, vector_str(expected), vector_str(actual));
}

// The two coefficient displays for P = x(x-1)(x-a)(x-b)(x-c) are written
// once with placeholder names: U is the differentiation value, V and W the
// remaining two parameters.
PolyInX parse_display(const VarTablePtr& table, const std::string& src,
                      const std::string& u, const std::string& v, const std::string& w) {
    std::string s;
    s.reserve(src.size());
    for (char ch : src) {
        if (ch == 'U')
            s += u;
        else if (ch == 'V')
            s += v;
        else if (ch == 'W')
            s += w;
        else
            s += ch;
    }
    return parse_poly_in_x(s, table);
}

const char* kFirstDqDisplay =
    "(U^3 - U^2 + U*V - U^2*V + U*W - U^2*W - 2*V*W + U*V*W)"
    " + (U^2 - U + 3*V - U*V + 3*W - U*W + 3*V*W)*x"
    " + (U - 4 - 4*V - 4*W)*x^2 + 5*x^3";

const char* kSecondDqDisplay =
    "(U^3 - U^2 + U*V - U^2*V + U*W - U^2*W - V*W + U*V*W)"
    " + (U^2 - U + V - U*V + W - U*W + V*W)*x"
    " + (U - 1 - V - W)*x^2 + x^3";

void check_dq_display(CheckResult& r, bool first) {
    const CoverFamily cover = cover65();
    const std::vector<std::array<std::string, 3>> cases = {
        {"a", "b", "c"}, {"b", "a", "c"}, {"c", "a", "b"}};
    for (const auto& [u, v, w] : cases) {
        const std::size_t k = *cover.branch_index_of(u);
        const PolyInX actual = first ? first_dq(cover, k) : second_dq(cover, k);
        const PolyInX expected =
            parse_display(cover.table, first ? kFirstDqDisplay : kSecondDqDisplay, u, v, w);
        if (actual != expected) {
            set_fail(r, expected.str(), actual.str());
            return;
        }
    }
}

void check_det_m(CheckResult& r, const Ctx& ctx, bool scaled) {
    const CoverFamily cover = cover65();
    const GaussManin gm(cover, ctx.weights(cover.d));
    const Eigenform section =
        make_eigenform(cover, cover.d - 1, parse_poly_in_x("1", cover.table));
    const FlagReport report = multi_direction_span(gm, section, {"a", "b", "c"}, scaled);
    if (!report.determinant) {
        r.status = CheckResult::Status::Error;
        r.message = "span did not produce a determinant";
        return;
    }
    RatFunc expected(cover.table);
    if (scaled) {
        expected = RatFunc::from_poly(parse_poly("(-91/216)*(a - b)*(a - c)*(b - c)", cover.table));
    } else {
        expected = RatFunc::make(
            MultiPoly::constant(cover.table, make_rational(91, 216)),
            parse_poly("a*b*c*(a - 1)*(b - 1)*(c - 1)*(a - b)*(a - c)*(b - c)", cover.table));
    }
    if (*report.determinant != expected) set_fail(r, expected.str(), report.determinant->str());
}

void check_monodromy(CheckResult& r, const CoverFamily& cover, int j,
                     const std::vector<int>& expected_orbit,
                     const std::vector<int>& expected_h10) {
    const MonodromyReport report = finite_monodromy_check(cover, j);
    std::vector<int> orbit, dims;
    for (const auto& e : report.orbit) {
        orbit.push_back(e.j);
        dims.push_back(e.h10);
    }
    std::ostringstream expected, actual;
    expected << "finite, orbit";
    actual << (report.finite ? "finite" : "inconclusive") << ", orbit";
    for (int e : expected_orbit) expected << " " << e;
    for (int e : orbit) actual << " " << e;
    expected << ", h10";
    actual << ", h10";
    for (int e : expected_h10) expected << " " << e;
    for (int e : dims) actual << " " << e;
    if (!report.finite || orbit != expected_orbit || dims != expected_h10)
        set_fail(r, expected.str(), actual.str());
}

void check_flatness65(CheckResult& r, const Ctx& ctx) {
    const CoverFamily cover = cover65();
    const GaussManin gm(cover, ctx.weights(cover.d));
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"a", "b"}, {"a", "c"}, {"b", "c"}};
    for (const auto& [d1, d2] : pairs) {
        const RfMatrix result =
            gm.curvature(*cover.branch_index_of(d1), *cover.branch_index_of(d2));
        if (!result.is_zero()) {
            set_fail(r, "zero matrix", matrix_str(result));
            return;
        }
    }
}

void check_genus_sum(CheckResult& r, const CoverFamily& cover) {
    long sum = 0;
    for (int j = 1; j < cover.d; ++j) sum += h10_dim(cover, j);
    if (sum != cover.genus)
        set_fail(r, "sum " + std::to_string(cover.genus), "sum " + std::to_string(sum));
}

using CheckFn = std::function<void(CheckResult&, const Ctx&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"GENUS-64", [](CheckResult& r, const Ctx&) { check_genus(r, 6, 4, 7); }},
        {"GENUS-65", [](CheckResult& r, const Ctx&) { check_genus(r, 6, 5, 10); }},
        {"LEMMA-BASIS-64",
         [](CheckResult& r, const Ctx&) {
             const CoverFamily cover = cover64();
             check_lemma_basis(r, cover, 1, 3);
             if (r.passed()) check_lemma_basis(r, cover, 5, 0);
         }},
        {"LEMMA-BASIS-65",
         [](CheckResult& r, const Ctx&) { check_lemma_basis(r, cover65(), 1, 4); }},
        {"STRATUM-H12",
         [](CheckResult& r, const Ctx&) {
             const CoverFamily cover = cover64();
             check_stratum(r, make_eigenform(cover, 5, parse_poly_in_x("x^2", cover.table)), {12});
         }},
        {"STRATUM-H18",
         [](CheckResult& r, const Ctx&) {
             const CoverFamily cover = cover65();
             check_stratum(r, make_eigenform(cover, 5, parse_poly_in_x("1", cover.table)), {18});
         }},
        {"STRATUM-H16",
         [](CheckResult& r, const Ctx&) {
             const CoverFamily cover = cover103();
             check_stratum(r, make_eigenform(cover, 9, parse_poly_in_x("1", cover.table)), {16});
         }},
        {"GM-MATRIX-64", [](CheckResult& r, const Ctx& c) { check_gm_matrix64(r, c); }},
        {"GM-VEC-NABLA-P2", [](CheckResult& r, const Ctx& c) { check_gm_vec_nabla_p2(r, c); }},
        {"GM-VEC-SECOND", [](CheckResult& r, const Ctx& c) { check_gm_vec_second(r, c); }},
        {"DQ-FIRST-65", [](CheckResult& r, const Ctx&) { check_dq_display(r, true); }},
        {"DQ-SECOND-65", [](CheckResult& r, const Ctx&) { check_dq_display(r, false); }},
        {"DET-M", [](CheckResult& r, const Ctx& c) { check_det_m(r, c, true); }},
        {"DET-M-UNSCALED", [](CheckResult& r, const Ctx& c) { check_det_m(r, c, false); }},
        {"MONODROMY-64",
         [](CheckResult& r, const Ctx&) { check_monodromy(r, cover64(), 1, {1, 5}, {3, 0}); }},
        {"MONODROMY-65",
         [](CheckResult& r, const Ctx&) { check_monodromy(r, cover65(), 1, {1, 5}, {4, 0}); }},
        {"MONODROMY-103",
         [](CheckResult& r, const Ctx&) {
             check_monodromy(r, cover103(), 1, {1, 3, 7, 9}, {2, 2, 0, 0});
         }},
        {"FLATNESS-65", [](CheckResult& r, const Ctx& c) { check_flatness65(r, c); }},
        {"GENUS-SUM-64", [](CheckResult& r, const Ctx&) { check_genus_sum(r, cover64()); }},
        {"GENUS-SUM-65", [](CheckResult& r, const Ctx&) { check_genus_sum(r, cover65()); }},
        {"GENUS-SUM-103", [](CheckResult& r, const Ctx&) { check_genus_sum(r, cover103()); }},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& fault_names() {
    static const std::vector<std::string> names = {
        "flip-term1", "flip-term2", "flip-term3", "bump-term1", "bump-term2", "bump-term3"};
    return names;
}

GmWeights faulted_weights(const std::string& fault, int d) {
    GmWeights w = GmWeights::standard(d);
    if (fault == "flip-term1")
        w.second_term = -w.second_term;
    else if (fault == "flip-term2")
        w.first_term = -w.first_term;
    else if (fault == "flip-term3")
        w.transport = -w.transport;
    else if (fault == "bump-term1")
        w.second_term += 1;
    else if (fault == "bump-term2")
        w.first_term += 1;
    else if (fault == "bump-term3")
        w.transport += 1;
    else
        throw Error("unknown fault: " + fault);
    return w;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CheckResult> verify_paper(const VerifyOptions& options) {
    Ctx ctx;
    ctx.fault = options.fault;
    if (ctx.fault) faulted_weights(*ctx.fault, 6);  // validate the name early
    std::vector<CheckResult> results;
    for (const auto& [name, fn] : registry()) {
        if (options.only && *options.only != name) continue;
        CheckResult r;
        r.name = name;
        try {
            fn(r, ctx);
        } catch (const Error& e) {
            r.status = CheckResult::Status::Error;
            r.message = e.what();
        }
        results.push_back(std::move(r));
    }
    if (options.only && results.empty()) throw Error("unknown check: " + *options.only);
    return results;
}

}  // namespace cycgm
