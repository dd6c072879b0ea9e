#include "cycgm/cover.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "cycgm/polyx.hpp"

namespace cycgm {

std::string branch_value_str(const BranchValue& v) {
    if (is_symbolic(v)) return std::get<std::string>(v);
    return to_string(std::get<Rational>(v));
}

RatFunc CoverFamily::branch_value(std::size_t i) const {
    const BranchValue& v = branch.at(i);
    if (is_symbolic(v)) return RatFunc::variable(table, std::get<std::string>(v));
    return RatFunc::constant(table, std::get<Rational>(v));
}

std::optional<std::size_t> CoverFamily::branch_index_of(std::string_view name) const {
    for (std::size_t i = 0; i < branch.size(); ++i)
        if (is_symbolic(branch[i]) && std::get<std::string>(branch[i]) == name) return i;
    return std::nullopt;
}

PolyInX CoverFamily::branch_poly() const {
    PolyInX p = PolyInX::constant(table, RatFunc::constant(table, Rational(1)));
    for (std::size_t i = 0; i < branch.size(); ++i) p = p.mul_linear(branch_value(i));
    return p;
}

long genus(int d, int n) {
    if (d < 2 || n < 2) throw Error("genus requires d >= 2 and n >= 2");
    const long a = std::gcd(d, n);
    const long num = static_cast<long>(n - 1) * (d - 1) - (a - 1);
    assert(num >= 0 && num % 2 == 0);
    return num / 2;
}

CoverFamily make_cover(int d, int n, std::vector<BranchValue> branch, VarTablePtr table) {
    if (d < 2 || n < 2) throw Error("cover requires d >= 2 and n >= 2");
    if (static_cast<int>(branch.size()) != n)
        throw Error("branch list has " + std::to_string(branch.size()) + " entries, expected " +
                    std::to_string(n));

    std::set<Rational> explicit_values;
    std::set<std::string> names;
    std::vector<std::string> params;
    for (const auto& v : branch) {
        if (is_symbolic(v)) {
            const auto& name = std::get<std::string>(v);
            if (!names.insert(name).second)
                throw DistinctnessError("duplicate branch parameter: " + name);
            params.push_back(name);
        } else {
            if (!explicit_values.insert(std::get<Rational>(v)).second)
                throw DistinctnessError("duplicate branch value: " + branch_value_str(v));
        }
    }

    CoverFamily cover;
    cover.d = d;
    cover.n = n;
    cover.a = std::gcd(d, n);
    cover.b = n / cover.a;
    cover.c = d / cover.a;
    cover.genus = genus(d, n);
    cover.branch = std::move(branch);
    if (table) {
        for (const auto& name : params)
            if (!table->index_of(name))
                throw Error("branch parameter missing from the supplied table: " + name);
        cover.table = std::move(table);
    } else {
        cover.table = make_table(params);
    }
    return cover;
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

H10 h10_info(const CoverFamily& cover, int j) {
    if (j < 1 || j > cover.d - 1) throw Error("eigenvalue exponent out of range");
    const int l = ((-j) % cover.d + cover.d) % cover.d;
    H10 out;
    out.outside_proved_regime = (l != cover.d - 1) || !(cover.n < cover.d);
    if (l == 0) return out;
    // Count m >= 0 with the order at infinity -c*m - c - 1 + b*l nonnegative.
    const long bound = floor_div(static_cast<long>(cover.b) * l - cover.c - 1, cover.c) + 1;
    out.dim = static_cast<int>(std::max(0L, bound));
    return out;
}

int h10_dim(const CoverFamily& cover, int j) { return h10_info(cover, j).dim; }

EigenspaceReport eigenspace_report(const CoverFamily& cover, int j) {
    EigenspaceReport r;
    r.j = j;
    r.h10 = h10_dim(cover, j);
    r.h01 = h10_dim(cover, cover.d - j);
    r.pure = (r.h10 == 0) || (r.h01 == 0);
    return r;
}

MonodromyReport finite_monodromy_check(const CoverFamily& cover, int j) {
    if (j < 1 || j > cover.d - 1) throw Error("eigenvalue exponent out of range");
    std::set<int> orbit;
    for (int m = 1; m < cover.d; ++m) {
        if (std::gcd(m, cover.d) != 1) continue;
        orbit.insert(static_cast<int>((static_cast<long>(j) * m) % cover.d));
    }
    MonodromyReport report;
    report.finite = true;
    for (int e : orbit) {
        report.orbit.push_back(eigenspace_report(cover, e));
        if (!report.orbit.back().pure) report.finite = false;
    }
    return report;
}

}  // namespace cycgm
