#include "cycgm/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cycgm {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    // Same degree: earlier variables more significant, larger exponent wins.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly MultiPoly::constant(VarTablePtr table, const Rational& value) {
    MultiPoly p(std::move(table));
    if (value != 0) p.terms_.emplace(Monomial(p.table_->size(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr table, std::size_t var) {
    MultiPoly p(std::move(table));
    Monomial m(p.table_->size(), 0);
    m.at(var) = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr table, std::string_view name) {
    auto idx = table->index_of(name);
    if (!idx) throw Error("unknown variable: " + std::string(name));
    return variable(std::move(table), *idx);
}

MultiPoly MultiPoly::monomial(VarTablePtr table, Monomial m, const Rational& coeff) {
    MultiPoly p(std::move(table));
    if (m.size() != p.table_->size()) throw Error("monomial length does not match table");
    if (coeff != 0) p.terms_.emplace(std::move(m), coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

bool MultiPoly::is_one() const { return is_constant() && constant_value() == 1; }

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on a non-constant polynomial");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.rbegin()->first;  // grlex max has max total degree
    return std::accumulate(m.begin(), m.end(), 0L);
}

long MultiPoly::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.at(var)));
    return terms_.empty() ? -1 : d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_table(table_, rhs.table_);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_table(table_, rhs.table_);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_table(a.table_, b.table_);
    MultiPoly r(a.table_);
    Monomial m(a.table_->size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly r(table_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(table_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return same_table(table_, rhs.table_) && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.at(var);
        if (e == 0) continue;
        Monomial dm = m;
        dm[var] = e - 1;
        r.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::primitive_sign_normalized() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_coeff() < 0) c = -c;
    return *this * (Rational(1) / c);
}

MultiPoly MultiPoly::coeff_of(std::size_t var, std::uint32_t k) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
        if (m.at(var) != k) continue;
        Monomial rm = m;
        rm[var] = 0;
        r.terms_.emplace(std::move(rm), c);
    }
    return r;
}

MultiPoly MultiPoly::leading_coeff_in(std::size_t var) const {
    const long d = degree_in(var);
    if (d < 0) return MultiPoly(table_);
    return coeff_of(var, static_cast<std::uint32_t>(d));
}

MultiPoly MultiPoly::shifted(std::size_t var, std::uint32_t k) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
        Monomial rm = m;
        rm[var] += k;
        r.terms_.emplace(std::move(rm), c);
    }
    return r;
}

namespace {

void print_monomial(std::ostringstream& out, const VarTable& table, const Monomial& m) {
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out << "*";
        out << table.name(i);
        if (m[i] > 1) out << "^" << m[i];
        first = false;
    }
}

bool is_constant_monomial(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const Rational abs_c = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (is_constant_monomial(m)) {
            out << to_string(abs_c);
        } else {
            if (abs_c != 1) out << to_string(abs_c) << "*";
            print_monomial(out, *table_, m);
        }
        first = false;
    }
    return out.str();
}

MultiPoly div_checked(const MultiPoly& a, const MultiPoly& b) {
    auto q = divexact(a, b);
    if (!q) throw InexactDivision("inexact polynomial division");
    return std::move(*q);
}

std::optional<MultiPoly> divexact(const MultiPoly& a, const MultiPoly& b) {
    require_same_table(a.table(), b.table());
    if (b.is_zero()) throw ZeroDenominator("division by the zero polynomial");
    MultiPoly q(a.table());
    MultiPoly rem = a;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coeff();
    const std::size_t nv = a.table()->size();
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial();
        Monomial qm(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            qm[i] = lr[i] - lb[i];
        }
        const Rational qc = rem.leading_coeff() / cb;
        MultiPoly term = MultiPoly::monomial(a.table(), qm, qc);
        q += term;
        rem -= term * b;
    }
    return q;
}

namespace {

// Dense view of p in one variable; coefficients carry that variable at
// exponent zero. Trailing (high-degree) entries are nonzero.
std::vector<MultiPoly> to_dense(const MultiPoly& p, std::size_t var) {
    const long d = p.degree_in(var);
    std::vector<MultiPoly> out;
    if (p.is_zero()) return out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (long k = 0; k <= d; ++k) out.push_back(p.coeff_of(var, static_cast<std::uint32_t>(k)));
    return out;
}

MultiPoly from_dense(const VarTablePtr& table, std::size_t var, const std::vector<MultiPoly>& v) {
    MultiPoly r(table);
    for (std::size_t k = 0; k < v.size(); ++k) r += v[k].shifted(var, static_cast<std::uint32_t>(k));
    return r;
}

void trim(std::vector<MultiPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

MultiPoly gcd_list(const VarTablePtr& table, const std::vector<MultiPoly>& polys) {
    MultiPoly g(table);
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : gcd_rec(g, p);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) return g;
    return g.primitive_sign_normalized();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return make_rational(num, den);
}

// Divides out both the polynomial and the rational content of the list;
// keeps every remainder in the sequence at input-sized coefficients.
void primitive_scale(const VarTablePtr& table, std::vector<MultiPoly>& v) {
    if (v.empty()) return;
    const MultiPoly g = gcd_list(table, v);
    if (!g.is_constant())
        for (auto& c : v) c = div_checked(c, g);
    Rational rc(0);
    for (const auto& c : v)
        if (!c.is_zero()) rc = rational_gcd(rc, c.content());
    if (rc != 0 && rc != 1) {
        const Rational inv = Rational(1) / rc;
        for (auto& c : v) c = c * inv;
    }
}

// Primitive remainder of a by b in one variable: each elimination step
// multiplies by lc(b) and immediately strips content, so coefficients never
// pile up powers of the leading coefficient.
std::vector<MultiPoly> prem_primitive(const VarTablePtr& table, std::vector<MultiPoly> a,
                                      const std::vector<MultiPoly>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const MultiPoly& lb = b.back();
    trim(a);
    while (!a.empty() && static_cast<long>(a.size()) - 1 >= db) {
        const long da = static_cast<long>(a.size()) - 1;
        const MultiPoly lc = a.back();
        const long s = da - db;
        std::vector<MultiPoly> next;
        next.reserve(static_cast<std::size_t>(da));
        for (long i = 0; i < da; ++i) {
            MultiPoly t = a[static_cast<std::size_t>(i)] * lb;
            if (i >= s) t -= lc * b[static_cast<std::size_t>(i - s)];
            next.push_back(std::move(t));
        }
        a = std::move(next);
        trim(a);
        primitive_scale(table, a);
    }
    return a;
}

// GCD up to a rational unit; inputs nonzero.
MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
    const VarTablePtr& table = p.table();
    // Last table variable that occurs in either operand.
    std::size_t var = 0;
    bool found = false;
    for (std::size_t i = table->size(); i-- > 0;) {
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) {
            var = i;
            found = true;
            break;
        }
    }
    if (!found) return MultiPoly::constant(table, 1);

    std::vector<MultiPoly> pd = to_dense(p, var);
    std::vector<MultiPoly> qd = to_dense(q, var);
    const MultiPoly cont_p = gcd_list(table, pd);
    const MultiPoly cont_q = gcd_list(table, qd);
    for (auto& c : pd) c = div_checked(c, cont_p);
    for (auto& c : qd) c = div_checked(c, cont_q);
    const MultiPoly cont_gcd = gcd_rec(cont_p, cont_q);

    if (pd.size() < qd.size()) std::swap(pd, qd);
    while (qd.size() > 1) {
        std::vector<MultiPoly> rem = prem_primitive(table, pd, qd);
        if (rem.empty()) break;
        pd = std::move(qd);
        qd = std::move(rem);
    }
    if (qd.size() == 1) {
        // Coprime in the main variable: only the contents survive.
        return cont_gcd;
    }
    return cont_gcd * from_dense(table, var, qd);
}

}  // namespace

namespace {

Monomial common_monomial(const MultiPoly& p) {
    Monomial m = p.terms().begin()->first;
    for (const auto& [mono, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mono[i]);
    return m;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    require_same_table(a.table(), b.table());
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.primitive_sign_normalized();
    if (b.is_zero()) return a.primitive_sign_normalized();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.table(), 1);
    if (a == b) return a.primitive_sign_normalized();
    if (a.terms().size() == 1 || b.terms().size() == 1) {
        Monomial ma = common_monomial(a);
        const Monomial mb = common_monomial(b);
        for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = std::min(ma[i], mb[i]);
        return MultiPoly::monomial(a.table(), std::move(ma), Rational(1));
    }
    return gcd_rec(a, b).primitive_sign_normalized();
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
    require_same_table(a.table(), b.table());
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.table());
    return (a * div_checked(b, gcd(a, b))).primitive_sign_normalized();
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
    const VarTablePtr& table = p.table();
    std::vector<const MultiPoly*> by_index(table->size(), nullptr);
    for (const auto& [name, value] : bindings) {
        auto idx = table->index_of(name);
        if (!idx) throw Error("unknown variable in substitution: " + name);
        if (*idx == VarTable::x_index()) throw Error("cannot substitute the main variable x");
        require_same_table(table, value.table());
        by_index[*idx] = &value;
    }
    MultiPoly result(table);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(table, c);
        Monomial kept(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (by_index[i] && m[i] > 0)
                term = term * by_index[i]->pow(m[i]);
            else
                kept[i] = m[i];
        }
        result += term * MultiPoly::monomial(table, kept, Rational(1));
    }
    return result;
}

}  // namespace cycgm
