#include "cycgm/polyx.hpp"

namespace cycgm {

namespace {

void require_param_only(const RatFunc& f) {
    if (f.num().degree_in(VarTable::x_index()) > 0 || f.den().degree_in(VarTable::x_index()) > 0)
        throw Error("PolyInX coefficient involves the main variable x");
}

}  // namespace

void PolyInX::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyInX PolyInX::from_coeffs(VarTablePtr table, std::vector<RatFunc> coeffs) {
    PolyInX p(std::move(table));
    for (const auto& c : coeffs) {
        require_same_table(p.table_, c.table());
        require_param_only(c);
    }
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

PolyInX PolyInX::from_multipoly(const MultiPoly& p) {
    PolyInX out(p.table());
    const long d = p.degree_in(VarTable::x_index());
    for (long k = 0; k <= d; ++k)
        out.coeffs_.push_back(RatFunc::from_poly(p.coeff_of(VarTable::x_index(), static_cast<std::uint32_t>(k))));
    out.trim();
    return out;
}

PolyInX PolyInX::constant(VarTablePtr table, RatFunc value) {
    require_param_only(value);
    PolyInX p(std::move(table));
    if (!value.is_zero()) p.coeffs_.push_back(std::move(value));
    return p;
}

PolyInX PolyInX::x(VarTablePtr table) {
    PolyInX p(table);
    p.coeffs_.push_back(RatFunc(table));
    p.coeffs_.push_back(RatFunc::constant(table, Rational(1)));
    return p;
}

RatFunc PolyInX::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return RatFunc(table_);
}

RatFunc PolyInX::leading_coeff() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

PolyInX PolyInX::operator-() const {
    PolyInX r(table_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

PolyInX operator+(const PolyInX& a, const PolyInX& b) {
    require_same_table(a.table_, b.table_);
    PolyInX r(a.table_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(a.coeff(i) + b.coeff(i));
    r.trim();
    return r;
}

PolyInX operator-(const PolyInX& a, const PolyInX& b) { return a + (-b); }

PolyInX operator*(const PolyInX& a, const PolyInX& b) {
    require_same_table(a.table_, b.table_);
    PolyInX r(a.table_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, RatFunc(a.table_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

PolyInX PolyInX::operator*(const RatFunc& s) const {
    PolyInX r(table_);
    if (s.is_zero()) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c * s);
    return r;
}

bool PolyInX::operator==(const PolyInX& rhs) const {
    return same_table(table_, rhs.table_) && coeffs_ == rhs.coeffs_;
}

PolyInX PolyInX::derivative_x() const {
    PolyInX r(table_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * RatFunc::constant(table_, Rational(static_cast<long>(i))));
    r.trim();
    return r;
}

PolyInX PolyInX::derivative_param(std::size_t var) const {
    if (var == VarTable::x_index()) throw Error("derivative_param on the main variable");
    PolyInX r(table_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c.derivative(var));
    r.trim();
    return r;
}

RatFunc PolyInX::eval(const RatFunc& point) const {
    require_param_only(point);
    RatFunc acc(table_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
}

PolyInX PolyInX::mul_linear(const RatFunc& r) const {
    PolyInX shifted(table_);
    shifted.coeffs_.push_back(RatFunc(table_));
    for (const auto& c : coeffs_) shifted.coeffs_.push_back(c);
    return shifted - *this * r;
}

RatFunc PolyInX::to_ratfunc() const {
    MultiPoly den = MultiPoly::constant(table_, Rational(1));
    for (const auto& c : coeffs_) den = div_checked(den * c.den(), gcd(den, c.den()));
    MultiPoly num(table_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        MultiPoly lifted = coeffs_[i].num() * div_checked(den, coeffs_[i].den());
        num += lifted.shifted(VarTable::x_index(), static_cast<std::uint32_t>(i));
    }
    return RatFunc::make(std::move(num), std::move(den));
}

PolyInX div_linear_exact(const PolyInX& p, const RatFunc& r) {
    if (p.is_zero()) return p;
    const long d = p.degree();
    if (d == 0)
        throw InexactDivision("nonzero remainder " + p.coeff(0).str());
    std::vector<RatFunc> q(static_cast<std::size_t>(d), RatFunc(p.table()));
    RatFunc carry = p.coeff(static_cast<std::size_t>(d));
    for (long i = d - 1; i >= 0; --i) {
        q[static_cast<std::size_t>(i)] = carry;
        carry = p.coeff(static_cast<std::size_t>(i)) + r * carry;
    }
    if (!carry.is_zero()) throw InexactDivision("nonzero remainder " + carry.str());
    return PolyInX::from_coeffs(p.table(), std::move(q));
}

PolyInX substitute(const PolyInX& p, const std::map<std::string, RatFunc>& bindings) {
    std::vector<RatFunc> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(substitute(c, bindings));
    return PolyInX::from_coeffs(p.table(), std::move(out));
}

}  // namespace cycgm
