#include "cycgm/ratfunc.hpp"

namespace cycgm {

RatFunc::RatFunc(VarTablePtr table)
    : num_(MultiPoly(table)), den_(MultiPoly::constant(std::move(table), Rational(1))) {}

namespace {

// Canonicalizes an already coprime pair: the denominator becomes
// integer-primitive with positive grlex leading coefficient.
std::pair<MultiPoly, MultiPoly> normalize_pair(MultiPoly num, MultiPoly den) {
    Rational c = den.content();
    if (den.leading_coeff() < 0) c = -c;
    const Rational inv = Rational(1) / c;
    return {num * inv, den * inv};
}

}  // namespace

RatFunc RatFunc::make(MultiPoly num, MultiPoly den) {
    require_same_table(num.table(), den.table());
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    const VarTablePtr table = num.table();
    if (num.is_zero()) return RatFunc(table);
    if (!den.is_constant() && !num.is_constant()) {
        const MultiPoly g = gcd(num, den);
        if (!g.is_constant()) {
            num = div_checked(num, g);
            den = div_checked(den, g);
        }
    }
    auto [n, d] = normalize_pair(std::move(num), std::move(den));
    return RatFunc(std::move(n), std::move(d), 0);
}

RatFunc RatFunc::from_poly(MultiPoly p) {
    auto table = p.table();
    return RatFunc(std::move(p), MultiPoly::constant(std::move(table), Rational(1)), 0);
}

RatFunc RatFunc::constant(VarTablePtr table, const Rational& value) {
    return from_poly(MultiPoly::constant(std::move(table), value));
}

RatFunc RatFunc::variable(VarTablePtr table, std::string_view name) {
    return from_poly(MultiPoly::variable(std::move(table), name));
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw Error("constant_value on a non-constant rational function");
    return num_.constant_value();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

namespace {

// Both operands are reduced pairs, so the classical cancellation schemes
// apply and no full-size gcd is ever needed.

// a/b + c/d through g = gcd(b, d): with t = a*(d/g) + c*(b/g), any factor t
// shares with the denominator divides g.
std::pair<MultiPoly, MultiPoly> add_reduced(const MultiPoly& a, const MultiPoly& b,
                                            const MultiPoly& c, const MultiPoly& d) {
    const MultiPoly g = gcd(b, d);
    if (g.is_constant()) return {a * d + c * b, b * d};
    const MultiPoly b1 = div_checked(b, g);
    const MultiPoly d1 = div_checked(d, g);
    MultiPoly t = a * d1 + c * b1;
    if (t.is_zero()) return {std::move(t), MultiPoly::constant(b.table(), Rational(1))};
    const MultiPoly h = gcd(t, g);
    if (h.is_constant()) return {std::move(t), b1 * d1 * g};
    return {div_checked(t, h), b1 * d1 * div_checked(g, h)};
}

// (a/b)*(c/d) with cross-cancellation; the result is already reduced.
std::pair<MultiPoly, MultiPoly> mul_reduced(const MultiPoly& a, const MultiPoly& b,
                                            const MultiPoly& c, const MultiPoly& d) {
    const MultiPoly g1 = gcd(a, d);
    const MultiPoly g2 = gcd(c, b);
    return {div_checked(a, g1) * div_checked(c, g2), div_checked(b, g2) * div_checked(d, g1)};
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    require_same_table(a.table(), b.table());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto [num, den] = add_reduced(a.num_, a.den_, b.num_, b.den_);
    if (num.is_zero()) return RatFunc(a.table());
    auto [n, d] = normalize_pair(std::move(num), std::move(den));
    return RatFunc(std::move(n), std::move(d), 0);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    require_same_table(a.table(), b.table());
    if (a.is_zero() || b.is_zero()) return RatFunc(a.table());
    auto [num, den] = mul_reduced(a.num_, a.den_, b.num_, b.den_);
    auto [n, d] = normalize_pair(std::move(num), std::move(den));
    return RatFunc(std::move(n), std::move(d), 0);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominator("division by the zero rational function");
    if (a.is_zero()) return a;
    auto [num, den] = mul_reduced(a.num_, a.den_, b.den_, b.num_);
    auto [n, d] = normalize_pair(std::move(num), std::move(den));
    return RatFunc(std::move(n), std::move(d), 0);
}

RatFunc RatFunc::derivative(std::size_t var) const {
    // (n/d)' = (n'd - nd')/d^2
    return make(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc eval_poly(const MultiPoly& p, const std::map<std::string, RatFunc>& bindings) {
    const VarTablePtr& table = p.table();
    std::vector<const RatFunc*> by_index(table->size(), nullptr);
    for (const auto& [name, value] : bindings) {
        auto idx = table->index_of(name);
        if (!idx) throw Error("unknown variable in substitution: " + name);
        if (*idx == VarTable::x_index()) throw Error("cannot substitute the main variable x");
        require_same_table(table, value.table());
        by_index[*idx] = &value;
    }
    RatFunc result(table);
    for (const auto& [m, c] : p.terms()) {
        RatFunc term = RatFunc::constant(table, c);
        Monomial kept(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (by_index[i] && m[i] > 0) {
                for (std::uint32_t e = 0; e < m[i]; ++e) term *= *by_index[i];
            } else {
                kept[i] = m[i];
            }
        }
        result += term * RatFunc::from_poly(MultiPoly::monomial(table, kept, Rational(1)));
    }
    return result;
}

RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings) {
    const RatFunc den = eval_poly(f.den(), bindings);
    if (den.is_zero())
        throw ZeroDenominator("substitution sends a denominator to zero: " + f.den().str());
    return eval_poly(f.num(), bindings) / den;
}

}  // namespace cycgm
