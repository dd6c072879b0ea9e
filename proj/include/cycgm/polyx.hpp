#pragma once

#include <vector>

#include "cycgm/ratfunc.hpp"

namespace cycgm {

/// Dense polynomial in the main variable x, lowest degree first, with
/// rational-function coefficients in the parameters only. The highest stored
/// coefficient is nonzero unless the polynomial is zero (empty list).
class PolyInX {
public:
    explicit PolyInX(VarTablePtr table) : table_(std::move(table)) {}

    static PolyInX from_coeffs(VarTablePtr table, std::vector<RatFunc> coeffs);
    static PolyInX from_multipoly(const MultiPoly& p);
    static PolyInX constant(VarTablePtr table, RatFunc value);
    static PolyInX x(VarTablePtr table);

    const VarTablePtr& table() const { return table_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    RatFunc coeff(std::size_t i) const;
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    RatFunc leading_coeff() const;

    PolyInX operator-() const;
    friend PolyInX operator+(const PolyInX& a, const PolyInX& b);
    friend PolyInX operator-(const PolyInX& a, const PolyInX& b);
    friend PolyInX operator*(const PolyInX& a, const PolyInX& b);
    PolyInX operator*(const RatFunc& s) const;
    PolyInX& operator+=(const PolyInX& rhs) { return *this = *this + rhs; }
    PolyInX& operator-=(const PolyInX& rhs) { return *this = *this - rhs; }

    bool operator==(const PolyInX& rhs) const;
    bool operator!=(const PolyInX& rhs) const { return !(*this == rhs); }

    PolyInX derivative_x() const;
    /// Coefficient-wise derivative in a parameter variable.
    PolyInX derivative_param(std::size_t var) const;

    /// Horner evaluation at a rational-function point.
    RatFunc eval(const RatFunc& point) const;

    /// (x - r) * this.
    PolyInX mul_linear(const RatFunc& r) const;

    /// Single rational function (num may involve x, den is parameter-only).
    RatFunc to_ratfunc() const;

    std::string str() const { return to_ratfunc().str(); }

private:
    void trim();
    VarTablePtr table_;
    std::vector<RatFunc> coeffs_;
};

inline PolyInX operator*(const RatFunc& s, const PolyInX& p) { return p * s; }

/// Exact quotient by (x - r); throws InexactDivision on a nonzero remainder.
PolyInX div_linear_exact(const PolyInX& p, const RatFunc& r);

PolyInX substitute(const PolyInX& p, const std::map<std::string, RatFunc>& bindings);

}  // namespace cycgm
