#pragma once

#include <map>
#include <string>

#include "cycgm/multipoly.hpp"

namespace cycgm {

/// GCD-reduced quotient of two polynomials. The representation is unique:
/// the denominator is integer-primitive with positive grlex leading
/// coefficient (so a constant denominator is exactly 1), and zero is 0/1.
/// Equality is therefore structural.
class RatFunc {
public:
    explicit RatFunc(VarTablePtr table);  // zero

    static RatFunc make(MultiPoly num, MultiPoly den);
    static RatFunc from_poly(MultiPoly p);
    static RatFunc constant(VarTablePtr table, const Rational& value);
    static RatFunc variable(VarTablePtr table, std::string_view name);

    const VarTablePtr& table() const { return num_.table(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
    RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
    RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }

    bool operator==(const RatFunc& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

    RatFunc derivative(std::size_t var) const;

    /// "num" when the denominator is 1, otherwise "(num)/(den)".
    std::string str() const;

private:
    RatFunc(MultiPoly num, MultiPoly den, int /*raw*/) : num_(std::move(num)), den_(std::move(den)) {}
    MultiPoly num_;
    MultiPoly den_;
};

/// Evaluates a polynomial at rational-function values for some parameters.
RatFunc eval_poly(const MultiPoly& p, const std::map<std::string, RatFunc>& bindings);

/// Substitution of parameters; throws ZeroDenominator when a denominator
/// specializes to the zero polynomial.
RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings);

}  // namespace cycgm
