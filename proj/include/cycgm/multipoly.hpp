#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycgm/rational.hpp"
#include "cycgm/vartable.hpp"

namespace cycgm {

/// One exponent per table variable.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then earlier variables
/// weigh more. Used for term storage, leading terms and canonical printing.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals. Stored zero-free: a
/// coefficient that cancels drops out of the map, so is_zero is structural.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit MultiPoly(VarTablePtr table) : table_(std::move(table)) {}

    static MultiPoly constant(VarTablePtr table, const Rational& value);
    static MultiPoly variable(VarTablePtr table, std::size_t var);
    static MultiPoly variable(VarTablePtr table, std::string_view name);
    static MultiPoly monomial(VarTablePtr table, Monomial m, const Rational& coeff);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    long total_degree() const;  // -1 for zero
    long degree_in(std::size_t var) const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rational& s) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    MultiPoly derivative(std::size_t var) const;

    /// Positive rational c with p/c integer-primitive; 0 for the zero poly.
    Rational content() const;
    /// Integer-primitive scalar multiple with positive grlex leading coefficient.
    MultiPoly primitive_sign_normalized() const;

    /// Coefficient of var^k, with that variable's exponent cleared.
    MultiPoly coeff_of(std::size_t var, std::uint32_t k) const;
    /// Leading coefficient as a polynomial in the remaining variables.
    MultiPoly leading_coeff_in(std::size_t var) const;
    /// Multiplies by var^k.
    MultiPoly shifted(std::size_t var, std::uint32_t k) const;

    void add_term(const Monomial& m, const Rational& coeff);

    /// Canonical form: grlex-descending terms, "3*x^2*u - 1/2".
    std::string str() const;

private:
    VarTablePtr table_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

/// Exact quotient a/b, or nullopt when b does not divide a.
std::optional<MultiPoly> divexact(const MultiPoly& a, const MultiPoly& b);

/// Exact quotient that must succeed; throws InexactDivision otherwise.
MultiPoly div_checked(const MultiPoly& a, const MultiPoly& b);

/// GCD via subresultant remainder sequences, recursing on the last variable.
/// Result is integer-primitive with positive grlex leading coefficient;
/// gcd(p, 0) is p normalized the same way.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

/// Substitution of parameter variables by polynomials ("x" cannot be bound).
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);

}  // namespace cycgm
