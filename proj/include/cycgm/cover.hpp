#pragma once

#include <variant>
#include <vector>

#include "cycgm/polyx.hpp"

namespace cycgm {

/// A branch value is an explicit rational or a symbolic parameter name.
using BranchValue = std::variant<Rational, std::string>;

inline bool is_symbolic(const BranchValue& v) { return std::holds_alternative<std::string>(v); }
std::string branch_value_str(const BranchValue& v);

/// The family of curves y^d = (x - t_1)...(x - t_n). Symbolic branch values
/// are treated as generic: pairwise distinct and distinct from every
/// explicit value.
struct CoverFamily {
    int d = 0;
    int n = 0;
    int a = 0;  // gcd(d, n); number of points at infinity
    int b = 0;  // n / a
    int c = 0;  // d / a
    long genus = 0;
    std::vector<BranchValue> branch;
    VarTablePtr table;

    RatFunc branch_value(std::size_t i) const;
    /// Index of the branch value equal to the named parameter, if any.
    std::optional<std::size_t> branch_index_of(std::string_view name) const;
    /// Product (x - t_1)...(x - t_n).
    PolyInX branch_poly() const;
};

/// ((n-1)(d-1) - (gcd(d,n)-1)) / 2.
long genus(int d, int n);

/// Builds the family; the table defaults to x plus the symbolic branch
/// parameters in order of appearance. A caller-provided table may carry
/// extra parameters (for substitution experiments).
CoverFamily make_cover(int d, int n, std::vector<BranchValue> branch, VarTablePtr table = nullptr);

struct H10 {
    int dim = 0;
    /// The dimension count is proven for l = d-1 in the regime n < d; other
    /// exponents use the same infinity-order bound, validated by the
    /// genus-sum identity.
    bool outside_proved_regime = false;
};

/// Dimension of the holomorphic part of the eigenspace with exponent j
/// (the deck transformation acts by zeta^j), counting monomials
/// x^m dx/y^l with l = (-j) mod d that are holomorphic everywhere.
H10 h10_info(const CoverFamily& cover, int j);
int h10_dim(const CoverFamily& cover, int j);

struct EigenspaceReport {
    int j = 0;
    int h10 = 0;
    int h01 = 0;
    bool pure = false;  // h10 == 0 or h01 == 0
};

EigenspaceReport eigenspace_report(const CoverFamily& cover, int j);

struct MonodromyReport {
    /// True when every exponent in the Galois orbit of j has a pure
    /// eigenspace; this is a sufficiency criterion, so false means
    /// "inconclusive", not "infinite".
    bool finite = false;
    std::vector<EigenspaceReport> orbit;  // ascending exponents
};

MonodromyReport finite_monodromy_check(const CoverFamily& cover, int j);

}  // namespace cycgm
