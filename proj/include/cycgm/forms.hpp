#pragma once

#include "cycgm/cover.hpp"
#include "cycgm/polyx.hpp"

namespace cycgm {

/// The eigenform U(x) dx/y^l on a cover family; the deck transformation
/// acts on it by zeta^j with j = (-l) mod d.
struct Eigenform {
    CoverFamily cover;
    int l = 0;  // 1..d-1
    PolyInX numerator;

    int eigenvalue_exponent() const { return (cover.d - l % cover.d) % cover.d; }
};

Eigenform make_eigenform(CoverFamily cover, int l, PolyInX numerator);

/// Order of vanishing at the ramification point over x = t_i:
/// d*k + (d-1) - l where k is the generic multiplicity of (x - t_i) in U.
long ord_at_branch(const Eigenform& f, std::size_t i);

/// Order at each of the a points at infinity: -c*deg(U) - c - 1 + b*l.
long ord_at_infinity(const Eigenform& f);

struct DivisorPoint {
    enum class Kind { Branch, Infinity, ExtraRational };
    Kind kind;
    std::size_t branch_index = 0;  // Branch
    std::size_t sheet = 0;         // Infinity: 1..a
    Rational location;             // ExtraRational: the x-coordinate
    int sheets = 1;                // ExtraRational: d preimages, all of this order
    long order = 0;

    std::string str() const;
};

/// Zero/pole divisor; entries with order 0 are omitted. Extra rational
/// points count with their d preimages, so degree is always 2g - 2.
struct Divisor {
    std::vector<DivisorPoint> points;
    long degree = 0;
};

Divisor divisor(const Eigenform& f);

/// Positive zero orders sorted descending; requires a holomorphic form.
std::vector<long> stratum_signature(const Eigenform& f);

/// Monomial basis x^m dx/y^l, l = (-j) mod d, m = 0..h10-1.
std::vector<Eigenform> holomorphic_basis(const CoverFamily& cover, int j);

}  // namespace cycgm
