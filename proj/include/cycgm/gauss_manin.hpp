#pragma once

#include "cycgm/cover.hpp"
#include "cycgm/matrix.hpp"
#include "cycgm/polyx.hpp"

namespace cycgm {

/// Coefficients of the three terms of the connection formula. The standard
/// values are (-1, 1/d, (d-1)/d); anything else is a deliberate fault used
/// by the self-test harness to prove the checks can fail.
struct GmWeights {
    Rational second_term;
    Rational first_term;
    Rational transport;

    static GmWeights standard(int d) {
        return {Rational(-1), make_rational(1, d), make_rational(d - 1, d)};
    }
    bool is_standard(int d) const {
        const GmWeights s = standard(d);
        return second_term == s.second_term && first_term == s.first_term &&
               transport == s.transport;
    }
};

/// Exact first difference quotient (P'(x) - P'(t))/(x - t).
PolyInX first_dq(const PolyInX& P, const RatFunc& t);
/// Exact second difference quotient (P(x) - P(t) - P'(t)(x - t))/(x - t)^2.
PolyInX second_dq(const PolyInX& P, const RatFunc& t);

/// The connection on the polynomial trivialization U(x) dx/y^(d-1).
/// Acting on a section with parameter-dependent coefficients it is the full
/// covariant derivative: coefficient-wise d/dt_k plus the connection form.
class GaussManin {
public:
    explicit GaussManin(CoverFamily cover);
    GaussManin(CoverFamily cover, GmWeights weights);

    const CoverFamily& cover() const { return cover_; }
    const PolyInX& P() const { return P_; }
    const PolyInX& Pprime() const { return Pprime_; }
    /// P'(t_k); rejects non-symbolic directions and vanishing derivative.
    RatFunc Pprime_at(std::size_t k) const;

    /// Covariant derivative of a section in the direction of branch k.
    PolyInX derivative(const PolyInX& U, std::size_t k) const;

    /// (n-1)x(n-1) matrix; column i holds the coordinates of the derivative
    /// of x^i in the basis 1, x, ..., x^(n-2).
    RfMatrix matrix(std::size_t k) const;

    /// dB_k2/dt_k1 - dB_k1/dt_k2 + [B_k1, B_k2]; identically zero for a
    /// flat connection.
    RfMatrix curvature(std::size_t k1, std::size_t k2) const;

    /// Coordinates of a section (coefficients padded to length n-1).
    std::vector<RatFunc> coordinates(const PolyInX& U) const;

private:
    std::size_t direction_var(std::size_t k) const;
    CoverFamily cover_;
    GmWeights weights_;
    PolyInX P_;
    PolyInX Pprime_;
};

/// Free-function forms with the standard weights.
PolyInX first_dq(const CoverFamily& cover, std::size_t k);
PolyInX second_dq(const CoverFamily& cover, std::size_t k);
PolyInX gm_derivative(const CoverFamily& cover, std::size_t k, const PolyInX& U);

struct ConnectionMatrix {
    CoverFamily cover;
    std::size_t wrt = 0;
    RfMatrix entries;
};

ConnectionMatrix connection_matrix(const CoverFamily& cover, std::size_t k);
RfMatrix curvature(const CoverFamily& cover, std::size_t k1, std::size_t k2);

}  // namespace cycgm
