#include "cycgm/forms.hpp"

#include <algorithm>
#include <sstream>

namespace cycgm {

Eigenform make_eigenform(CoverFamily cover, int l, PolyInX numerator) {
    if (l < 1 || l > cover.d - 1) throw Error("y-power l must lie in 1..d-1");
    if (numerator.is_zero()) throw Error("eigenform with zero numerator");
    require_same_table(cover.table, numerator.table());
    return Eigenform{std::move(cover), l, std::move(numerator)};
}

namespace {

/// Generic multiplicity of (x - t) in U; strips factors while U(t)
/// vanishes identically.
int strip_linear(PolyInX& u, const RatFunc& t) {
    int k = 0;
    while (u.eval(t).is_zero()) {
        u = div_linear_exact(u, t);
        ++k;
    }
    return k;
}

// All positive divisors of |v| by trial division; v is expected tiny.
std::vector<Integer> divisors_of(const Integer& v) {
    Integer n = abs(v);
    std::vector<Integer> out;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    }
    return out;
}

}  // namespace

long ord_at_branch(const Eigenform& f, std::size_t i) {
    PolyInX u = f.numerator;
    const int k = strip_linear(u, f.cover.branch_value(i));
    return static_cast<long>(f.cover.d) * k + (f.cover.d - 1) - f.l;
}

long ord_at_infinity(const Eigenform& f) {
    const long deg = f.numerator.degree();
    return -static_cast<long>(f.cover.c) * deg - f.cover.c - 1 +
           static_cast<long>(f.cover.b) * f.l;
}

std::string DivisorPoint::str() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Branch: out << "branch[" << branch_index << "]"; break;
        case Kind::Infinity: out << "infinity#" << sheet; break;
        case Kind::ExtraRational:
            out << "fiber x=" << to_string(location) << " (" << sheets << " points)";
            break;
    }
    out << ": order " << order;
    return out.str();
}

Divisor divisor(const Eigenform& f) {
    const CoverFamily& cover = f.cover;
    Divisor div;

    PolyInX cofactor = f.numerator;
    for (std::size_t i = 0; i < cover.branch.size(); ++i) {
        const int k = strip_linear(cofactor, cover.branch_value(i));
        const long ord = static_cast<long>(cover.d) * k + (cover.d - 1) - f.l;
        if (ord != 0) {
            DivisorPoint p;
            p.kind = DivisorPoint::Kind::Branch;
            p.branch_index = i;
            p.order = ord;
            div.points.push_back(p);
            div.degree += ord;
        }
    }

    const long inf_ord = ord_at_infinity(f);
    if (inf_ord != 0) {
        for (int s = 1; s <= cover.a; ++s) {
            DivisorPoint p;
            p.kind = DivisorPoint::Kind::Infinity;
            p.sheet = static_cast<std::size_t>(s);
            p.order = inf_ord;
            div.points.push_back(p);
            div.degree += inf_ord;
        }
    }

    // Remaining zeros of U away from the branch points: rational-root
    // extraction only. Parameter-dependent or irrational zeros are refused.
    if (cofactor.degree() > 0) {
        for (const auto& c : cofactor.coeffs())
            if (!c.is_constant())
                throw UnresolvedZeros("numerator cofactor has parameter-dependent zeros: " +
                                      cofactor.str());
        Integer den_lcm = 1;
        for (const auto& c : cofactor.coeffs())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    c.constant_value().get_den().get_mpz_t());
        std::vector<Integer> ints;
        for (const auto& c : cofactor.coeffs()) {
            Rational v = c.constant_value() * Rational(den_lcm);
            ints.push_back(v.get_num());
        }
        // Root at zero first.
        {
            const RatFunc zero(cover.table);
            const int k = strip_linear(cofactor, zero);
            if (k > 0) {
                DivisorPoint p;
                p.kind = DivisorPoint::Kind::ExtraRational;
                p.location = Rational(0);
                p.sheets = cover.d;
                p.order = k;
                div.points.push_back(p);
                div.degree += static_cast<long>(k) * cover.d;
            }
        }
        while (ints.size() > 1 && ints.front() == 0) ints.erase(ints.begin());
        if (cofactor.degree() > 0) {
            std::vector<Rational> candidates;
            for (const auto& p : divisors_of(ints.front()))
                for (const auto& q : divisors_of(ints.back())) {
                    candidates.push_back(make_rational(p, q));
                    candidates.push_back(make_rational(-p, q));
                }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (const auto& root : candidates) {
                if (cofactor.degree() == 0) break;
                const int k = strip_linear(cofactor, RatFunc::constant(cover.table, root));
                if (k > 0) {
                    DivisorPoint p;
                    p.kind = DivisorPoint::Kind::ExtraRational;
                    p.location = root;
                    p.sheets = cover.d;
                    p.order = k;
                    div.points.push_back(p);
                    div.degree += static_cast<long>(k) * cover.d;
                }
            }
        }
        if (cofactor.degree() > 0)
            throw UnresolvedZeros("numerator cofactor has no rational roots: " + cofactor.str());
    }

    if (div.degree != 2 * cover.genus - 2)
        throw DegreeMismatch("divisor degree " + std::to_string(div.degree) + " != 2g-2 = " +
                             std::to_string(2 * cover.genus - 2));
    return div;
}

std::vector<long> stratum_signature(const Eigenform& f) {
    const Divisor div = divisor(f);
    std::vector<long> orders;
    for (const auto& p : div.points) {
        if (p.order < 0)
            throw NonHolomorphic("form has a pole at " + p.str() +
                                 "; stratum data requires a holomorphic form");
        const int copies = p.kind == DivisorPoint::Kind::ExtraRational ? p.sheets : 1;
        for (int s = 0; s < copies; ++s) orders.push_back(p.order);
    }
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

std::vector<Eigenform> holomorphic_basis(const CoverFamily& cover, int j) {
    const int dim = h10_dim(cover, j);
    const int l = ((-j) % cover.d + cover.d) % cover.d;
    std::vector<Eigenform> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    PolyInX monomial = PolyInX::constant(cover.table, RatFunc::constant(cover.table, Rational(1)));
    const PolyInX x = PolyInX::x(cover.table);
    for (int m = 0; m < dim; ++m) {
        basis.push_back(make_eigenform(cover, l, monomial));
        monomial = monomial * x;
    }
    return basis;
}

}  // namespace cycgm
