#include "cycgm/gauss_manin.hpp"

namespace cycgm {

PolyInX first_dq(const PolyInX& P, const RatFunc& t) {
    const PolyInX Pp = P.derivative_x();
    const PolyInX num = Pp - PolyInX::constant(P.table(), Pp.eval(t));
    return div_linear_exact(num, t);
}

PolyInX second_dq(const PolyInX& P, const RatFunc& t) {
    const RatFunc pt = P.eval(t);
    const RatFunc ppt = P.derivative_x().eval(t);
    PolyInX num = P - PolyInX::constant(P.table(), pt);
    num -= PolyInX::from_coeffs(P.table(), {-ppt * t, ppt});  // P'(t)(x - t)
    return div_linear_exact(div_linear_exact(num, t), t);
}

GaussManin::GaussManin(CoverFamily cover) : GaussManin(std::move(cover), GmWeights{}) {
    weights_ = GmWeights::standard(cover_.d);
}

GaussManin::GaussManin(CoverFamily cover, GmWeights weights)
    : cover_(std::move(cover)),
      weights_(std::move(weights)),
      P_(cover_.branch_poly()),
      Pprime_(P_.derivative_x()) {}

std::size_t GaussManin::direction_var(std::size_t k) const {
    const BranchValue& v = cover_.branch.at(k);
    if (!is_symbolic(v))
        throw DirectionError("branch value " + branch_value_str(v) +
                             " is not a symbolic parameter; cannot differentiate along it");
    return *cover_.table->index_of(std::get<std::string>(v));
}

RatFunc GaussManin::Pprime_at(std::size_t k) const {
    const RatFunc value = Pprime_.eval(cover_.branch_value(k));
    if (value.is_zero())
        throw DistinctnessError("P'(t_k) vanishes identically; branch values are not distinct");
    return value;
}

PolyInX GaussManin::derivative(const PolyInX& U, std::size_t k) const {
    if (U.degree() > cover_.n - 2)
        throw Error("section degree " + std::to_string(U.degree()) + " exceeds n-2");
    const std::size_t var = direction_var(k);
    const RatFunc t = cover_.branch_value(k);
    const RatFunc ratio = U.eval(t) / Pprime_at(k);
    const VarTablePtr& table = cover_.table;

    PolyInX result = U.derivative_param(var);
    if (!ratio.is_zero()) {
        result += second_dq(P_, t) * (ratio * RatFunc::constant(table, weights_.second_term));
        result += first_dq(P_, t) * (ratio * RatFunc::constant(table, weights_.first_term));
    }
    const PolyInX shifted = U - PolyInX::constant(table, U.eval(t));
    result += div_linear_exact(shifted, t) * RatFunc::constant(table, weights_.transport);
    return result;
}

std::vector<RatFunc> GaussManin::coordinates(const PolyInX& U) const {
    if (U.degree() > cover_.n - 2) throw Error("section degree exceeds n-2");
    std::vector<RatFunc> coords;
    coords.reserve(static_cast<std::size_t>(cover_.n - 1));
    for (int i = 0; i < cover_.n - 1; ++i) coords.push_back(U.coeff(static_cast<std::size_t>(i)));
    return coords;
}

RfMatrix GaussManin::matrix(std::size_t k) const {
    const std::size_t dim = static_cast<std::size_t>(cover_.n - 1);
    RfMatrix m(cover_.table, dim, dim);
    PolyInX monomial = PolyInX::constant(cover_.table, RatFunc::constant(cover_.table, Rational(1)));
    const PolyInX x = PolyInX::x(cover_.table);
    for (std::size_t j = 0; j < dim; ++j) {
        const PolyInX column = derivative(monomial, k);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = column.coeff(i);
        monomial = monomial * x;
    }
    return m;
}

RfMatrix GaussManin::curvature(std::size_t k1, std::size_t k2) const {
    const std::size_t v1 = direction_var(k1);
    const std::size_t v2 = direction_var(k2);
    const std::size_t dim = static_cast<std::size_t>(cover_.n - 1);
    if (k1 == k2) return RfMatrix(cover_.table, dim, dim);
    const RfMatrix b1 = matrix(k1);
    const RfMatrix b2 = matrix(k2);
    return b2.derivative(v1) - b1.derivative(v2) + b1 * b2 - b2 * b1;
}

PolyInX first_dq(const CoverFamily& cover, std::size_t k) {
    return first_dq(cover.branch_poly(), cover.branch_value(k));
}

PolyInX second_dq(const CoverFamily& cover, std::size_t k) {
    return second_dq(cover.branch_poly(), cover.branch_value(k));
}

PolyInX gm_derivative(const CoverFamily& cover, std::size_t k, const PolyInX& U) {
    return GaussManin(cover).derivative(U, k);
}

ConnectionMatrix connection_matrix(const CoverFamily& cover, std::size_t k) {
    GaussManin gm(cover);
    return ConnectionMatrix{cover, k, gm.matrix(k)};
}

RfMatrix curvature(const CoverFamily& cover, std::size_t k1, std::size_t k2) {
    return GaussManin(cover).curvature(k1, k2);
}

}  // namespace cycgm
