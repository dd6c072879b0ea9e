#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycgm/matrix.hpp"
#include "cycgm/parser.hpp"

using namespace cycgm;

namespace {

MultiPoly P(const VarTablePtr& t, const std::string& src) { return parse_poly(src, t); }

RatFunc RF(const VarTablePtr& t, const std::string& num, const std::string& den = "1") {
    return RatFunc::make(parse_poly(num, t), parse_poly(den, t));
}

// Independent determinant oracle: first-row cofactor expansion.
RatFunc det_cofactor(const RfMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    RatFunc acc(m.table());
    for (std::size_t j = 0; j < n; ++j) {
        RfMatrix minor(m.table(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cc++) = m.at(i, k);
            }
        }
        RatFunc term = m.at(0, j) * det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::mt19937_64 rng(20240817);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return make_rational(num(rng), den(rng));
}

MultiPoly random_poly(const VarTablePtr& t, int max_terms = 5, std::uint32_t max_exp = 3) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    MultiPoly p(t);
    const int k = terms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m(t->size());
        for (auto& e : m) e = exp(rng);
        p += MultiPoly::monomial(t, m, random_rational());
    }
    return p;
}

MultiPoly random_nonzero_poly(const VarTablePtr& t, int max_terms = 5, std::uint32_t max_exp = 3) {
    MultiPoly p = random_poly(t, max_terms, max_exp);
    while (p.is_zero()) p = random_poly(t, max_terms, max_exp);
    return p;
}

}  // namespace

TEST_CASE("rational invariants") {
    const Rational r = make_rational(-6, 4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(rational_from_string("-91/216") == make_rational(-91, 216));
    CHECK_THROWS_AS(make_rational(1, 0), ZeroDenominator);
}

TEST_CASE("poly_mul examples") {
    const auto t = make_table({"u"});
    CHECK(P(t, "(x - u)*(x + u)") == P(t, "x^2 - u^2"));
    CHECK(P(t, "x*(x - 1)*(x + 1)*(x - u)") == P(t, "x^4 - u*x^3 - x^2 + u*x"));
    CHECK((P(t, "x^2 + u") * MultiPoly(t)).is_zero());
    const auto s = make_table({"v"});
    CHECK_THROWS_AS(P(t, "x") * P(s, "x"), VarTableMismatch);
}

TEST_CASE("poly degrees are additive on nonzero inputs") {
    const auto t = make_table({"u", "v"});
    for (int i = 0; i < 50; ++i) {
        const MultiPoly a = random_nonzero_poly(t);
        const MultiPoly b = random_nonzero_poly(t);
        CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
    }
}

TEST_CASE("poly_gcd examples") {
    const auto t = make_table({"u"});
    CHECK(gcd(P(t, "x^2 - u^2"), P(t, "x - u")) == P(t, "x - u"));

    const MultiPoly a = P(t, "6*u*(1 - u^2)");
    const MultiPoly b = P(t, "36*u*(1 - u^2)^2");
    const MultiPoly g = gcd(a, b);
    // Integer-primitive, positive-leading-coefficient normalization.
    CHECK(g == P(t, "u^3 - u"));
    CHECK(divexact(a, g).has_value());
    CHECK(divexact(b, g).has_value());
    CHECK(*divexact(a, g) * g == a);
    CHECK(*divexact(b, g) * g == b);

    CHECK(gcd(P(t, "x^2 + u"), P(t, "1")) == P(t, "1"));
    CHECK(gcd(P(t, "6*u - 6*u^3"), MultiPoly(t)) == P(t, "u^3 - u"));
}

TEST_CASE("gcd divides both arguments (randomized)") {
    const auto t = make_table({"u", "v"});
    for (int i = 0; i < 30; ++i) {
        const MultiPoly a = random_nonzero_poly(t, 3, 2);
        const MultiPoly b = random_nonzero_poly(t, 3, 2);
        const MultiPoly common = random_nonzero_poly(t, 2, 2);
        const MultiPoly g = gcd(a * common, b * common);
        CHECK(divexact(a * common, g).has_value());
        CHECK(divexact(b * common, g).has_value());
        // common divides the gcd of its multiples
        CHECK(divexact(g, gcd(common, g)).has_value());
        CHECK(gcd(common, g) == common.primitive_sign_normalized());
    }
}

TEST_CASE("ratfunc_reduce examples") {
    const auto t = make_table({"u"});
    CHECK(RF(t, "u^2 - 1", "u - 1") == RF(t, "u + 1"));

    const RatFunc r = RF(t, "35*u*(u^2 - 1)", "36*u*(1 - u^2)^2");
    CHECK(r == RF(t, "-35", "36*(1 - u^2)"));
    CHECK(r.num() == P(t, "35/36"));
    CHECK(r.den() == P(t, "u^2 - 1"));

    const RatFunc zero = RF(t, "0", "x^2 - u");
    CHECK(zero.is_zero());
    CHECK(zero.den().is_one());

    CHECK_THROWS_AS(RF(t, "1", "0"), ZeroDenominator);
}

TEST_CASE("ratfunc reduction is idempotent and canonical (randomized)") {
    const auto t = make_table({"u", "v"});
    for (int i = 0; i < 60; ++i) {
        const MultiPoly num = random_poly(t, 4, 2);
        const MultiPoly den = random_nonzero_poly(t, 3, 2);
        const RatFunc r = RatFunc::make(num, den);
        const RatFunc again = RatFunc::make(r.num(), r.den());
        CHECK(r == again);
        CHECK(gcd(r.num(), r.den()).is_constant());
        if (!r.den().is_constant()) {
            CHECK(r.den().content() == 1);
            CHECK(r.den().leading_coeff() > 0);
        } else {
            CHECK(r.den().is_one());
        }
        // value preserved: r.num * den == num * r.den
        CHECK(r.num() * den == num * r.den());
    }
}

TEST_CASE("poly_divexact_linear examples") {
    const auto t = make_table({"u"});
    const RatFunc u = RatFunc::variable(t, "u");
    CHECK(div_linear_exact(parse_poly_in_x("x^2 - u^2", t), u) == parse_poly_in_x("x + u", t));
    CHECK(div_linear_exact(parse_poly_in_x("x^3 - x - u^3 + u", t), u) ==
          parse_poly_in_x("x^2 + u*x + u^2 - 1", t));
    CHECK_THROWS_AS(div_linear_exact(parse_poly_in_x("x^2 + 1", t), u), InexactDivision);
    try {
        div_linear_exact(parse_poly_in_x("x^2 + 1", t), u);
    } catch (const InexactDivision& e) {
        CHECK(std::string(e.what()).find("u^2 + 1") != std::string::npos);
    }
}

TEST_CASE("multiply-back property of synthetic division (randomized)") {
    const auto t = make_table({"u", "v"});
    for (int i = 0; i < 40; ++i) {
        std::vector<RatFunc> coeffs;
        std::uniform_int_distribution<int> deg(0, 4);
        const int d = deg(rng);
        for (int k = 0; k <= d; ++k)
            coeffs.push_back(RatFunc::from_poly(
                random_poly(t, 2, 2).coeff_of(VarTable::x_index(), 0)));
        const PolyInX q = PolyInX::from_coeffs(t, coeffs);
        const RatFunc r = RatFunc::from_poly(random_poly(t, 2, 1).coeff_of(VarTable::x_index(), 0));
        const PolyInX p = q.mul_linear(r);
        if (p.is_zero()) continue;
        CHECK(div_linear_exact(p, r) == q);
    }
}

TEST_CASE("substitute examples") {
    const auto t = make_table({"t1", "t2", "t3", "t4", "u"});
    const MultiPoly generic = P(t, "(x - t1)*(x - t2)*(x - t3)*(x - t4)");
    const std::map<std::string, MultiPoly> bind = {
        {"t1", P(t, "0")}, {"t2", P(t, "1")}, {"t3", P(t, "-1")}, {"t4", P(t, "u")}};
    CHECK(substitute(generic, bind) == P(t, "x^4 - u*x^3 - x^2 + u*x"));

    CHECK(substitute(generic, {}) == generic);

    const RatFunc f = RF(t, "1", "1 - u^2");
    CHECK_THROWS_AS(substitute(f, {{"u", RatFunc::constant(t, Rational(1))}}), ZeroDenominator);
}

TEST_CASE("substitute commutes with products (randomized)") {
    const auto t = make_table({"u", "v"});
    for (int i = 0; i < 30; ++i) {
        const MultiPoly p = random_poly(t, 3, 2);
        const MultiPoly q = random_poly(t, 3, 2);
        const std::map<std::string, MultiPoly> bind = {
            {"u", random_poly(t, 2, 1)}, {"v", MultiPoly::constant(t, random_rational())}};
        CHECK(substitute(p * q, bind) == substitute(p, bind) * substitute(q, bind));
        CHECK(substitute(p + q, bind) == substitute(p, bind) + substitute(q, bind));
    }
}

TEST_CASE("det examples") {
    const auto t = make_table({"u"});
    CHECK(det(RfMatrix::identity(t, 3)) == RatFunc::constant(t, Rational(1)));

    // Columns (0,0,1), (u^2,5u,2u^2)/(6u(1-u^2)), (7+u^2,40u,24-8u^2)/(6(1-u^2)).
    const MultiPoly d1 = P(t, "6*u*(1 - u^2)");
    const MultiPoly d2 = P(t, "6*(1 - u^2)");
    std::vector<std::vector<RatFunc>> cols = {
        {RF(t, "0"), RF(t, "0"), RF(t, "1")},
        {RatFunc::make(P(t, "u^2"), d1), RatFunc::make(P(t, "5*u"), d1),
         RatFunc::make(P(t, "2*u^2"), d1)},
        {RatFunc::make(P(t, "7 + u^2"), d2), RatFunc::make(P(t, "40*u"), d2),
         RatFunc::make(P(t, "24 - 8*u^2"), d2)},
    };
    const RfMatrix m = RfMatrix::from_columns(t, cols);
    const RatFunc expected = RF(t, "-35", "36*(1 - u^2)");
    CHECK(det(m) == expected);
    CHECK(det_cofactor(m) == expected);

    RfMatrix rect(t, 2, 3);
    CHECK_THROWS_AS(det(rect), Error);
}

TEST_CASE("det is alternating and matches the cofactor oracle (randomized)") {
    // Denominators come from a pool of small factors, the shape the
    // connection matrices actually produce.
    const auto t = make_table({"u", "v"});
    const std::vector<MultiPoly> pool = {P(t, "1"),     P(t, "u"),     P(t, "v"),
                                         P(t, "u - 1"), P(t, "u - v"), P(t, "1 - u^2")};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t n : {3u, 4u}) {
        for (int i = 0; i < 8; ++i) {
            RfMatrix m(t, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    m.at(r, c) =
                        RatFunc::make(random_poly(t, 3, 2), pool[pick(rng)] * pool[pick(rng)]);
            const RatFunc d = det(m);
            CHECK(d == det_cofactor(m));

            RfMatrix swapped = m;
            for (std::size_t r = 0; r < n; ++r) std::swap(swapped.at(r, 0), swapped.at(r, 1));
            CHECK(det(swapped) == -d);

            RfMatrix repeated = m;
            for (std::size_t r = 0; r < n; ++r) repeated.at(r, 1) = repeated.at(r, 0);
            CHECK(det(repeated).is_zero());
        }
    }
}

TEST_CASE("det is linear in a column (randomized)") {
    const auto t = make_table({"u"});
    for (int i = 0; i < 10; ++i) {
        RfMatrix m(t, 3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = RatFunc::from_poly(random_poly(t, 2, 2));
        const RatFunc s = RatFunc::make(random_nonzero_poly(t, 2, 1), random_nonzero_poly(t, 2, 1));
        RfMatrix scaled = m;
        for (std::size_t r = 0; r < 3; ++r) scaled.at(r, 2) = scaled.at(r, 2) * s;
        CHECK(det(scaled) == s * det(m));
    }
}

TEST_CASE("canonical printing") {
    const auto t = make_table({"u"});
    CHECK(P(t, "x^2 - u^2").str() == "x^2 - u^2");
    CHECK(MultiPoly(t).str() == "0");
    CHECK(RF(t, "1", "6*u*(1 - u^2)").str() == "(-1/6)/(u^3 - u)");
    CHECK(RF(t, "u + 1").str() == "u + 1");
    CHECK(P(t, "-1/6*u^3 + u").str() == "-1/6*u^3 + u");
}
