#include <doctest.h>

#include <yangian/gamma.hpp>

using namespace yangian;

namespace {

// independent oracle: exact quadrature of int_0^1 t^(a-1)(1-t)^(b-1) dt
// for positive integers a, b via binomial expansion
Rational beta_quadrature(long long a, long long b) {
    Rational r(0);
    for (long long k = 0; k <= b - 1; ++k) {
        Rational term = binomial_coeff(b - 1, k) * Rational((k % 2) ? -1 : 1) / Rational(a + k);
        r += term;
    }
    return r;
}

const Param W = Param::aux();
const Param U = Param::u();
const Param V = Param::v();

}  // namespace

TEST_CASE("beta at integer points against quadrature oracle") {
    std::map<Param, Rational> empty;
    // frozen from the oracle
    CHECK(beta_quadrature(3, 2) == Rational(1, 12));
    CHECK(beta(AffineForm(Rational(3)), AffineForm(Rational(2))).evaluate(empty)->mantissa == Rational(1, 12));
    CHECK(beta(AffineForm(Rational(1)), AffineForm(Rational(1))).evaluate(empty)->mantissa == Rational(1));
    for (long long a = 1; a <= 6; ++a)
        for (long long b = 1; b <= 6; ++b) {
            auto got = beta(AffineForm(Rational(a)), AffineForm(Rational(b))).evaluate(empty);
            REQUIRE(got.has_value());
            CHECK(got->mantissa == beta_quadrature(a, b));
            CHECK(got->mantissa == factorial(a - 1) * factorial(b - 1) / factorial(a + b - 1));
            CHECK(got->sqrt_pi_power == 0);
        }
}

TEST_CASE("beta with symbolic arguments stays symbolic") {
    GammaProduct g = beta(AffineForm(W), AffineForm(V) + AffineForm(Rational(1)));
    REQUIRE(g.gamma_factors().size() == 3);
    CHECK(g.gamma_factors().at(AffineForm(W)) == 1);
    CHECK(g.gamma_factors().at(AffineForm(V) + AffineForm(Rational(1))) == 1);
    CHECK(g.gamma_factors().at(AffineForm(W) + AffineForm(V) + AffineForm(Rational(1))) == -1);
    // no exact value at a non-special point
    std::map<Param, Rational> asg{{W, Rational(1, 3)}, {V, Rational(0)}};
    CHECK(!g.substitute(asg).evaluate({}).has_value());
}

TEST_CASE("half-integer evaluation carries sqrt(pi) powers") {
    std::map<Param, Rational> empty;
    auto b = beta(AffineForm(Rational(1, 2)), AffineForm(Rational(1, 2))).evaluate(empty);
    REQUIRE(b.has_value());
    CHECK(b->mantissa == Rational(1));
    CHECK(b->sqrt_pi_power == 2);  // B(1/2,1/2) = pi
    auto c = beta(AffineForm(Rational(3, 2)), AffineForm(Rational(1))).evaluate(empty);
    REQUIRE(c.has_value());
    CHECK(c->mantissa == Rational(2, 3));
    CHECK(c->sqrt_pi_power == 0);
    auto d = gamma_of(AffineForm(Rational(-1, 2))).evaluate(empty);
    REQUIRE(d.has_value());
    CHECK(d->mantissa == Rational(-2));  // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(d->sqrt_pi_power == 1);
}

TEST_CASE("recursion canonicalization Gamma(z+1) = z Gamma(z)") {
    GammaProduct lhs = gamma_of(AffineForm(W) + AffineForm(Rational(1)));
    GammaProduct rhs = gamma_of(AffineForm(W));
    rhs.mul_affine_power(AffineForm(W), 1);
    CHECK(GammaProduct::equal_canonical(lhs, rhs));
    // idempotent
    CHECK(lhs.canonicalized() == lhs.canonicalized().canonicalized());

    // reflection consistency: Gamma(a)/Gamma(a) cancels
    GammaProduct ratio;
    AffineForm a = AffineForm(W) + AffineForm(Rational(5, 2));
    ratio.mul_gamma(a, 1);
    ratio.mul_gamma(a, -1);
    CHECK(ratio.is_trivial());
}

TEST_CASE("leading Laurent data at u -> 0") {
    // Gamma(1+u)/Gamma(1-u): order 0, coefficient 1
    GammaProduct g;
    g.mul_gamma(AffineForm(U) + AffineForm(Rational(1)), 1);
    g.mul_gamma(AffineForm(Rational(1)) - AffineForm(U), -1);
    LaurentLeading l = g.leading_at({}, U);
    CHECK(l.order == 0);
    CHECK(l.coeff == Rational(1));

    // the (pil1)-type product Gamma(u)^2 Gamma(-2L-u)/Gamma(-2L+u)
    Param L = Param::ell(1, 1);  // stands for 2L
    GammaProduct pi;
    pi.mul_gamma(AffineForm(U), 2);
    pi.mul_gamma(-AffineForm(L) - AffineForm(U), 1);
    pi.mul_gamma(-AffineForm(L) + AffineForm(U), -1);

    // generic (non-integer) value: +u^-2
    LaurentLeading generic = pi.leading_at({{L, Rational(1, 2)}}, U);
    CHECK(generic.order == -2);
    CHECK(generic.coeff == Rational(1));

    // non-negative integer value: sign flips
    LaurentLeading flipped = pi.leading_at({{L, Rational(3)}}, U);
    CHECK(flipped.order == -2);
    CHECK(flipped.coeff == Rational(-1));
    LaurentLeading zerocase = pi.leading_at({{L, Rational(0)}}, U);
    CHECK(zerocase.order == -2);
    CHECK(zerocase.coeff == Rational(-1));

    // invariance under recursion canonicalization
    LaurentLeading canon = pi.canonicalized().leading_at({{L, Rational(3)}}, U);
    CHECK(canon == flipped);
    CHECK(pi.canonicalized().leading_at({{L, Rational(1, 2)}}, U) == generic);
}

TEST_CASE("leading_at error paths") {
    GammaProduct g;
    g.mul_gamma(AffineForm(W) + AffineForm(U), 1);
    CHECK_THROWS_AS(g.leading_at({}, U), NonAffineResidual);

    GammaProduct h;
    h.mul_gamma(AffineForm(Rational(0)), 1);  // identically Gamma(0)
    CHECK_THROWS_AS(h.leading_at({}, U), NonGenericResidual);

    GammaProduct s;
    s.mul_gamma(AffineForm(Rational(1, 3)) + AffineForm(U), 1);  // Gamma(1/3) has no exact value
    CHECK_THROWS_AS(s.leading_at({}, U), NonRationalLeading);
}

TEST_CASE("prefactor affine zeros shift the order") {
    GammaProduct g(Rational(3));
    g.mul_affine_power(AffineForm::term(U, Rational(2)), 1);                       // 2u
    g.mul_affine_power(AffineForm(U) + AffineForm(Rational(1)), -1);               // 1/(u+1)
    LaurentLeading l = g.leading_at({}, U);
    CHECK(l.order == 1);
    CHECK(l.coeff == Rational(6));
}
