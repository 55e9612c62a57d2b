#include <doctest.h>

#include <iostream>

#include <yangian/hwfunction.hpp>
#include <yangian/intertwiner.hpp>

using namespace yangian;

namespace {

AffineForm ell(int I, int a) { return AffineForm(Param::ell(I, a)); }

ParamArray applied_sigma12(ParamArray p, int i) {
    std::swap(p.at(1, i), p.at(2, i));
    return p;
}

}  // namespace

TEST_CASE("determinant factors with matching slots are unit constants") {
    // n = 2: f(1,1) = det(x^{1,2}, x^{2,1}) = 1, f(2,2) = det(x^{1,1}, x^{2,2}) = -1
    CHECK(matching_slot_sign(2, 1) == 1);
    CHECK(matching_slot_sign(2, 2) == -1);
    // n = 3, 4: all matching-slot factors are units
    for (int n = 3; n <= 4; ++n)
        for (int j = 1; j <= n; ++j) CHECK(std::abs(matching_slot_sign(n, j)) == 1);
}

TEST_CASE("det_normalize merges, cancels and strips matching slots") {
    ParamArray p = ParamArray::symbolic(3, 2);
    HWFunction h = HWFunction::one(p);
    AffineForm a = ell(1, 1), b = ell(1, 2);
    h.mul_factor(2, 1, a);
    h.mul_factor(2, 1, b);  // merged exponent a + b
    CHECK(h.factors.at({2, 1}) == a + b);
    h.mul_factor(2, 1, -(a + b));  // cancels entirely
    CHECK(h.state_is_one());

    h.mul_factor(2, 2, a);  // matching slots -> unit with tracked sign
    HWFunction normalized = det_normalize(h);
    CHECK(normalized.state_is_one());
    // idempotent
    HWFunction again = det_normalize(normalized);
    CHECK(again.coeff == normalized.coeff);
}

TEST_CASE("elementary beta steps reproduce the displayed transformations") {
    ParamArray p = ParamArray::symbolic(3, 2);
    AffineForm v = ell(1, 3), w = Param::aux();

    // S1 step on f(k+1, j)^v
    HWFunction h = HWFunction::one(p);
    h.mul_factor(2, 1, v);
    HWFunction r = beta_step_S1(1, w, h);
    CHECK(r.factors.at({1, 1}) == -w);
    CHECK(r.factors.at({2, 1}) == w + v);
    CHECK(GammaProduct::equal_canonical(r.coeff, beta(w, v + AffineForm(Rational(1)))));

    // S2 step on f(i, k)^v
    HWFunction h2 = HWFunction::one(p);
    h2.mul_factor(3, 1, v);
    HWFunction r2 = beta_step_S2(1, w, h2);
    CHECK(r2.factors.at({3, 2}) == -w);
    CHECK(r2.factors.at({3, 1}) == w + v);

    // inert states are rejected
    CHECK_THROWS_AS(beta_step_S1(1, w, HWFunction::one(p)), NotBetaAdmissible);
    CHECK_THROWS_AS(beta_step_S2(2, w, h2), NotBetaAdmissible);
}

TEST_CASE("rank-two composites give the Euler-beta permutation coefficients") {
    ParamArray p = ParamArray::symbolic(2, 2);
    // swap of the position-2 parameters
    SequenceResult r2 = run_one_to_one(sigma12_seq(2, 2), p);
    GammaProduct pi2 = beta(ell(2, 2) - ell(1, 2), ell(1, 1) - ell(2, 2) + AffineForm(Rational(1)));
    CHECK(GammaProduct::equal_canonical(r2.coeff, pi2));
    CHECK(r2.final_state.params == applied_sigma12(p, 2));

    // swap of the position-1 parameters
    SequenceResult r1 = run_one_to_one(sigma12_seq(2, 1), p);
    GammaProduct pi1 = beta(ell(2, 1) - ell(1, 1), ell(1, 1) - ell(2, 2) + AffineForm(Rational(1)));
    CHECK(GammaProduct::equal_canonical(r1.coeff, pi1));
    CHECK(r1.final_state.params == applied_sigma12(p, 1));

    // the full swap composes the two, second evaluated on the permuted array;
    // total: Gamma(2l22-2l12) Gamma(2l21-2l11) Gamma(2l11-2l22+1) / Gamma(2l21-2l12+1)
    SequenceResult rfull_a = run_one_to_one(sigma12_seq(2, 1), r2.final_state.params);
    GammaProduct total = r2.coeff.times(rfull_a.coeff);
    GammaProduct expect;
    expect.mul_gamma(ell(2, 2) - ell(1, 2), 1);
    expect.mul_gamma(ell(2, 1) - ell(1, 1), 1);
    expect.mul_gamma(ell(1, 1) - ell(2, 2) + AffineForm(Rational(1)), 1);
    expect.mul_gamma(ell(2, 1) - ell(1, 2) + AffineForm(Rational(1)), -1);
    CHECK(GammaProduct::equal_canonical(total, expect));

    // route independence: the other composition order gives the same product
    SequenceResult q1 = run_one_to_one(sigma12_seq(2, 1), p);
    SequenceResult q2 = run_one_to_one(sigma12_seq(2, 2), q1.final_state.params);
    CHECK(GammaProduct::equal_canonical(q1.coeff.times(q2.coeff), expect));
}

TEST_CASE("highest-weight functions from single permutation steps") {
    // phi = f(n,1)^(2l^2_n - 2l^1_1) after one between-site step on the
    // pre-permuted array
    for (int n = 2; n <= 3; ++n) {
        ParamArray p = ParamArray::symbolic(n, 2);
        std::swap(p.at(1, 1), p.at(2, n));  // start from the permuted array
        SequenceResult r = run_from_one({{StepKind::S12}}, p);
        REQUIRE(r.final_state.factors.size() == 1);
        CHECK(r.final_state.factors.at({n, 1}) == ell(2, n) - ell(1, 1));
    }

    // two-step composite: exponents 2l^1_1 - 2l^1_2 and 2l^2_n - 2l^1_1
    {
        int n = 3;
        ParamArray p = ParamArray::symbolic(n, 2);
        // start from the array with (pos 2, pos 1; site-2 pos n) holding
        // (2l^1_1, 2l^2_n; 2l^1_2)
        p.at(1, 2) = ell(1, 1);
        p.at(1, 1) = ell(2, n);
        p.at(2, n) = ell(1, 2);
        SequenceResult r = run_from_one({{StepKind::S12}, {StepKind::S1, n - 1}}, p);
        REQUIRE(r.final_state.factors.size() == 2);
        CHECK(r.final_state.factors.at({n - 1, 1}) == ell(1, 1) - ell(1, 2));
        CHECK(r.final_state.factors.at({n, 1}) == ell(2, n) - ell(1, 1));
    }
}

TEST_CASE("single-pair permutation blocks match their closed forms") {
    for (int n : {3, 4}) {
        ParamArray p = ParamArray::symbolic(n, 2);
        // i = 1 (respectively i = n) degenerates into the 1-to-1 position swap;
        // the determinant-power form holds for the interior positions
        for (int i = 2; i <= n - 1; ++i) {
            SequenceResult r = run_from_one(block_seq_i1(n, i), p);
            // final state f(i,1)^(Lbar_i - La)
            REQUIRE(r.final_state.factors.size() == 1);
            CHECK(r.final_state.factors.at({i, 1}) == p.at_slot(1, i) - p.at(2, n));
            CHECK(GammaProduct::equal_canonical(r.coeff, block_i1_closed_form(n, i, p)));
            // array: slot-i value swapped with (2, position n)
            ParamArray expect = p;
            std::swap(expect.at_slot(1, i), expect.at(2, n));
            CHECK(r.final_state.params == expect);
        }
        for (int i = 2; i <= n - 1; ++i) {
            SequenceResult r = run_from_one(block_seq_i2(n, i), p);
            REQUIRE(r.final_state.factors.size() == 1);
            CHECK(r.final_state.factors.at({n, i}) == p.at(1, 1) - p.at_slot(2, i));
            CHECK(GammaProduct::equal_canonical(r.coeff, block_i2_closed_form(n, i, p)));
            ParamArray expect = p;
            std::swap(expect.at(1, 1), expect.at_slot(2, i));
            CHECK(r.final_state.params == expect);
        }
        // degenerate ends are exactly the 1-to-1 swaps
        SequenceResult top = run_one_to_one(block_seq_i1(n, 1), p);
        CHECK(GammaProduct::equal_canonical(top.coeff, sigma12_n_closed_form(n, p)));
        CHECK(GammaProduct::equal_canonical(top.coeff, block_i1_closed_form(n, 1, p)));
        SequenceResult bottom = run_one_to_one(block_seq_i2(n, n), p);
        CHECK(GammaProduct::equal_canonical(bottom.coeff, block_i2_closed_form(n, n, p)));
    }
}

TEST_CASE("one-to-one position swaps: accumulation equals closed forms") {
    for (int n : {2, 3, 4}) {
        ParamArray p = ParamArray::symbolic(n, 2);
        for (int i = 1; i <= n; ++i) {
            INFO("n=" << n << " i=" << i);
            SequenceResult r = run_one_to_one(sigma12_seq(n, i), p);
            CHECK(r.final_state.params == applied_sigma12(p, i));
            GammaProduct closed;
            if (i == n) closed = sigma12_n_closed_form(n, p);
            else if (i == 1) closed = block_i2_closed_form(n, n, p);
            else closed = sigma12_i_closed_form(n, i, p);
            CHECK(GammaProduct::equal_canonical(r.coeff, closed));
        }
    }
}

TEST_CASE("frozen step trace of the rank-three interior swap") {
    ParamArray p = ParamArray::symbolic(3, 2);
    SequenceResult r = run_one_to_one(sigma12_seq(3, 2), p, true);
    std::vector<std::string> got;
    for (const auto& e : r.trace) got.push_back(e.state_after);
    std::vector<std::string> expect = {
        "f(3,1)^(2l(1,1) - 2l(2,3))",
        "f(2,1)^(2l(1,2) - 2l(2,3)) * f(3,1)^(2l(1,1) - 2l(1,2))",
        "f(2,1)^(2l(1,2) - 2l(2,3))",
        "f(2,1)^(2l(2,2) - 2l(2,3))",
        "f(2,1)^(2l(2,2) - 2l(2,3)) * f(3,1)^(2l(1,1) - 2l(2,2))",
        "f(3,1)^(2l(1,1) - 2l(2,3))",
        "1",
    };
    CHECK(got == expect);
}

namespace {

using XPoly = std::map<Monomial, Rational>;

void xpoly_add(XPoly& p, const Monomial& m, const Rational& c) {
    auto it = p.find(m);
    if (it == p.end()) p.emplace(m, c);
    else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}
XPoly xpoly_mul_var(const XPoly& p, const VarId& v) {
    XPoly r;
    for (auto& [m, c] : p) {
        Monomial mm = m;
        detail::set_exp(mm.exps, v, m.exponent_of(v) + 1);
        r.emplace(mm, c);
    }
    return r;
}

}  // namespace

TEST_CASE("between-site exponent: triangular solve is proportional to the determinant") {
    // solve the constraint system for the eliminated momenta of the last slot
    // and compare the contracted exponent with the expanded determinant
    for (int n = 2; n <= 3; ++n) {
        // D[a], a = 2..n: coefficient polynomials relative to the first momentum
        std::map<int, XPoly> D;
        for (int j = n - 1; j >= 1; --j) {
            int solved = n - j + 1;
            XPoly rhs;
            // row j: x^{(1,j)}_1 * 1 + sum_{a=2}^{n-j} x^{(1,j)}_a D[a] + D[solved] = 0
            xpoly_add(rhs, Monomial::var(VarId{1, j, 1}), Rational(-1));
            for (int a = 2; a <= n - j; ++a)
                for (auto& [m, c] : xpoly_mul_var(D[a], VarId{1, j, a})) xpoly_add(rhs, m, -c);
            D[solved] = rhs;
        }
        // expr = x^{(2,1)}_1 + sum_{a=2}^{n-1} x^{(2,1)}_a D[a] + D[n]
        XPoly expr;
        xpoly_add(expr, Monomial::var(VarId{2, 1, 1}), Rational(1));
        for (int a = 2; a <= n - 1; ++a)
            for (auto& [m, c] : xpoly_mul_var(D[a], VarId{2, 1, a})) xpoly_add(expr, m, c);
        for (auto& [m, c] : D[n]) xpoly_add(expr, m, c);

        XPoly det = det_factor_polynomial(n, n, 1);
        // proportionality with an explicitly computed constant
        REQUIRE(!det.empty());
        Rational ratio = expr.begin()->second / det.at(expr.begin()->first);
        XPoly scaled;
        for (auto& [m, c] : det) xpoly_add(scaled, m, c * ratio);
        CHECK(scaled == expr);
        CHECK(ratio == Rational(-1));  // the computed constant
    }
}

TEST_CASE("coinciding parameters leave a pole in the coefficient, not an error") {
    // 2l^1_2 = 2l^2_2 makes one Beta argument zero; the sequence still runs
    // and the coefficient carries the pole formally
    ParamArray p = ParamArray::symbolic(2, 2);
    p.at(2, 2) = p.at(1, 2);
    SequenceResult r = run_one_to_one(sigma12_seq(2, 2), p);
    GammaProduct c = r.coeff.canonicalized();
    CHECK(c.gamma_factors().count(AffineForm()) == 1);  // a Gamma(0) factor survives
    CHECK(!gamma_as_rational(r.coeff).has_value());
    // the pole is quantified by shifting the colliding parameter by u
    ParamArray q = ParamArray::symbolic(2, 2);
    q.at(2, 2) = q.at(1, 2) + AffineForm(Param::u());
    SequenceResult ru = run_one_to_one(sigma12_seq(2, 2), q);
    LaurentLeading l = ru.coeff.leading_at(
        {{Param::ell(1, 1), Rational(1, 3)}, {Param::ell(1, 2), Rational(0)}}, Param::u());
    CHECK(l.order == -1);
}
