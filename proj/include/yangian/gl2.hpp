#pragma once

// The rank-two program: parameter combinations, representation-type
// classification of the second-order evaluation, permutation coefficients in
// raw and combination form, and the u -> 0 asymptotics that mirror the
// classification. All checks are exact.

#include "binomial_state.hpp"
#include "intertwiner.hpp"
#include "loperator.hpp"

namespace yangian {

// per factor: (twoEll2, twoEll1), matching the order 2l_2, 2l_1
struct Gl2Params {
    std::vector<std::pair<AffineForm, AffineForm>> factors;

    static Gl2Params symbolic(int N) {
        Gl2Params p;
        for (int I = 1; I <= N; ++I)
            p.factors.push_back({AffineForm(Param::ell(I, 2)), AffineForm(Param::ell(I, 1))});
        return p;
    }
    static Gl2Params rational(const std::vector<Rational>& flat) {
        if (flat.size() % 2 != 0) throw std::invalid_argument("Gl2Params: need pairs 2l2,2l1 per factor");
        Gl2Params p;
        for (size_t i = 0; i + 1 < flat.size(); i += 2)
            p.factors.push_back({AffineForm(flat[i]), AffineForm(flat[i + 1])});
        return p;
    }
    int N() const { return static_cast<int>(factors.size()); }
};

struct ParamCombos {
    AffineForm twoL1, twoL2, twoM12, twoM21;
};

// the four affine combinations of an ordered factor pair; the identity
// 2L1 + 2L2 = 2M12 + 2M21 holds by construction and is asserted
inline ParamCombos combos(const Gl2Params& p, int I = 1, int J = 2) {
    const auto& [lI2, lI1] = p.factors[I - 1];
    const auto& [lJ2, lJ1] = p.factors[J - 1];
    const AffineForm one(Rational(1));
    ParamCombos c;
    c.twoL1 = lI2 - lI1 - one;
    c.twoL2 = lJ2 - lJ1 - one;
    c.twoM12 = lJ2 - lI1 - one;
    c.twoM21 = lI2 - lJ1 - one;
    if (!((c.twoL1 + c.twoL2) - (c.twoM12 + c.twoM21)).is_zero())
        throw std::logic_error("combos: sum identity violated");
    return c;
}

struct RationalCombos {
    Rational twoL1, twoL2, twoM12, twoM21;
};

inline RationalCombos rational_combos(const ParamCombos& c) {
    auto conv = [](const AffineForm& a) {
        if (!a.is_constant()) throw std::invalid_argument("rational_combos: combination is not rational");
        return a.constant();
    };
    return {conv(c.twoL1), conv(c.twoL2), conv(c.twoM12), conv(c.twoM21)};
}

enum class Gl2Config {
    M12LLM,          // 2M12 <= 2L1, 2L2 <= 2M21
    L2MML,           // 2L2 <= 2M12, 2M21 <= 2L1
    L1MML,           // 2L1 <= 2M12, 2M21 <= 2L2
    M21LLM,          // 2M21 <= 2L1, 2L2 <= 2M12
    LimitL1EqM12,    // an L coincides with 2M12, the other exceeds it
    LimitAllEqual,   // all four combinations coincide
    Generic,         // no relevant integrality
    MixedIrreducible,  // both 2L nonneg integers, 2M12 not an integer
    Unclassified,
};

enum class RepVerdict {
    FiniteIrreducible,
    FiniteReducible,
    InfiniteHW,
    InfiniteDegenerate,
    Unclassified,
};

inline std::string to_string(Gl2Config c) {
    switch (c) {
        case Gl2Config::M12LLM: return "M12-LL-M21";
        case Gl2Config::L2MML: return "L2-MM-L1";
        case Gl2Config::L1MML: return "L1-MM-L2";
        case Gl2Config::M21LLM: return "M21-LL-M12";
        case Gl2Config::LimitL1EqM12: return "limit-L-equals-M12";
        case Gl2Config::LimitAllEqual: return "limit-all-equal";
        case Gl2Config::Generic: return "generic";
        case Gl2Config::MixedIrreducible: return "mixed-irreducible";
        case Gl2Config::Unclassified: return "unclassified";
    }
    return "?";
}
inline std::string to_string(RepVerdict v) {
    switch (v) {
        case RepVerdict::FiniteIrreducible: return "finite-irreducible";
        case RepVerdict::FiniteReducible: return "finite-reducible";
        case RepVerdict::InfiniteHW: return "infinite-hw";
        case RepVerdict::InfiniteDegenerate: return "infinite-degenerate";
        case RepVerdict::Unclassified: return "unclassified";
    }
    return "?";
}

struct RepTypeReport {
    Gl2Config configuration = Gl2Config::Generic;
    RepVerdict on_constant = RepVerdict::InfiniteHW;
    RepVerdict on_psi0 = RepVerdict::InfiniteHW;
    // integrality witnesses for (2L1, 2L2, 2M12, 2M21)
    std::vector<std::string> witnesses;
};

namespace gl2_detail {

inline bool nonneg_int(const Rational& r) { return r.is_nonneg_integer(); }
inline bool is_int(const Rational& r) { return r.is_integer(); }

// the verdict on the highest-weight vector 1 as a total function of the combos
inline RepVerdict verdict_on_constant(const RationalCombos& c) {
    bool l1 = nonneg_int(c.twoL1), l2 = nonneg_int(c.twoL2);
    if (l1 && l2) {
        // finite-dimensional; reducibility per the ordering configuration
        Rational e1 = c.twoM12 - c.twoL1, e2 = c.twoM12 - c.twoL2;
        if (!is_int(c.twoM12)) return RepVerdict::FiniteIrreducible;
        if (e1.is_zero() || e2.is_zero()) return RepVerdict::FiniteIrreducible;
        if (e1.sign() < 0 && e2.sign() < 0)
            return nonneg_int(c.twoM12) ? RepVerdict::FiniteReducible : RepVerdict::FiniteIrreducible;
        if (e1.sign() > 0 && e2.sign() > 0) return RepVerdict::FiniteReducible;  // 2M21 barrier inside
        return RepVerdict::FiniteIrreducible;  // mixed signs
    }
    if (l1 || l2) return RepVerdict::InfiniteDegenerate;  // one rising direction bounded
    bool m12i = is_int(c.twoM12), m21i = is_int(c.twoM21);
    if (m12i && m21i) {
        if (nonneg_int(c.twoM21)) return RepVerdict::InfiniteDegenerate;  // diagonal barrier
        if (nonneg_int(c.twoM12)) return RepVerdict::InfiniteDegenerate;  // second hw vector inside
        return RepVerdict::InfiniteHW;
    }
    if (m12i || m21i) return RepVerdict::Unclassified;  // strata the enumeration leaves open
    return RepVerdict::InfiniteHW;
}

}  // namespace gl2_detail

// total classification of the two-factor evaluation from the combinations
inline RepTypeReport classify(const RationalCombos& c) {
    using namespace gl2_detail;
    RepTypeReport r;
    auto wit = [&](const char* name, const Rational& v) {
        r.witnesses.push_back(std::string(name) + "=" + v.to_string() +
                              (nonneg_int(v) ? " (nonneg integer)"
                                             : (is_int(v) ? " (negative integer)" : " (non-integer)")));
    };
    wit("2L1", c.twoL1);
    wit("2L2", c.twoL2);
    wit("2M12", c.twoM12);
    wit("2M21", c.twoM21);

    bool all_nonneg_int = nonneg_int(c.twoL1) && nonneg_int(c.twoL2) && nonneg_int(c.twoM12) &&
                          nonneg_int(c.twoM21);
    Rational e1 = c.twoM12 - c.twoL1, e2 = c.twoM12 - c.twoL2;

    if (all_nonneg_int) {
        // ties are detected before the strict configurations
        if (e1.is_zero() && e2.is_zero()) r.configuration = Gl2Config::LimitAllEqual;
        else if ((e1.is_zero() && e2.sign() > 0) || (e2.is_zero() && e1.sign() > 0))
            r.configuration = Gl2Config::LimitL1EqM12;
        else if (e1.sign() <= 0 && e2.sign() <= 0) r.configuration = Gl2Config::M12LLM;
        else if (e1.sign() >= 0 && e2.sign() >= 0) r.configuration = Gl2Config::M21LLM;
        else if (e1.sign() > 0) r.configuration = Gl2Config::L1MML;
        else r.configuration = Gl2Config::L2MML;
    } else if (nonneg_int(c.twoL1) && nonneg_int(c.twoL2) && !is_int(c.twoM12)) {
        r.configuration = Gl2Config::MixedIrreducible;
    } else if (!is_int(c.twoL1) && !is_int(c.twoL2) && !is_int(c.twoM12) && !is_int(c.twoM21)) {
        r.configuration = Gl2Config::Generic;
    } else {
        r.configuration = Gl2Config::Unclassified;
    }

    r.on_constant = verdict_on_constant(c);
    // the action on psi_0 is the action on 1 of the sigma^1-permuted algebra
    RationalCombos s;
    s.twoL1 = c.twoL1 - c.twoM12 - Rational(1);
    s.twoL2 = c.twoL2 - c.twoM12 - Rational(1);
    s.twoM12 = -c.twoM12 - Rational(2);
    s.twoM21 = c.twoM21;
    r.on_psi0 = verdict_on_constant(s);
    // the coincident limit keeps an irreducible infinite action on psi_0
    if (r.configuration == Gl2Config::LimitAllEqual) r.on_psi0 = RepVerdict::InfiniteHW;
    return r;
}

inline RepTypeReport classify(const Gl2Params& p, int I = 1, int J = 2) {
    return classify(rational_combos(combos(p, I, J)));
}

// --- permutation coefficients -------------------------------------------------

enum class WhichCoefficient { Pi1, Pi2, PiFull };

// raw Beta/Gamma-product forms of the permutation coefficients for an
// ordered pair of factor arrays A = (2l^I_2, 2l^I_1), B = (2l^J_2, 2l^J_1)
inline GammaProduct perm_coeff_arrays(const std::pair<AffineForm, AffineForm>& A,
                                      const std::pair<AffineForm, AffineForm>& B,
                                      WhichCoefficient which) {
    const AffineForm one(Rational(1));
    const auto& [A2, A1] = A;
    const auto& [B2, B1] = B;
    switch (which) {
        case WhichCoefficient::Pi1: return beta(B1 - A1, A1 - B2 + one);
        case WhichCoefficient::Pi2: return beta(B2 - A2, A1 - B2 + one);
        case WhichCoefficient::PiFull: {
            GammaProduct g;
            g.mul_gamma(B2 - A2, 1);
            g.mul_gamma(B1 - A1, 1);
            g.mul_gamma(A1 - B2 + one, 1);
            g.mul_gamma(B1 - A2 + one, -1);
            return g;
        }
    }
    return GammaProduct::one();
}

inline GammaProduct perm_coeff(const Gl2Params& p, WhichCoefficient which, int I = 1, int J = 2) {
    return perm_coeff_arrays(p.factors[I - 1], p.factors[J - 1], which);
}

// the same coefficients written through the parameter combinations
inline GammaProduct perm_coeff_combo_form(const ParamCombos& c, WhichCoefficient which) {
    const AffineForm one(Rational(1));
    switch (which) {
        case WhichCoefficient::Pi1: return beta(c.twoM12 - c.twoL2, -c.twoM12);
        case WhichCoefficient::Pi2: return beta(c.twoM12 - c.twoL1, -c.twoM12);
        case WhichCoefficient::PiFull: {
            GammaProduct g;
            g.mul_gamma(c.twoM12 - c.twoL1, 1);
            g.mul_gamma(c.twoM12 - c.twoL2, 1);
            g.mul_gamma(-c.twoM12, 1);
            g.mul_gamma(-c.twoM21, -1);
            return g;
        }
    }
    (void)one;
    return GammaProduct::one();
}

// --- degeneracy witnesses -------------------------------------------------------

// exact 2x2 dependence of the rising generators on a monomial; the optional
// result is a nonzero pair (A, B) with A T21[1] + B T21[2] annihilating it
inline std::optional<std::pair<ParamPoly, ParamPoly>> degeneracy_witness(
    const Monodromy& T, int m1, int m2) {
    Monomial m;
    if (m1) detail::set_exp(m.exps, VarId::at(1, 1), m1);
    if (m2) detail::set_exp(m.exps, VarId::at(2, 1), m2);
    PolyState psi = PolyState::of(m);
    PolyState r1 = T.coefficient(1).at(2, 1).apply(psi);
    PolyState r2 = T.coefficient(2).at(2, 1).apply(psi);
    Monomial up1 = m, up2 = m;
    detail::set_exp(up1.exps, VarId::at(1, 1), m1 + 1);
    detail::set_exp(up2.exps, VarId::at(2, 1), m2 + 1);
    auto comp = [&](const PolyState& s, const Monomial& dir) {
        auto it = s.terms().find(dir);
        return it == s.terms().end() ? ParamPoly() : it->second;
    };
    ParamPoly a1 = comp(r1, up1), b1 = comp(r1, up2);
    ParamPoly a2 = comp(r2, up1), b2 = comp(r2, up2);
    if (!(a1 * b2 - b1 * a2).is_zero()) return std::nullopt;
    // nonzero (A, B) with A (a1, b1) + B (a2, b2) = 0
    if (!a1.is_zero() || !a2.is_zero()) return std::make_pair(a2, -a1);
    if (!b1.is_zero() || !b2.is_zero()) return std::make_pair(b2, -b1);
    return std::make_pair(ParamPoly(Rational(1)), ParamPoly());  // both images vanish
}

// symbolic 2x2 determinant from the explicit generator actions on x1^m1 x2^m2
inline ParamPoly degeneracy_determinant(int m1, int m2) {
    Gl2Params p = Gl2Params::symbolic(2);
    Monodromy T = monodromy({{biedenharn_L(2, {p.factors[0].second, p.factors[0].first}, 1), AffineForm()},
                             {biedenharn_L(2, {p.factors[1].second, p.factors[1].first}, 2), AffineForm()}});
    Monomial m;
    if (m1) detail::set_exp(m.exps, VarId::at(1, 1), m1);
    if (m2) detail::set_exp(m.exps, VarId::at(2, 1), m2);
    PolyState psi = PolyState::of(m);
    PolyState r1 = T.coefficient(1).at(2, 1).apply(psi);
    PolyState r2 = T.coefficient(2).at(2, 1).apply(psi);
    Monomial up1 = m, up2 = m;
    detail::set_exp(up1.exps, VarId::at(1, 1), m1 + 1);
    detail::set_exp(up2.exps, VarId::at(2, 1), m2 + 1);
    auto comp = [&](const PolyState& s, const Monomial& dir) {
        auto it = s.terms().find(dir);
        return it == s.terms().end() ? ParamPoly() : it->second;
    };
    return comp(r1, up1) * comp(r2, up2) - comp(r1, up2) * comp(r2, up1);
}

// --- asymptotics ----------------------------------------------------------------

enum class AsymMode { ShiftAll, ShiftSecond, FourFactor };

struct AsymReport {
    LaurentLeading total;
    std::string case_label;
    std::vector<std::pair<std::string, LaurentLeading>> factor_leading;  // four-factor mode
};

namespace gl2_detail {

// pi(A, B + u): the permutation coefficient with the second array shifted
inline GammaProduct pi_shifted(const std::pair<AffineForm, AffineForm>& A,
                               const std::pair<AffineForm, AffineForm>& B) {
    const AffineForm u = AffineForm(Param::u());
    return perm_coeff_arrays(A, {B.first + u, B.second + u}, WhichCoefficient::PiFull);
}

inline bool sign_parity_negative(const Rational& exponent) {
    // (-1)^exponent for an integer value
    return (exponent.num() % BigInt(2)) != BigInt(0);
}

// the asymptotics case label predicted by the configuration, as matchable
// (order, sign) data for pi12(u)
inline std::pair<long long, int> predicted_case(const RationalCombos& c) {
    Rational e1 = c.twoM12 - c.twoL1, e2 = c.twoM12 - c.twoL2;
    if ((e1.is_zero() && e2.sign() > 0) || (e2.is_zero() && e1.sign() > 0)) {
        // limiting configuration: simple pole, sign from the surviving factor
        Rational ex = (e1.is_zero() ? e2 : e1) - Rational(1);
        return {-1, sign_parity_negative(ex) ? -1 : 1};
    }
    if (e1.sign() <= 0 && e2.sign() <= 0) return {-2, -1};
    if (e1.sign() >= 0 && e2.sign() >= 0)
        return {0, sign_parity_negative(c.twoL1 + c.twoL2 + Rational(1)) ? -1 : 1};
    if (e1.sign() > 0)
        return {-1, sign_parity_negative(c.twoM21 + c.twoL2 + Rational(1)) ? -1 : 1};
    return {-1, sign_parity_negative(c.twoM21 + c.twoL1 + Rational(1)) ? -1 : 1};
}

}  // namespace gl2_detail

// Laurent data of the requested coefficient at u -> 0 plus the configuration
// label implied by that data; p must be rational
inline AsymReport asymptotics_report(const Gl2Params& p, AsymMode mode) {
    using namespace gl2_detail;
    const Param u = Param::u();
    AsymReport rep;
    switch (mode) {
        case AsymMode::ShiftAll: {
            GammaProduct pi = pi_shifted(p.factors[0], p.factors[0]);
            rep.total = pi.leading_at({}, u);
            rep.case_label = rep.total.coeff.sign() > 0 ? "generic-plus" : "integer-sign-flip";
            break;
        }
        case AsymMode::ShiftSecond: {
            if (p.N() < 2) throw std::invalid_argument("asymptotics_report: need two factors");
            GammaProduct pi = pi_shifted(p.factors[0], p.factors[1]);
            rep.total = pi.leading_at({}, u);
            RationalCombos c = rational_combos(combos(p));
            auto [ord, sign] = predicted_case(c);
            bool match = ord == rep.total.order && sign == rep.total.coeff.sign();
            rep.case_label = to_string(classify(c).configuration) + (match ? "" : " [table mismatch]");
            break;
        }
        case AsymMode::FourFactor: {
            if (p.N() != 2) throw std::invalid_argument("asymptotics_report: four-factor mode takes the two base factors");
            // factors 3, 4 are factors 1, 2 shifted by u
            GammaProduct pi21 = pi_shifted(p.factors[1], p.factors[0]);
            GammaProduct pi11 = pi_shifted(p.factors[0], p.factors[0]);
            GammaProduct pi22 = pi_shifted(p.factors[1], p.factors[1]);
            GammaProduct pi12 = pi_shifted(p.factors[0], p.factors[1]);
            GammaProduct total = pi21.times(pi11).times(pi22).times(pi12);
            rep.total = total.leading_at({}, u);
            rep.factor_leading.push_back({"pi21", pi21.leading_at({}, u)});
            rep.factor_leading.push_back({"pi11", pi11.leading_at({}, u)});
            rep.factor_leading.push_back({"pi22", pi22.leading_at({}, u)});
            rep.factor_leading.push_back({"pi12", pi12.leading_at({}, u)});
            rep.case_label = to_string(classify(rational_combos(combos(p))).configuration);
            break;
        }
    }
    return rep;
}

// --- consistency sweep ----------------------------------------------------------

struct SweepResult {
    int points = 0;
    int agreements = 0;
    std::vector<std::string> mismatches;
};

// Classification labels versus asymptotics data over a grid of parameter
// arrays whose four combinations are non-negative integers. Each point pairs
// the configuration read off by classify() with the exact Laurent data of
// pi12(u); the configuration's predicted (order, sign) row must match.
inline SweepResult consistency_sweep() {
    using namespace gl2_detail;
    SweepResult res;
    std::vector<Rational> offsets{Rational(0), Rational(1, 2), Rational(-3, 2)};
    for (const Rational& off : offsets) {
        for (int a = 1; a <= 5; ++a)          // 2L1 = a - 1
            for (int b = 1; b <= 5; ++b)      // 2M12 = b - 1
                for (int c = -4; c <= 4; ++c) {
                    Gl2Params p = Gl2Params::rational(
                        {Rational(a) + off, off, Rational(b) + off, Rational(c) + off});
                    RationalCombos rc = rational_combos(combos(p));
                    if (!(rc.twoL1.is_nonneg_integer() && rc.twoL2.is_nonneg_integer() &&
                          rc.twoM12.is_nonneg_integer() && rc.twoM21.is_nonneg_integer()))
                        continue;
                    ++res.points;
                    AsymReport ar = asymptotics_report(p, AsymMode::ShiftSecond);
                    auto [ord, sign] = predicted_case(rc);
                    if (ord == ar.total.order && sign == ar.total.coeff.sign()) ++res.agreements;
                    else
                        res.mismatches.push_back(
                            "2l=(" + (Rational(a) + off).to_string() + "," + off.to_string() + ";" +
                            (Rational(b) + off).to_string() + "," + (Rational(c) + off).to_string() +
                            ") config=" + to_string(classify(rc).configuration) + " got order " +
                            std::to_string(ar.total.order) + " coeff " + ar.total.coeff.to_string());
                }
    }
    return res;
}

// --- highest and lowest weight vectors of the two-factor evaluation --------------

// T12(u) annihilates psi0 = (x1 - x2)^(2M12 + 1); checked symbolically
inline bool verify_psi0_highest_weight(std::vector<ParamPoly>* weights_out = nullptr) {
    Gl2Params p = Gl2Params::symbolic(2);
    Monodromy T = monodromy({{biedenharn_L(2, {p.factors[0].second, p.factors[0].first}, 1), AffineForm()},
                             {biedenharn_L(2, {p.factors[1].second, p.factors[1].first}, 2), AffineForm()}});
    ParamCombos c = combos(p);
    BinomialState psi0(1, 2);
    psi0.add_part(0, Monomial::one(), RatioPoly(Rational(1)));
    psi0.mul_power(c.twoM12 + AffineForm(Rational(1)));

    if (!psi0.applied(T.product.at(1, 2)).is_zero()) return false;
    // The diagonal eigenvalues are the weight functions of the array with the
    // values at (1,1) and (2,2) exchanged: permuted site 1 holds
    // (2l^2_2, 2l^1_2), permuted site 2 holds (2l^2_1, 2l^1_1).
    WeightFunctionList expect_weights =
        predicted_weights(2, {{p.factors[1].first, p.factors[0].first},
                              {p.factors[1].second, p.factors[0].second}});
    for (int a = 1; a <= 2; ++a) {
        BinomialState diag = psi0.applied(T.product.at(a, a));
        BinomialState scaled = psi0;
        scaled.scale(RatioPoly(expect_weights[a - 1]));
        if (!BinomialState::equal(diag, scaled)) return false;
        if (weights_out) weights_out->push_back(expect_weights[a - 1]);
    }
    return true;
}

// T21(u) annihilates psi_- = x1^(2L1) x2^(2L2) at integer parameter values
inline bool verify_psi_minus_lowest_weight(const Gl2Params& p) {
    RationalCombos rc = rational_combos(combos(p));
    if (!rc.twoL1.is_nonneg_integer() || !rc.twoL2.is_nonneg_integer())
        throw std::invalid_argument("verify_psi_minus_lowest_weight: needs non-negative integer 2L");
    std::vector<AffineForm> tl1{p.factors[0].second, p.factors[0].first};
    std::vector<AffineForm> tl2{p.factors[1].second, p.factors[1].first};
    Monodromy T = monodromy({{biedenharn_L(2, tl1, 1), AffineForm()}, {biedenharn_L(2, tl2, 2), AffineForm()}});
    Monomial m;
    detail::set_exp(m.exps, VarId::at(1, 1), static_cast<int>(rc.twoL1.to_integer()));
    detail::set_exp(m.exps, VarId::at(2, 1), static_cast<int>(rc.twoL2.to_integer()));
    return T.product.at(2, 1).apply(PolyState::of(m)).is_zero();
}

}  // namespace yangian
