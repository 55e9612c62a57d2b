#pragma once

// States of the form sum_j (x^1 - x^2)^(E + j) * p_j(x^1, x^2) with an
// affine base exponent E, rational-function coefficients relative to one
// global Gamma-product prefactor. Carrier of the rank-two permutation
// operator actions: power multiplication, the contour-integrated shift
// steps, and the action of differential operators.

#include <map>

#include "gamma.hpp"
#include "weyl.hpp"

namespace yangian {

using RatioTerms = std::map<Monomial, RatioPoly>;

inline void ratio_add(RatioTerms& t, const Monomial& m, const RatioPoly& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) t.emplace(m, c);
    else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

class BinomialState {
public:
    BinomialState(int site1 = 1, int site2 = 2) : site1_(site1), site2_(site2) {}

    static BinomialState monomial(int m1, int m2, int site1 = 1, int site2 = 2) {
        BinomialState s(site1, site2);
        Monomial m;
        if (m1) detail::set_exp(m.exps, VarId::at(site1, 1), m1);
        if (m2) detail::set_exp(m.exps, VarId::at(site2, 1), m2);
        s.parts_[0][m] = RatioPoly(Rational(1));
        return s;
    }

    int site1() const { return site1_; }
    int site2() const { return site2_; }
    const AffineForm& base() const { return base_; }
    const std::map<int, RatioTerms>& parts() const { return parts_; }
    // semantic zero: cancellations across shift parts count
    bool is_zero() const { return parts_.empty() || canonical().parts_.empty(); }

    VarId var1() const { return VarId::at(site1_, 1); }
    VarId var2() const { return VarId::at(site2_, 1); }

    void scale(const RatioPoly& c) {
        std::map<int, RatioTerms> out;
        for (auto& [j, terms] : parts_)
            for (auto& [m, r] : terms) ratio_add(out[j], m, r * c);
        parts_ = std::move(out);
        prune();
    }

    // multiply by (x^1 - x^2)^w
    void mul_power(const AffineForm& w) { base_ += w; }

    void add_part(int shift, const Monomial& m, const RatioPoly& c) {
        ratio_add(parts_[shift], m, c);
        if (parts_[shift].empty()) parts_.erase(shift);
    }

    friend BinomialState operator+(const BinomialState& a, const BinomialState& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        AffineForm diff = b.base_ - a.base_;
        if (!diff.is_constant() || !diff.constant().is_integer())
            throw std::invalid_argument("BinomialState: incompatible base exponents");
        long long off = diff.constant().to_integer();
        BinomialState r = a;
        for (const auto& [j, terms] : b.parts_)
            for (const auto& [m, c] : terms) r.add_part(j + static_cast<int>(off), m, c);
        r.prune();
        return r;
    }

    // The integrated shift step with weight c^(w-1): the shift acts on the
    // binomial factor and on the powers of the shifted site's variable; each
    // c-power integrates against the binomial by the Euler beta evaluation.
    // gen_site selects exp(-c d_1) or exp(-c d_2). Returns the global
    // Gamma-product factor B(w, E+1); the remaining j,t-dependence stays in
    // the rational coefficients.
    GammaProduct shift_integrate(const AffineForm& w, int gen_site) {
        bool first = gen_site == site1_;
        if (!first && gen_site != site2_) throw UnsupportedTarget("shift_integrate: unknown generator site");
        VarId shifted = first ? var1() : var2();
        AffineForm v0 = base_;
        std::map<int, RatioTerms> out;
        for (const auto& [j, terms] : parts_) {
            for (const auto& [m, coeff] : terms) {
                int mg = m.exponent_of(shifted);
                for (int t = 0; t <= mg; ++t) {
                    // binomial expansion of (x - c)^mg; for the second site the
                    // substitution c -> -c cancels the alternating sign
                    Rational sign = first ? Rational((t % 2) ? -1 : 1) : Rational(1);
                    RatioPoly c = coeff * (binomial_coeff(mg, t) * sign);
                    // relative weight B(w+t, v0+j+1) / B(w, v0+1)
                    for (int s = 0; s < t; ++s) c.mul_affine(w + AffineForm(Rational(s)));
                    for (int s = 1; s <= j; ++s) c.mul_affine(v0 + AffineForm(Rational(s)));
                    for (int s = 1; s <= j + t; ++s) c.div_affine(w + v0 + AffineForm(Rational(s)));
                    Monomial mm = m;
                    detail::set_exp(mm.exps, shifted, mg - t);
                    ratio_add(out[j + t], mm, c);
                }
            }
        }
        parts_ = std::move(out);
        prune();
        base_ = v0 + w;
        return beta(w, v0 + AffineForm(Rational(1)));
    }

    // action of a single d or x factor
    void apply_d(int site) {
        bool first = site == site1_;
        VarId v = first ? var1() : var2();
        Rational fsign = first ? Rational(1) : Rational(-1);
        std::map<int, RatioTerms> out;
        for (const auto& [j, terms] : parts_) {
            for (const auto& [m, coeff] : terms) {
                // (E+j) f^(E+j-1) m
                RatioPoly lead = coeff * RatioPoly::of_affine(base_ + AffineForm(Rational(j))) * fsign;
                ratio_add(out[j - 1], m, lead);
                // f^(E+j) dm
                int e = m.exponent_of(v);
                if (e > 0) {
                    Monomial mm = m;
                    detail::set_exp(mm.exps, v, e - 1);
                    ratio_add(out[j], mm, coeff * Rational(e));
                }
            }
        }
        parts_ = std::move(out);
        prune();
    }
    void apply_x(int site) {
        VarId v = site == site1_ ? var1() : var2();
        std::map<int, RatioTerms> out;
        for (const auto& [j, terms] : parts_)
            for (const auto& [m, coeff] : terms) {
                Monomial mm = m;
                detail::set_exp(mm.exps, v, m.exponent_of(v) + 1);
                ratio_add(out[j], mm, coeff);
            }
        parts_ = std::move(out);
    }

    // full normal-ordered operator action (coefficients multiply in)
    BinomialState applied(const WeylOp& op) const {
        BinomialState total(site1_, site2_);
        total.base_ = base_;
        bool any = false;
        for (const auto& [wm, wc] : op.terms()) {
            BinomialState cur = *this;
            for (const auto& [v, e] : wm.d_exps)
                for (int i = 0; i < e; ++i) cur.apply_d(v.site);
            for (const auto& [v, e] : wm.x_exps)
                for (int i = 0; i < e; ++i) cur.apply_x(v.site);
            cur.scale(RatioPoly(wc));
            if (!any) {
                total = cur;
                any = true;
            } else {
                total = align_add(total, cur);
            }
        }
        return total;
    }

    // Unique normal form: everything expanded to one shift, then maximal
    // powers of (x^1 - x^2) divided back out of the polynomial part.
    BinomialState canonical() const {
        if (parts_.empty()) return *this;
        int jmin = parts_.begin()->first;
        RatioTerms flat;
        for (const auto& [j, terms] : parts_) {
            for (const auto& [m, c] : terms) {
                // expand f^(j - jmin) * m
                int k = j - jmin;
                for (int t = 0; t <= k; ++t) {
                    Rational coeff = binomial_coeff(k, t) * Rational((t % 2) ? -1 : 1);
                    Monomial mm = m;
                    detail::set_exp(mm.exps, var1(), m.exponent_of(var1()) + k - t);
                    detail::set_exp(mm.exps, var2(), m.exponent_of(var2()) + t);
                    ratio_add(flat, mm, c * coeff);
                }
            }
        }
        while (!flat.empty()) {
            RatioTerms quotient;
            if (!divide_by_binomial(flat, quotient)) break;
            flat = std::move(quotient);
            ++jmin;
        }
        BinomialState r(site1_, site2_);
        r.base_ = base_;
        if (!flat.empty()) r.parts_[jmin] = std::move(flat);
        return r;
    }

    // equality up to base/shift rebalancing: the canonical form has a unique
    // total exponent base + jmin and a unique expanded polynomial part
    static bool equal(const BinomialState& a, const BinomialState& b) {
        BinomialState ca = a.canonical(), cb = b.canonical();
        if (ca.parts_.empty() || cb.parts_.empty()) return ca.parts_.empty() && cb.parts_.empty();
        AffineForm ta = ca.base_ + AffineForm(Rational(ca.parts_.begin()->first));
        AffineForm tb = cb.base_ + AffineForm(Rational(cb.parts_.begin()->first));
        return ta == tb && ca.parts_.begin()->second == cb.parts_.begin()->second;
    }

    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (const auto& [j, terms] : parts_)
            for (const auto& [m, c] : terms) {
                if (!s.empty()) s += " + ";
                s += c.to_string() + " * f^(" + (base_ + AffineForm(Rational(j))).to_string() + ") * " +
                     m.to_string();
            }
        return s;
    }

private:
    int site1_, site2_;
    AffineForm base_;
    std::map<int, RatioTerms> parts_;

    void prune() {
        for (auto it = parts_.begin(); it != parts_.end();) {
            if (it->second.empty()) it = parts_.erase(it);
            else ++it;
        }
    }

    // exact division of a polynomial part by (x^1 - x^2); false if not divisible
    bool divide_by_binomial(const RatioTerms& p, RatioTerms& quotient) const {
        RatioTerms rem = p;
        quotient.clear();
        while (!rem.empty()) {
            // highest x1-degree term (map order puts the largest var1 exponent last
            // within equal var2 blocks; scan for the lexicographic max in x1)
            auto best = rem.begin();
            for (auto it = rem.begin(); it != rem.end(); ++it)
                if (it->first.exponent_of(var1()) > best->first.exponent_of(var1())) best = it;
            int e1 = best->first.exponent_of(var1());
            if (e1 == 0) return false;  // leftover free of x1 cannot be divisible
            Monomial qm = best->first;
            detail::set_exp(qm.exps, var1(), e1 - 1);
            RatioPoly qc = best->second;
            ratio_add(quotient, qm, qc);
            // subtract qc * qm * (x1 - x2)
            Monomial m1 = qm, m2 = qm;
            detail::set_exp(m1.exps, var1(), e1);
            detail::set_exp(m2.exps, var2(), qm.exponent_of(var2()) + 1);
            ratio_add(rem, m1, qc * Rational(-1));
            ratio_add(rem, m2, qc);
        }
        return true;
    }
    static BinomialState align_add(const BinomialState& a, const BinomialState& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return a + b;
    }
};

// a Gamma-product that reduces to a rational function after canonicalization
inline std::optional<RatioPoly> gamma_as_rational(const GammaProduct& g) {
    GammaProduct c = g.canonicalized();
    if (!c.gamma_factors().empty()) return std::nullopt;
    if (!c.sign_markers().empty()) return std::nullopt;
    RatioPoly r(ParamPoly(c.prefactor().coeff()));
    for (const auto& [f, e] : c.prefactor().factors()) {
        for (int i = 0; i < e; ++i) r.mul_affine(f);
        for (int i = 0; i < -e; ++i) r.div_affine(f);
    }
    return r;
}

}  // namespace yangian
