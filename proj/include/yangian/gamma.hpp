#pragma once

// Formal products of Gamma functions of affine arguments with a factored
// rational prefactor. Supports the Euler beta construction, the recursion
// Gamma(z+1) = z Gamma(z) as an explicit canonicalization step, exact
// evaluation at integer / half-integer points, and exact leading Laurent
// data at a one-parameter specialization.

#include <map>
#include <optional>
#include <string>

#include "errors.hpp"
#include "polynomial.hpp"

namespace yangian {

// rational coefficient times a product of monic affine factors (integer powers)
class FactoredScalar {
public:
    FactoredScalar() : coeff_(1) {}
    explicit FactoredScalar(Rational c) : coeff_(std::move(c)) {}

    const Rational& coeff() const { return coeff_; }
    const std::map<AffineForm, int>& factors() const { return factors_; }
    bool is_zero() const { return coeff_.is_zero(); }

    void mul_rational(const Rational& r) {
        coeff_ *= r;
        if (coeff_.is_zero()) factors_.clear();
    }
    void mul_affine_power(const AffineForm& a, int p) {
        if (p == 0 || coeff_.is_zero()) return;
        if (a.is_zero()) {
            if (p > 0) { coeff_ = Rational(0); factors_.clear(); return; }
            throw std::domain_error("FactoredScalar: division by zero affine factor");
        }
        auto [lead, monic] = a.monic();
        if (monic.is_constant()) {  // a was a pure constant
            coeff_ *= lead.pow(p);
            return;
        }
        coeff_ *= lead.pow(p);
        int& e = factors_[monic];
        e += p;
        if (e == 0) factors_.erase(monic);
    }
    void mul(const FactoredScalar& o) {
        coeff_ *= o.coeff_;
        if (coeff_.is_zero()) { factors_.clear(); return; }
        for (const auto& [f, e] : o.factors_) {
            int& m = factors_[f];
            m += e;
            if (m == 0) factors_.erase(f);
        }
    }

    friend bool operator==(const FactoredScalar&, const FactoredScalar&) = default;

    Rational eval(const std::map<Param, Rational>& assignment) const {
        Rational r = coeff_;
        for (const auto& [f, e] : factors_) {
            Rational fv = f.eval(assignment);
            if (fv.is_zero() && e < 0) throw std::domain_error("FactoredScalar: pole at assignment");
            r *= fv.pow(e);
        }
        return r;
    }

    std::string to_string() const {
        std::string s = coeff_.to_string();
        for (const auto& [f, e] : factors_) {
            s += "*(" + f.to_string() + ")";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    Rational coeff_;
    std::map<AffineForm, int> factors_;
};

struct LaurentLeading {
    long long order = 0;   // exponent of the leading power of the expansion variable
    Rational coeff;        // never zero

    friend bool operator==(const LaurentLeading&, const LaurentLeading&) = default;
};

// exact value r * (sqrt(pi))^k
struct GammaValue {
    Rational mantissa;
    long long sqrt_pi_power = 0;

    friend bool operator==(const GammaValue&, const GammaValue&) = default;
    std::string to_string() const {
        std::string s = mantissa.to_string();
        if (sqrt_pi_power != 0) s += "*sqrtpi^" + std::to_string(sqrt_pi_power);
        return s;
    }
};

namespace detail {

inline BigInt rational_floor(const Rational& r) {
    BigInt q, rem;
    BigInt::divmod(r.num(), r.den(), q, rem);
    if (!rem.is_zero() && r.sign() < 0) q = q - BigInt(1);
    return q;
}

// exact Gamma at positive integers and all half-integers
inline std::optional<GammaValue> gamma_exact(const Rational& r) {
    if (r.is_integer()) {
        if (r.sign() <= 0) return std::nullopt;  // pole
        Rational m(1);
        Rational k(1);
        while (k < r) { m *= k; k += Rational(1); }
        return GammaValue{m, 0};
    }
    if (r.den() == BigInt(2)) {
        // walk from Gamma(1/2) = sqrt(pi)
        GammaValue g{Rational(1), 1};
        Rational z(1, 2);
        while (z < r) { g.mantissa *= z; z += Rational(1); }              // Gamma(z+1) = z Gamma(z)
        while (z > r) { z -= Rational(1); g.mantissa /= z; }              // Gamma(z) = Gamma(z+1)/z
        return g;
    }
    return std::nullopt;
}

}  // namespace detail

class GammaProduct {
public:
    GammaProduct() = default;
    explicit GammaProduct(Rational prefactor) : prefactor_(std::move(prefactor)) {}

    static GammaProduct one() { return GammaProduct(); }

    const FactoredScalar& prefactor() const { return prefactor_; }
    const std::map<AffineForm, int>& gamma_factors() const { return gammas_; }
    const std::map<AffineForm, int>& sign_markers() const { return signs_; }
    bool is_trivial() const { return gammas_.empty() && signs_.empty() && prefactor_ == FactoredScalar(); }

    void mul_rational(const Rational& r) { prefactor_.mul_rational(r); }
    void mul_affine_power(const AffineForm& a, int p) { prefactor_.mul_affine_power(a, p); }
    void mul_gamma(const AffineForm& arg, int power) {
        if (power == 0) return;
        int& e = gammas_[arg];
        e += power;
        if (e == 0) gammas_.erase(arg);
    }
    // formal orientation sign (-1)^e; meaningful at integer values of e
    void mul_sign(const AffineForm& e) {
        AffineForm n = normalize_sign_exp(e);
        if (n.is_zero()) return;  // even constant
        int& m = signs_[n];
        m = (m + 1) % 2;
        if (m == 0) signs_.erase(n);
    }
    void mul(const GammaProduct& o) {
        prefactor_.mul(o.prefactor_);
        for (const auto& [a, p] : o.gammas_) mul_gamma(a, p);
        for (const auto& [e, m] : o.signs_)
            if (m) mul_sign(e);
    }
    GammaProduct times(const GammaProduct& o) const {
        GammaProduct r = *this;
        r.mul(o);
        return r;
    }
    GammaProduct inverse() const {
        GammaProduct r;
        r.prefactor_ = FactoredScalar(Rational(1) / prefactor_.coeff());
        for (const auto& [f, e] : prefactor_.factors()) r.prefactor_.mul_affine_power(f, -e);
        for (const auto& [a, p] : gammas_) r.gammas_[a] = -p;
        r.signs_ = signs_;  // (-1)^e is its own inverse at integer e
        return r;
    }

    // substitute params by rationals in every affine slot
    GammaProduct substitute(const std::map<Param, Rational>& assignment) const {
        GammaProduct r;
        r.prefactor_ = FactoredScalar(prefactor_.coeff());
        for (const auto& [f, e] : prefactor_.factors()) r.prefactor_.mul_affine_power(f.substitute(assignment), e);
        for (const auto& [a, p] : gammas_) r.mul_gamma(a.substitute(assignment), p);
        for (const auto& [e, m] : signs_)
            if (m) r.mul_sign(e.substitute(assignment));
        return r;
    }

    // Gamma(z+1) = z Gamma(z) rewriting: constants of symbolic arguments are
    // shifted into [0,1); purely constant arguments evaluate (positive
    // integers) or shift into (0,1] (other non-integers); non-positive
    // integer constants are left in place as pole markers. Idempotent.
    GammaProduct canonicalized() const {
        GammaProduct r;
        r.prefactor_ = prefactor_;
        r.signs_ = signs_;
        for (const auto& [arg, p] : gammas_) {
            if (arg.is_constant()) {
                const Rational& c = arg.constant();
                if (c.is_integer()) {
                    if (c.sign() > 0) {
                        auto g = detail::gamma_exact(c);
                        r.prefactor_.mul_rational(g->mantissa.pow(p));
                    } else {
                        r.mul_gamma(arg, p);  // identically singular; keep
                    }
                    continue;
                }
                // shift constant into (0,1]
                BigInt fl = detail::rational_floor(c);
                Rational shift(fl);
                AffineForm target(c - shift);
                apply_shift(r, arg, target, shift, p);
                continue;
            }
            BigInt fl = detail::rational_floor(arg.constant());
            Rational shift(fl);
            AffineForm target = arg - AffineForm(shift);
            apply_shift(r, arg, target, shift, p);
        }
        return r;
    }

    friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

    static bool equal_canonical(const GammaProduct& a, const GammaProduct& b) {
        return a.canonicalized() == b.canonicalized();
    }

    // exact evaluation; nullopt when some Gamma argument is not an integer or
    // half-integer (a certified symbolic value: the caller keeps the product)
    std::optional<GammaValue> evaluate(const std::map<Param, Rational>& assignment) const {
        GammaValue out{prefactor_.eval(assignment), 0};
        for (const auto& [arg, p] : gammas_) {
            Rational a = arg.eval(assignment);
            auto g = detail::gamma_exact(a);
            if (!g) {
                if (a.is_integer()) throw std::domain_error("GammaProduct::evaluate: pole at Gamma(" + a.to_string() + ")");
                return std::nullopt;
            }
            out.mantissa *= g->mantissa.pow(p);
            out.sqrt_pi_power += g->sqrt_pi_power * p;
        }
        for (const auto& [e, m] : signs_) {
            if (!m) continue;
            Rational ev = e.eval(assignment);
            if (!ev.is_integer()) return std::nullopt;
            if ((ev.num() % BigInt(2)) != BigInt(0)) out.mantissa = -out.mantissa;
        }
        return out;
    }

    // Exact leading Laurent term as var -> 0 after substituting `assignment`.
    // Every affine slot must reduce to a form in `var` alone.
    LaurentLeading leading_at(const std::map<Param, Rational>& assignment, const Param& var) const {
        long long order = 0;
        Rational coeff(1);
        // residual exact values that must multiply out to a rational
        long long sqrt_pi = 0;
        std::map<Rational, int> residual;  // Gamma at non-integer non-half-integer constants

        auto split = [&](const AffineForm& f) -> std::pair<Rational, Rational> {
            AffineForm s = f.substitute(assignment);
            Rational a(0);
            for (const auto& [p, c] : s.terms()) {
                if (p == var) a = c;
                else throw NonAffineResidual("leading_at: residual parameter " + p.to_string());
            }
            return {a, s.constant()};
        };

        coeff *= prefactor_.coeff();
        if (coeff.is_zero()) throw std::domain_error("leading_at: zero prefactor");
        for (const auto& [f, e] : prefactor_.factors()) {
            auto [a, c] = split(f);
            if (c.is_zero()) {
                if (a.is_zero()) throw std::domain_error("leading_at: zero affine factor");
                order += e;
                coeff *= a.pow(e);
            } else {
                coeff *= c.pow(e);
            }
        }
        for (const auto& [arg, p] : gammas_) {
            auto [a, c] = split(arg);
            if (a.is_zero()) {
                if (c.is_integer() && c.sign() <= 0)
                    throw NonGenericResidual("leading_at: Gamma argument identically " + c.to_string());
                auto g = detail::gamma_exact(c);
                if (g) { coeff *= g->mantissa.pow(p); sqrt_pi += g->sqrt_pi_power * p; }
                else residual[c] += p;
                continue;
            }
            if (c.is_integer() && c.sign() <= 0) {
                // Gamma(-m + a*var) ~ (-1)^m / (m! * a * var)
                long long m = (-c).to_integer();
                Rational res = Rational((m % 2) ? -1 : 1) / (factorial(m) * a);
                order -= p;
                coeff *= res.pow(p);
            } else {
                auto g = detail::gamma_exact(c);
                if (g) { coeff *= g->mantissa.pow(p); sqrt_pi += g->sqrt_pi_power * p; }
                else residual[c] += p;
            }
        }
        for (const auto& [e, m] : signs_) {
            if (!m) continue;
            auto [a, c] = split(e);
            (void)a;
            if (!c.is_integer()) throw NonRationalLeading("leading_at: sign marker at non-integer value");
            if ((c.num() % BigInt(2)) != BigInt(0)) coeff = -coeff;
        }
        for (const auto& [c, p] : residual)
            if (p != 0) throw NonRationalLeading("leading_at: uncancelled Gamma(" + c.to_string() + ")");
        if (sqrt_pi != 0) throw NonRationalLeading("leading_at: uncancelled sqrt(pi) power");
        return LaurentLeading{order, coeff};
    }

    std::string to_string() const {
        std::string s = prefactor_.to_string();
        for (const auto& [a, p] : gammas_) {
            s += " * Gamma(" + a.to_string() + ")";
            if (p != 1) s += "^" + std::to_string(p);
        }
        for (const auto& [e, m] : signs_)
            if (m) s += " * (-1)^(" + e.to_string() + ")";
        return s;
    }

private:
    FactoredScalar prefactor_;
    std::map<AffineForm, int> gammas_;
    std::map<AffineForm, int> signs_;  // value 1 per active marker

    // constant part reduced mod 2, orientation fixed; zero form means +1
    static AffineForm normalize_sign_exp(const AffineForm& e) {
        AffineForm f = e;
        if (!f.terms().empty() && f.terms().begin()->second.sign() < 0) f = -f;  // (-1)^e == (-1)^-e at integers
        Rational c = f.constant();
        BigInt fl = detail::rational_floor(c * Rational(1, 2));
        Rational reduced = c - Rational(fl) * Rational(2);
        f = f - AffineForm(c) + AffineForm(reduced);
        if (f.is_constant() && f.constant().is_integer() && (f.constant().num() % BigInt(2)) == BigInt(0))
            return AffineForm();
        return f;
    }

    // Gamma(arg)^p  ->  prefactor * Gamma(target)^p, arg = target + shift
    static void apply_shift(GammaProduct& r, const AffineForm& arg, const AffineForm& target,
                            const Rational& shift, int p) {
        if (shift.is_zero()) { r.mul_gamma(target, p); return; }
        long long m = shift.to_integer();
        if (m > 0) {
            for (long long j = 1; j <= m; ++j) r.prefactor_.mul_affine_power(arg - AffineForm(Rational(j)), p);
        } else {
            for (long long j = 0; j < -m; ++j) r.prefactor_.mul_affine_power(arg + AffineForm(Rational(j)), -p);
        }
        r.mul_gamma(target, p);
    }
};

// Euler beta: B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b)
inline GammaProduct beta(const AffineForm& a, const AffineForm& b) {
    GammaProduct g;
    g.mul_gamma(a, 1);
    g.mul_gamma(b, 1);
    g.mul_gamma(a + b, -1);
    return g;
}

inline GammaProduct gamma_of(const AffineForm& a, int power = 1) {
    GammaProduct g;
    g.mul_gamma(a, power);
    return g;
}

}  // namespace yangian
