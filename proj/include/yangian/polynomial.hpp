#pragma once

// Sparse multivariate polynomials over the rationals in named Params.
// Canonical form: sorted monomial map, no zero coefficients.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "param.hpp"

namespace yangian {

struct ParamMonomial {
    // sorted, positive exponents only
    std::vector<std::pair<Param, int>> exps;

    bool empty() const { return exps.empty(); }
    int degree() const {
        int d = 0;
        for (auto& [p, e] : exps) d += e;
        return d;
    }
    int exponent_of(const Param& p) const {
        for (auto& [q, e] : exps)
            if (q == p) return e;
        return 0;
    }
    friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;

    static ParamMonomial mul(const ParamMonomial& a, const ParamMonomial& b) {
        ParamMonomial r;
        size_t i = 0, j = 0;
        while (i < a.exps.size() || j < b.exps.size()) {
            if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first))
                r.exps.push_back(a.exps[i++]);
            else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first)
                r.exps.push_back(b.exps[j++]);
            else {
                r.exps.emplace_back(a.exps[i].first, a.exps[i].second + b.exps[j].second);
                ++i, ++j;
            }
        }
        return r;
    }
};

class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(Rational c) {
        if (!c.is_zero()) terms_[ParamMonomial{}] = std::move(c);
    }
    ParamPoly(long long c) : ParamPoly(Rational(c)) {}
    ParamPoly(int c) : ParamPoly(Rational(c)) {}
    ParamPoly(const Param& p) {
        ParamMonomial m;
        m.exps.emplace_back(p, 1);
        terms_[m] = Rational(1);
    }
    ParamPoly(const AffineForm& a) {
        if (!a.constant().is_zero()) terms_[ParamMonomial{}] = a.constant();
        for (const auto& [p, c] : a.terms()) {
            ParamMonomial m;
            m.exps.emplace_back(p, 1);
            terms_[m] = c;
        }
    }

    const std::map<ParamMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("ParamPoly: not constant");
        return terms_.begin()->second;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a) { return a * Rational(-1); }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }
    friend ParamPoly operator*(const ParamPoly& a, const Rational& s) {
        ParamPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = c * s;
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ParamMonomial::mul(ma, mb), ca * cb);
        return r;
    }
    ParamPoly& operator+=(const ParamPoly& o) { for (const auto& [m, c] : o.terms_) add_term(m, c); return *this; }
    ParamPoly& operator-=(const ParamPoly& o) { *this = *this - o; return *this; }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;
    friend auto operator<=>(const ParamPoly&, const ParamPoly&) = default;

    Rational eval(const std::map<Param, Rational>& assignment) const {
        Rational r(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [p, e] : m.exps) {
                auto it = assignment.find(p);
                if (it == assignment.end())
                    throw std::invalid_argument("ParamPoly::eval: unassigned param " + p.to_string());
                t *= it->second.pow(e);
            }
            r += t;
        }
        return r;
    }

    // substitute one param by an affine form
    ParamPoly substitute(const Param& p, const AffineForm& value) const {
        ParamPoly value_poly(value);
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            ParamPoly t(c);
            ParamMonomial rest;
            for (const auto& [q, e] : m.exps) {
                if (q == p) {
                    for (int i = 0; i < e; ++i) t *= value_poly;
                } else {
                    rest.exps.emplace_back(q, e);
                }
            }
            ParamPoly restp;
            restp.terms_[rest] = Rational(1);
            r += t * restp;
        }
        return r;
    }

    // substitute several params by rationals
    ParamPoly substitute_all(const std::map<Param, Rational>& assignment) const {
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            Rational coeff = c;
            ParamMonomial rest;
            for (const auto& [q, e] : m.exps) {
                auto it = assignment.find(q);
                if (it == assignment.end()) rest.exps.emplace_back(q, e);
                else coeff *= it->second.pow(e);
            }
            r.add_term(rest, coeff);
        }
        return r;
    }

    int degree_in(const Param& p) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(p));
        return d;
    }

    // coefficient of p^k (a polynomial in the remaining params)
    ParamPoly coeff_of(const Param& p, int k) const {
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.exponent_of(p) != k) continue;
            ParamMonomial rest;
            for (const auto& [q, e] : m.exps)
                if (!(q == p)) rest.exps.emplace_back(q, e);
            r.add_term(rest, c);
        }
        return r;
    }

    // exact division by p^k; throws if any monomial lacks the power
    ParamPoly divide_by_power(const Param& p, int k) const {
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            ParamMonomial q;
            bool found = m.exps.empty() && k == 0;
            for (const auto& [pp, e] : m.exps) {
                if (pp == p) {
                    if (e < k) throw std::domain_error("ParamPoly: not divisible by " + p.to_string() + "^" + std::to_string(k));
                    found = true;
                    if (e > k) q.exps.emplace_back(pp, e - k);
                } else {
                    q.exps.emplace_back(pp, e);
                }
            }
            if (!found && k > 0) throw std::domain_error("ParamPoly: not divisible by " + p.to_string() + "^" + std::to_string(k));
            r.add_term(q, c);
        }
        return r;
    }

    // matches a*p + b with a,b free of p; null if degree > 1 in any param or mixed
    bool as_affine(AffineForm& out) const {
        AffineForm acc;
        for (const auto& [m, c] : terms_) {
            if (m.exps.empty()) { acc += AffineForm(c); continue; }
            if (m.exps.size() != 1 || m.exps[0].second != 1) return false;
            acc += AffineForm::term(m.exps[0].first, c);
        }
        out = acc;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string mono;
            for (const auto& [p, e] : m.exps) {
                if (!mono.empty()) mono += "*";
                mono += p.to_string();
                if (e > 1) mono += "^" + std::to_string(e);
            }
            Rational ac = c.sign() < 0 ? -c : c;
            std::string cs = ac.to_string();
            std::string piece;
            if (mono.empty()) piece = cs;
            else if (ac.is_one()) piece = mono;
            else piece = cs + "*" + mono;
            if (first) { s += (c.sign() < 0 ? "-" : "") + piece; first = false; }
            else s += (c.sign() < 0 ? " - " : " + ") + piece;
        }
        return s;
    }

private:
    std::map<ParamMonomial, Rational> terms_;
    void add_term(const ParamMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

inline ParamPoly operator*(const Rational& s, const ParamPoly& p) { return p * s; }

// Quotient of a ParamPoly by a product of affine factors, kept factored.
// Supports the coefficient arithmetic of permutation-operator actions on
// monomials, where Gamma-function ratios reduce to rational functions.
class RatioPoly {
public:
    RatioPoly() = default;
    RatioPoly(ParamPoly n) : num_(std::move(n)) {}
    RatioPoly(Rational c) : num_(std::move(c)) {}

    static RatioPoly of_affine(const AffineForm& a) { return RatioPoly(ParamPoly(a)); }

    const ParamPoly& num() const { return num_; }
    const std::map<AffineForm, int>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    void mul_affine(const AffineForm& a) { num_ = num_ * ParamPoly(a); }
    void div_affine(const AffineForm& a) {
        auto [lead, monic] = a.monic();
        if (monic.is_constant()) {  // pure constant factor
            num_ = num_ * (Rational(1) / (lead * monic.constant()));
            return;
        }
        num_ = num_ * (Rational(1) / lead);
        den_[monic] += 1;
    }

    friend RatioPoly operator*(const RatioPoly& a, const RatioPoly& b) {
        RatioPoly r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (const auto& [f, e] : b.den_) r.den_[f] += e;
        r.prune();
        return r;
    }
    friend RatioPoly operator*(const RatioPoly& a, const Rational& s) {
        RatioPoly r = a;
        r.num_ = r.num_ * s;
        r.prune();
        return r;
    }
    friend RatioPoly operator+(const RatioPoly& a, const RatioPoly& b) {
        RatioPoly r;
        // common denominator by max powers
        r.den_ = a.den_;
        for (const auto& [f, e] : b.den_) {
            auto it = r.den_.find(f);
            if (it == r.den_.end()) r.den_[f] = e;
            else it->second = std::max(it->second, e);
        }
        ParamPoly na = a.num_, nb = b.num_;
        for (const auto& [f, e] : r.den_) {
            int ea = e, eb = e;
            if (auto it = a.den_.find(f); it != a.den_.end()) ea -= it->second;
            if (auto it = b.den_.find(f); it != b.den_.end()) eb -= it->second;
            ParamPoly fp(f);
            for (int i = 0; i < ea; ++i) na *= fp;
            for (int i = 0; i < eb; ++i) nb *= fp;
        }
        r.num_ = na + nb;
        r.prune();
        return r;
    }
    friend RatioPoly operator-(const RatioPoly& a, const RatioPoly& b) { return a + b * Rational(-1); }
    RatioPoly& operator+=(const RatioPoly& o) { *this = *this + o; return *this; }
    RatioPoly& operator*=(const RatioPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const RatioPoly& a, const RatioPoly& b) {
        return (a - b).is_zero();
    }

    Rational eval(const std::map<Param, Rational>& assignment) const {
        Rational n = num_.eval(assignment);
        for (const auto& [f, e] : den_) {
            Rational fv = f.eval(assignment);
            if (fv.is_zero()) throw std::domain_error("RatioPoly::eval: denominator zero");
            n /= fv.pow(e);
        }
        return n;
    }

    std::string to_string() const {
        std::string s = "(" + num_.to_string() + ")";
        for (const auto& [f, e] : den_)
            s += " / (" + f.to_string() + ")" + (e > 1 ? "^" + std::to_string(e) : "");
        return s;
    }

private:
    ParamPoly num_;
    std::map<AffineForm, int> den_;  // monic affine factors, positive powers
    void prune() {
        if (num_.is_zero()) den_.clear();
    }
};

}  // namespace yangian
