#pragma once

// Named symbolic parameters and affine forms in them.
// Ell params carry (site I, position a) and stand for the doubled weight
// parameters 2l^I_a; u and v are the spectral parameters.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace yangian {

enum class ParamKind : uint8_t { Ell = 0, U = 1, V = 2, Aux = 3 };

struct Param {
    ParamKind kind = ParamKind::Aux;
    int site = 0;  // I, 1-based (Ell only)
    int pos = 0;   // a, 1-based (Ell only)

    static Param ell(int site, int pos) { return Param{ParamKind::Ell, site, pos}; }
    static Param u() { return Param{ParamKind::U, 0, 0}; }
    static Param v() { return Param{ParamKind::V, 0, 0}; }
    static Param aux() { return Param{ParamKind::Aux, 0, 0}; }

    friend auto operator<=>(const Param&, const Param&) = default;

    std::string to_string() const {
        switch (kind) {
            case ParamKind::U: return "u";
            case ParamKind::V: return "v";
            case ParamKind::Aux: return "aux";
            case ParamKind::Ell:
                return "2l(" + std::to_string(site) + "," + std::to_string(pos) + ")";
        }
        return "?";
    }
};

// constant + sum of rational multiples of params; no zero coefficients stored
class AffineForm {
public:
    AffineForm() = default;
    AffineForm(Rational c) : constant_(std::move(c)) {}
    AffineForm(long long c) : constant_(c) {}
    AffineForm(int c) : constant_(c) {}
    AffineForm(const Param& p) { terms_[p] = Rational(1); }

    static AffineForm term(const Param& p, Rational coeff) {
        AffineForm a;
        if (!coeff.is_zero()) a.terms_[p] = std::move(coeff);
        return a;
    }

    const Rational& constant() const { return constant_; }
    const std::map<Param, Rational>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && constant_.is_zero(); }

    friend AffineForm operator+(const AffineForm& a, const AffineForm& b) {
        AffineForm r = a;
        r.constant_ += b.constant_;
        for (const auto& [p, c] : b.terms_) {
            Rational& t = r.terms_[p];
            t += c;
            if (t.is_zero()) r.terms_.erase(p);
        }
        return r;
    }
    friend AffineForm operator-(const AffineForm& a) { return a * Rational(-1); }
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b) { return a + (-b); }
    friend AffineForm operator*(const AffineForm& a, const Rational& s) {
        AffineForm r;
        if (s.is_zero()) return r;
        r.constant_ = a.constant_ * s;
        for (const auto& [p, c] : a.terms_) r.terms_[p] = c * s;
        return r;
    }
    AffineForm& operator+=(const AffineForm& o) { *this = *this + o; return *this; }
    AffineForm& operator-=(const AffineForm& o) { *this = *this - o; return *this; }

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    friend auto operator<=>(const AffineForm& a, const AffineForm& b) {
        if (auto c = a.terms_ <=> b.terms_; c != 0) return c;
        return a.constant_ <=> b.constant_;
    }

    Rational eval(const std::map<Param, Rational>& assignment) const {
        Rational r = constant_;
        for (const auto& [p, c] : terms_) {
            auto it = assignment.find(p);
            if (it == assignment.end()) throw std::invalid_argument("AffineForm::eval: unassigned param " + p.to_string());
            r += c * it->second;
        }
        return r;
    }

    // substitute some params by rationals, keep the rest symbolic
    AffineForm substitute(const std::map<Param, Rational>& assignment) const {
        AffineForm r(constant_);
        for (const auto& [p, c] : terms_) {
            auto it = assignment.find(p);
            if (it == assignment.end()) r += AffineForm::term(p, c);
            else r.constant_ += c * it->second;
        }
        return r;
    }

    // scale so the lowest param has coefficient 1; returns the extracted scalar.
    // Pure constants extract the constant itself (monic part = 1).
    std::pair<Rational, AffineForm> monic() const {
        if (terms_.empty()) return {constant_, AffineForm(Rational(1))};
        Rational lead = terms_.begin()->second;
        return {lead, *this * (Rational(1) / lead)};
    }

    std::string to_string() const {
        if (terms_.empty()) return constant_.to_string();
        std::string s;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            std::string cs = c.to_string();
            if (first) {
                if (c.is_one()) s += p.to_string();
                else if (c == Rational(-1)) s += "-" + p.to_string();
                else s += cs + "*" + p.to_string();
                first = false;
            } else {
                if (c.sign() > 0) s += " + " + (c.is_one() ? p.to_string() : cs + "*" + p.to_string());
                else {
                    Rational mc = -c;
                    s += " - " + (mc.is_one() ? p.to_string() : mc.to_string() + "*" + p.to_string());
                }
            }
        }
        if (!constant_.is_zero()) {
            if (constant_.sign() > 0) s += " + " + constant_.to_string();
            else s += " - " + (-constant_).to_string();
        }
        return s;
    }

private:
    Rational constant_;
    std::map<Param, Rational> terms_;
};

inline AffineForm operator+(const Param& p, const Rational& c) { return AffineForm(p) + AffineForm(c); }
inline AffineForm operator-(const Param& a, const Param& b) { return AffineForm(a) - AffineForm(b); }

}  // namespace yangian
