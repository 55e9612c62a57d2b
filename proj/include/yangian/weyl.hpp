#pragma once

// Normal-ordered algebra of polynomial differential operators in
// site-indexed variables, with exact action on monomial states.
// Normal order convention: all x factors to the left of all d factors.

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace yangian {

struct VarId {
    int site = 1;  // monodromy factor I
    int slot = 1;  // JS factor inside one Biedenharn block
    int comp = 1;  // gl(n) component a

    static VarId plain(int comp) { return VarId{1, 1, comp}; }
    static VarId at(int site, int comp) { return VarId{site, 1, comp}; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string to_string() const {
        if (site == 1 && slot == 1) return "x" + std::to_string(comp);
        if (slot == 1) return "x(" + std::to_string(site) + ";" + std::to_string(comp) + ")";
        return "x(" + std::to_string(site) + "," + std::to_string(slot) + ";" + std::to_string(comp) + ")";
    }
};

namespace detail {
// sorted exponent vector helpers
using ExpVec = std::vector<std::pair<VarId, int>>;

inline int get_exp(const ExpVec& v, const VarId& var) {
    for (const auto& [w, e] : v)
        if (w == var) return e;
    return 0;
}
inline void set_exp(ExpVec& v, const VarId& var, int e) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (it->first == var) {
            if (e == 0) v.erase(it);
            else it->second = e;
            return;
        }
        if (var < it->first) {
            if (e != 0) v.insert(it, {var, e});
            return;
        }
    }
    if (e != 0) v.emplace_back(var, e);
}
inline ExpVec merge_exps(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    return r;
}
}  // namespace detail

struct WeylMonomial {
    detail::ExpVec x_exps;  // nonnegative
    detail::ExpVec d_exps;  // nonnegative

    friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;

    int x_degree() const {
        int d = 0;
        for (auto& [v, e] : x_exps) d += e;
        return d;
    }
    std::string to_string() const {
        std::string s;
        for (auto& [v, e] : x_exps) {
            s += v.to_string();
            if (e > 1) s += "^" + std::to_string(e);
        }
        for (auto& [v, e] : d_exps) {
            s += "d[" + v.to_string() + "]";
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }
};

// monomial of the polynomial function space
struct Monomial {
    detail::ExpVec exps;

    static Monomial one() { return {}; }
    static Monomial var(const VarId& v, int e = 1) {
        Monomial m;
        if (e != 0) m.exps.emplace_back(v, e);
        return m;
    }
    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }
    int exponent_of(const VarId& v) const { return detail::get_exp(exps, v); }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const {
        if (exps.empty()) return "1";
        std::string s;
        for (auto& [v, e] : exps) {
            if (!s.empty()) s += "*";
            s += v.to_string();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

class WeylOp;

// Linear combination of monomial states with ParamPoly coefficients.
// Variables listed in `symbolic_bases` carry a symbolic power: the state
// component stores an integer offset s and represents x^(base+s); their
// exponents may be negative. All other exponents are nonnegative.
class PolyState {
public:
    PolyState() = default;
    static PolyState of(const Monomial& m, ParamPoly c = ParamPoly(Rational(1))) {
        PolyState s;
        if (!c.is_zero()) s.terms_[m] = std::move(c);
        return s;
    }

    const std::map<Monomial, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& m, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    friend PolyState operator+(const PolyState& a, const PolyState& b) {
        PolyState r = a;
        for (const auto& [m, c] : b.terms_) r.add(m, c);
        return r;
    }
    friend PolyState operator-(const PolyState& a, const PolyState& b) { return a + b * Rational(-1); }
    friend PolyState operator*(const PolyState& a, const Rational& s) {
        PolyState r;
        for (const auto& [m, c] : a.terms_) r.add(m, c * s);
        return r;
    }
    friend PolyState operator*(const PolyState& a, const ParamPoly& s) {
        PolyState r;
        for (const auto& [m, c] : a.terms_) r.add(m, c * s);
        return r;
    }
    friend bool operator==(const PolyState&, const PolyState&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*" + m.to_string();
        }
        return s;
    }

private:
    std::map<Monomial, ParamPoly> terms_;
};

class WeylOp {
public:
    WeylOp() = default;
    WeylOp(Rational c) : WeylOp(ParamPoly(std::move(c))) {}
    WeylOp(const ParamPoly& c) {
        if (!c.is_zero()) terms_[WeylMonomial{}] = c;
    }
    WeylOp(const AffineForm& a) : WeylOp(ParamPoly(a)) {}

    static WeylOp one() { return WeylOp(Rational(1)); }
    static WeylOp x(const VarId& v, int e = 1) {
        WeylOp o;
        WeylMonomial m;
        detail::set_exp(m.x_exps, v, e);
        o.terms_[m] = ParamPoly(Rational(1));
        return o;
    }
    static WeylOp d(const VarId& v, int e = 1) {
        WeylOp o;
        WeylMonomial m;
        detail::set_exp(m.d_exps, v, e);
        o.terms_[m] = ParamPoly(Rational(1));
        return o;
    }

    const std::map<WeylMonomial, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend WeylOp operator+(const WeylOp& a, const WeylOp& b) {
        WeylOp r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend WeylOp operator-(const WeylOp& a) { return a * ParamPoly(Rational(-1)); }
    friend WeylOp operator-(const WeylOp& a, const WeylOp& b) { return a + (-b); }
    friend WeylOp operator*(const WeylOp& a, const ParamPoly& s) {
        WeylOp r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
        return r;
    }
    friend WeylOp operator*(const ParamPoly& s, const WeylOp& a) { return a * s; }
    friend WeylOp operator*(const WeylOp& a, const Rational& s) { return a * ParamPoly(s); }

    // normal-ordered product
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b) {
        WeylOp r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.mul_monomials(ma, mb, ca * cb);
        return r;
    }
    WeylOp& operator+=(const WeylOp& o) { for (const auto& [m, c] : o.terms_) add_term(m, c); return *this; }
    WeylOp& operator-=(const WeylOp& o) { *this = *this - o; return *this; }
    WeylOp& operator*=(const WeylOp& o) { *this = *this * o; return *this; }

    friend bool operator==(const WeylOp&, const WeylOp&) = default;

    static WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

    WeylOp substitute_param(const Param& p, const AffineForm& value) const {
        WeylOp r;
        for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(p, value));
        return r;
    }
    WeylOp substitute_params(const std::map<Param, Rational>& assignment) const {
        WeylOp r;
        for (const auto& [m, c] : terms_) r.add_term(m, c.substitute_all(assignment));
        return r;
    }
    int degree_in_param(const Param& p) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, c.degree_in(p));
        return d;
    }
    WeylOp coeff_of_param(const Param& p, int k) const {
        WeylOp r;
        for (const auto& [m, c] : terms_) r.add_term(m, c.coeff_of(p, k));
        return r;
    }

    // maximal x-degree gain over the function space
    int degree_gain() const {
        int g = 0;
        for (const auto& [m, c] : terms_) {
            int dx = 0, dd = 0;
            for (auto& [v, e] : m.x_exps) dx += e;
            for (auto& [v, e] : m.d_exps) dd += e;
            g = std::max(g, dx - dd);
        }
        return g;
    }

    // exact action on a state; `symbolic_bases` maps designated variables to
    // the affine base exponent they carry (their state exponents are offsets)
    PolyState apply(const PolyState& state,
                    const std::map<VarId, AffineForm>& symbolic_bases = {}) const {
        PolyState out;
        for (const auto& [sm, sc] : state.terms()) {
            for (const auto& [wm, wc] : terms_) {
                ParamPoly coeff = wc * sc;
                Monomial m = sm;
                bool dead = false;
                for (const auto& [v, b] : wm.d_exps) {
                    int e = m.exponent_of(v);
                    auto sym = symbolic_bases.find(v);
                    if (sym == symbolic_bases.end()) {
                        if (b > e) { dead = true; break; }
                        Rational fall(1);
                        for (int j = 0; j < b; ++j) fall *= Rational(e - j);
                        if (fall.is_zero()) { dead = true; break; }
                        coeff = coeff * fall;
                    } else {
                        ParamPoly base(sym->second);
                        for (int j = 0; j < b; ++j) coeff *= base + ParamPoly(Rational(e - j));
                        if (coeff.is_zero()) { dead = true; break; }
                    }
                    detail::set_exp(m.exps, v, e - b);
                }
                if (dead) continue;
                for (const auto& [v, a] : wm.x_exps)
                    detail::set_exp(m.exps, v, m.exponent_of(v) + a);
                out.add(m, coeff);
            }
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*" + m.to_string();
        }
        return s;
    }

private:
    std::map<WeylMonomial, ParamPoly> terms_;

    void add_term(const WeylMonomial& m, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // (x^a1 d^b1)(x^a2 d^b2): reorder d^b1 x^a2 per shared variable with
    // d^b x^g = sum_k C(b,k) g!/(g-k)! x^(g-k) d^(b-k)
    void mul_monomials(const WeylMonomial& m1, const WeylMonomial& m2, const ParamPoly& coeff) {
        struct Shared {
            VarId v;
            int b1, a2;
        };
        std::vector<Shared> shared;
        for (const auto& [v, b] : m1.d_exps) {
            int a2 = detail::get_exp(m2.x_exps, v);
            if (a2 > 0) shared.push_back({v, b, a2});
        }
        if (shared.empty()) {
            WeylMonomial m;
            m.x_exps = detail::merge_exps(m1.x_exps, m2.x_exps);
            m.d_exps = detail::merge_exps(m1.d_exps, m2.d_exps);
            add_term(m, coeff);
            return;
        }
        // iterate over contraction counts per shared variable
        std::vector<int> k(shared.size(), 0);
        while (true) {
            Rational factor(1);
            for (size_t i = 0; i < shared.size(); ++i) {
                // d^b x^g = sum_k C(b,k) * (g falling k) * x^(g-k) d^(b-k)
                long long b = shared[i].b1, g = shared[i].a2, kk = k[i];
                factor *= binomial_coeff(b, kk) * factorial(g) / factorial(g - kk);
            }
            WeylMonomial m;
            detail::ExpVec x2 = m2.x_exps, d1 = m1.d_exps;
            for (size_t i = 0; i < shared.size(); ++i) {
                detail::set_exp(x2, shared[i].v, shared[i].a2 - k[i]);
                detail::set_exp(d1, shared[i].v, shared[i].b1 - k[i]);
            }
            m.x_exps = detail::merge_exps(m1.x_exps, x2);
            m.d_exps = detail::merge_exps(d1, m2.d_exps);
            add_term(m, coeff * factor);
            // next multi-index
            size_t i = 0;
            for (; i < shared.size(); ++i) {
                if (k[i] < std::min(shared[i].b1, shared[i].a2)) {
                    ++k[i];
                    for (size_t j = 0; j < i; ++j) k[j] = 0;
                    break;
                }
            }
            if (i == shared.size()) break;
        }
    }
};

// all monomials of total degree <= d in the given variables, sorted
inline std::vector<Monomial> monomial_basis(const std::vector<VarId>& vars, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == vars.size()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            if (e) detail::set_exp(cur.exps, vars[i], e);
            self(self, i + 1, remaining - e);
            if (e) detail::set_exp(cur.exps, vars[i], 0);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

struct ActionMatrix {
    std::vector<Monomial> domain;   // columns
    std::vector<Monomial> codomain; // rows
    std::vector<std::vector<ParamPoly>> entries;  // [row][col]
};

inline ActionMatrix matrix_of_action(const WeylOp& f, const std::vector<VarId>& vars, int d) {
    ActionMatrix m;
    m.domain = monomial_basis(vars, d);
    m.codomain = monomial_basis(vars, d + std::max(0, f.degree_gain()));
    std::map<Monomial, size_t> row_index;
    for (size_t i = 0; i < m.codomain.size(); ++i) row_index[m.codomain[i]] = i;
    m.entries.assign(m.codomain.size(), std::vector<ParamPoly>(m.domain.size()));
    for (size_t col = 0; col < m.domain.size(); ++col) {
        PolyState r = f.apply(PolyState::of(m.domain[col]));
        for (const auto& [mono, c] : r.terms()) {
            auto it = row_index.find(mono);
            if (it == row_index.end()) throw std::logic_error("matrix_of_action: image escapes codomain basis");
            m.entries[it->second][col] = c;
        }
    }
    return m;
}

// Jordan-Schwinger gl(n) generators on one site: minus: -d_a x_b, plus: x_a d_b
inline WeylOp js_generator(int n, bool minus, int a, int b, int site = 1) {
    (void)n;
    VarId va = VarId::at(site, a), vb = VarId::at(site, b);
    if (minus) return -(WeylOp::d(va) * WeylOp::x(vb));
    return WeylOp::x(va) * WeylOp::d(vb);
}

}  // namespace yangian
