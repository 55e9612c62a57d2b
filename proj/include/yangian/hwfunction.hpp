#pragma once

// Determinant-power calculus for highest-weight functions of two adjacent
// monodromy factors, and the beta sequences of elementary adjacent
// parameter permutations with their Gamma/Beta permutation coefficients.

#include <functional>
#include <map>
#include <vector>

#include "gamma.hpp"
#include "weyl.hpp"

namespace yangian {

// the ordered nN parameter array; position (I, a) holds the value 2l^I_a
struct ParamArray {
    int n = 2;
    int N = 2;
    std::vector<std::vector<AffineForm>> vals;  // [I-1][a-1]

    static ParamArray symbolic(int n, int N) {
        ParamArray p;
        p.n = n;
        p.N = N;
        p.vals.assign(N, {});
        for (int I = 1; I <= N; ++I)
            for (int a = 1; a <= n; ++a) p.vals[I - 1].push_back(AffineForm(Param::ell(I, a)));
        return p;
    }

    const AffineForm& at(int I, int a) const { return vals[I - 1][a - 1]; }
    AffineForm& at(int I, int a) { return vals[I - 1][a - 1]; }
    // slot s of site I holds position a = n - s + 1
    const AffineForm& at_slot(int I, int s) const { return at(I, n - s + 1); }
    AffineForm& at_slot(int I, int s) { return at(I, n - s + 1); }

    friend bool operator==(const ParamArray&, const ParamArray&) = default;

    std::vector<AffineForm> flat() const {
        std::vector<AffineForm> f;
        for (auto& site : vals) f.insert(f.end(), site.begin(), site.end());
        return f;
    }

    // display order: per site, positions n down to 1
    std::string to_string() const {
        std::string s;
        for (int I = 1; I <= N; ++I) {
            if (I > 1) s += "; ";
            for (int a = n; a >= 1; --a) {
                s += at(I, a).to_string();
                if (a > 1) s += ", ";
            }
        }
        return s;
    }
};

// multiset equality of the carried values
inline bool permutation_related(const ParamArray& a, const ParamArray& b) {
    std::vector<AffineForm> fa = a.flat(), fb = b.flat();
    if (fa.size() != fb.size()) return false;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return fa == fb;
}

// --- symbolic determinant factors f(x^{1,i}, x^{2,j}) ------------------------
//
// f(i, j) = det(x^{1,1}, ..., x^{1,i-1}, x^{1,i+1}, ..., x^{1,n}, x^{2,j})
// in the normal-coordinate column vectors x^{I,s} = (x^{I,s}_1, ..,
// x^{I,s}_{n-s}, 1, 0, .., 0).

// exact polynomial expansion (used for signs and the explicit cross-checks)
inline std::map<Monomial, Rational> det_factor_polynomial(int n, int i, int j, int site1 = 1,
                                                          int site2 = 2) {
    std::vector<std::pair<int, int>> cols;  // (site, slot)
    for (int s = 1; s <= n; ++s)
        if (s != i) cols.emplace_back(site1, s);
    cols.emplace_back(site2, j);
    auto entry = [&](int row, const std::pair<int, int>& col) -> std::optional<Monomial> {
        auto [site, slot] = col;
        if (row <= n - slot) return Monomial::var(VarId{site, slot, row});
        if (row == n - slot + 1) return Monomial::one();
        return std::nullopt;  // zero entry
    };
    std::map<Monomial, Rational> out;
    std::vector<int> perm(n);
    for (int r = 0; r < n; ++r) perm[r] = r;
    do {
        int sign = 1;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) sign = -sign;
        Monomial m;
        bool dead = false;
        for (int c = 0; c < n; ++c) {
            auto e = entry(perm[c] + 1, cols[c]);
            if (!e) { dead = true; break; }
            m.exps = detail::merge_exps(m.exps, e->exps);
        }
        if (dead) continue;
        auto it = out.find(m);
        if (it == out.end()) out.emplace(m, Rational(sign));
        else {
            it->second += Rational(sign);
            if (it->second.is_zero()) out.erase(it);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// f(x^{1,j}, x^{2,j}) is the constant +-1; returns that sign
inline int matching_slot_sign(int n, int j) {
    auto p = det_factor_polynomial(n, j, j);
    if (p.size() != 1 || !p.begin()->first.exps.empty())
        throw std::logic_error("matching_slot_sign: determinant is not constant");
    const Rational& c = p.begin()->second;
    if (c == Rational(1)) return 1;
    if (c == Rational(-1)) return -1;
    throw std::logic_error("matching_slot_sign: determinant is not a unit");
}

// highest-weight function: product of determinant powers times a coefficient
struct HWFunction {
    int n = 2;
    std::map<std::pair<int, int>, AffineForm> factors;  // (i, j) -> exponent
    GammaProduct coeff;
    ParamArray params;

    static HWFunction one(const ParamArray& p) {
        HWFunction h;
        h.n = p.n;
        h.params = p;
        return h;
    }

    bool state_is_one() const { return factors.empty(); }

    void mul_factor(int i, int j, const AffineForm& e) {
        if (e.is_zero()) return;
        auto key = std::make_pair(i, j);
        auto it = factors.find(key);
        if (it == factors.end()) factors.emplace(key, e);
        else {
            it->second += e;
            if (it->second.is_zero()) factors.erase(it);
        }
    }

    std::string state_string() const {
        if (factors.empty()) return "1";
        std::string s;
        for (const auto& [k, e] : factors) {
            if (!s.empty()) s += " * ";
            s += "f(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")^(" +
                 e.to_string() + ")";
        }
        return s;
    }
};

// Removes matching-slot factors. Their values are the unit constants of
// matching_slot_sign; the orientation sign is absorbed into the contour
// normalization of the elementary permutation steps, matching the stated
// Beta-product coefficients.
inline HWFunction det_normalize(HWFunction h) {
    std::vector<std::pair<int, int>> drop;
    for (const auto& [key, e] : h.factors)
        if (key.first == key.second) drop.push_back(key);
    for (auto& key : drop) h.factors.erase(key);
    return h;
}

// --- elementary beta steps ----------------------------------------------------

// S^1_{k,k+1}(w): consumes the unique factor with missing slot i = k+1
inline HWFunction beta_step_S1(int k, const AffineForm& w, HWFunction h) {
    std::vector<std::pair<int, int>> active;
    for (const auto& [key, e] : h.factors)
        if (key.first == k + 1) active.push_back(key);
    if (active.size() != 1)
        throw NotBetaAdmissible("beta_step_S1: " + std::to_string(active.size()) +
                                " active factors for slot pair (" + std::to_string(k) + "," +
                                std::to_string(k + 1) + ")");
    auto [i, j] = active[0];
    AffineForm v = h.factors.at(active[0]);
    h.factors.erase(active[0]);
    h.coeff.mul(beta(w, v + AffineForm(Rational(1))));
    h.mul_factor(k, j, -w);
    h.mul_factor(k + 1, j, w + v);
    return h;
}

// S^2_{k,k+1}(w): consumes the unique factor with second-site column j = k
inline HWFunction beta_step_S2(int k, const AffineForm& w, HWFunction h) {
    std::vector<std::pair<int, int>> active;
    for (const auto& [key, e] : h.factors)
        if (key.second == k) active.push_back(key);
    if (active.size() != 1)
        throw NotBetaAdmissible("beta_step_S2: " + std::to_string(active.size()) +
                                " active factors for slot pair (" + std::to_string(k) + "," +
                                std::to_string(k + 1) + ")");
    auto [i, j] = active[0];
    AffineForm v = h.factors.at(active[0]);
    h.factors.erase(active[0]);
    h.coeff.mul(beta(w, v + AffineForm(Rational(1))));
    h.mul_factor(i, k + 1, -w);
    h.mul_factor(i, k, w + v);
    return h;
}

// S^{12}(w): multiplication by f(n, 1)^w
inline HWFunction between_step(const AffineForm& w, HWFunction h) {
    h.mul_factor(h.n, 1, w);
    return h;
}

// --- sequences of adjacent permutations --------------------------------------

enum class StepKind { S1, S2, S12 };

struct Step {
    StepKind kind;
    int k = 0;  // slot pair (k, k+1) for S1/S2
};

struct StepTraceEntry {
    Step step;
    AffineForm argument;
    std::string state_after;
    GammaProduct coeff_after;
    std::string params_after;
};

// executes a sequence with arguments generated from the current array:
//   S1/S2: w = value at slot k+1 minus value at slot k (of site 1 / site 2)
//   S12:   w = value at (1, position 1) minus value at (2, position n)
// and applies the corresponding transposition to the array after each step.
inline HWFunction run_sequence(const std::vector<Step>& steps, HWFunction h,
                               std::vector<StepTraceEntry>* trace = nullptr) {
    for (const Step& st : steps) {
        AffineForm w;
        switch (st.kind) {
            case StepKind::S1:
                w = h.params.at_slot(1, st.k + 1) - h.params.at_slot(1, st.k);
                h = beta_step_S1(st.k, w, std::move(h));
                std::swap(h.params.at_slot(1, st.k + 1), h.params.at_slot(1, st.k));
                break;
            case StepKind::S2:
                w = h.params.at_slot(2, st.k + 1) - h.params.at_slot(2, st.k);
                h = beta_step_S2(st.k, w, std::move(h));
                std::swap(h.params.at_slot(2, st.k + 1), h.params.at_slot(2, st.k));
                break;
            case StepKind::S12:
                w = h.params.at(1, 1) - h.params.at(2, h.params.n);
                h = between_step(w, std::move(h));
                std::swap(h.params.at(1, 1), h.params.at(2, h.params.n));
                break;
        }
        h = det_normalize(std::move(h));
        if (trace) trace->push_back({st, w, h.state_string(), h.coeff, h.params.to_string()});
    }
    return h;
}

// the S^1 steps may start from the constant function only through the first
// S12 factor; an S1/S2 step on a state with no active factor is rejected by
// the step functions themselves (NotBetaAdmissible)

// block permuting the value at site-1 slot i with the value at (2, position n)
inline std::vector<Step> block_seq_i1(int n, int i) {
    std::vector<Step> s;
    s.push_back({StepKind::S12});
    for (int k = n - 1; k >= i + 1; --k) s.push_back({StepKind::S1, k});
    s.push_back({StepKind::S1, i});
    for (int k = i + 1; k <= n - 1; ++k) s.push_back({StepKind::S1, k});
    s.push_back({StepKind::S12});
    return s;
}

// block permuting the value at (1, position 1) with the value at site-2 slot i
inline std::vector<Step> block_seq_i2(int n, int i) {
    (void)n;
    std::vector<Step> s;
    s.push_back({StepKind::S12});
    for (int k = 1; k <= i - 2; ++k) s.push_back({StepKind::S2, k});
    s.push_back({StepKind::S2, i - 1});
    for (int k = i - 2; k >= 1; --k) s.push_back({StepKind::S2, k});
    s.push_back({StepKind::S12});
    return s;
}

// inner (unbracketed) versions
inline std::vector<Step> inner_seq_i1(int n, int i) {
    auto s = block_seq_i1(n, i);
    return std::vector<Step>(s.begin() + 1, s.end() - 1);
}
inline std::vector<Step> inner_seq_i2(int n, int i) {
    auto s = block_seq_i2(n, i);
    return std::vector<Step>(s.begin() + 1, s.end() - 1);
}

// 1-to-1 sequence swapping the position-i parameters of the two sites
inline std::vector<Step> sigma12_seq(int n, int i) {
    std::vector<Step> s;
    if (i == n) {  // through site 1
        s.push_back({StepKind::S12});
        for (int k = n - 1; k >= 1; --k) s.push_back({StepKind::S1, k});
        for (int k = 2; k <= n - 1; ++k) s.push_back({StepKind::S1, k});
        s.push_back({StepKind::S12});
        return s;
    }
    if (i == 1) {  // through site 2
        s.push_back({StepKind::S12});
        for (int k = 1; k <= n - 1; ++k) s.push_back({StepKind::S2, k});
        for (int k = n - 2; k >= 1; --k) s.push_back({StepKind::S2, k});
        s.push_back({StepKind::S12});
        return s;
    }
    // 2 <= i <= n-1: composite of the two block types
    int ip = n - i + 1;
    auto p1 = block_seq_i1(n, ip);
    auto p2 = inner_seq_i2(n, ip);
    auto p4 = inner_seq_i1(n, ip);
    s = p1;
    s.insert(s.end(), p2.begin(), p2.end());
    s.push_back({StepKind::S12});
    s.insert(s.end(), p4.begin(), p4.end());
    s.push_back({StepKind::S12});
    return s;
}

struct SequenceResult {
    HWFunction final_state;
    GammaProduct coeff;
    std::vector<StepTraceEntry> trace;
};

inline SequenceResult run_from_one(const std::vector<Step>& steps, const ParamArray& start,
                                   bool want_trace = false) {
    SequenceResult r;
    HWFunction h = HWFunction::one(start);
    std::vector<StepTraceEntry> trace;
    h = run_sequence(steps, std::move(h), want_trace ? &trace : nullptr);
    r.coeff = h.coeff;
    r.final_state = std::move(h);
    r.trace = std::move(trace);
    return r;
}

// executes a 1-to-1 sequence and checks the state returns to the constant 1
inline SequenceResult run_one_to_one(const std::vector<Step>& steps, const ParamArray& start,
                                     bool want_trace = false) {
    SequenceResult r = run_from_one(steps, start, want_trace);
    if (!r.final_state.state_is_one())
        throw NonUnitResidual("sequence left a determinant residue: " + r.final_state.state_string());
    return r;
}

// --- closed forms ------------------------------------------------------------

// closed form of the block_seq_i1 coefficient in terms of the starting array:
// with La := value at (2, pos n), Lbar_s := value at site-1 slot s,
//   left:   prod_{t=1}^{n-i-1} B(La - Lbar_{n-t}, Lbar_{n-t+1} - La + 1)
//   middle: B(La - Lbar_i, Lbar_{i+1} - La + 1)
//   right:  prod_{t} B(Lbar_{s} - Lbar_i, Lbar_{s+1} - Lbar_{s} + 1), s = i+1..n-1
inline GammaProduct block_i1_closed_form(int n, int i, const ParamArray& start) {
    AffineForm la = start.at(2, start.n);
    auto lbar = [&](int s) { return start.at_slot(1, s); };
    GammaProduct g;
    for (int t = 1; t <= n - i - 1; ++t)
        g.mul(beta(la - lbar(n - t), lbar(n - t + 1) - la + AffineForm(Rational(1))));
    g.mul(beta(la - lbar(i), lbar(i + 1) - la + AffineForm(Rational(1))));
    for (int s = n - 1; s >= i + 1; --s)
        g.mul(beta(lbar(s) - lbar(i), lbar(s + 1) - lbar(s) + AffineForm(Rational(1))));
    return g;
}

// closed form of the block_seq_i2 coefficient:
// with Lbar := value at (1, pos 1), L_s := value at site-2 slot s,
//   left:   prod_{k=1}^{i-2} B(L_{k+1} - Lbar, Lbar - L_k + 1)
//   middle: B(L_i - Lbar, Lbar - L_{i-1} + 1)
//   back:   prod_{k=1}^{i-2} B(L_i - L_{k+1}, L_{k+1} - L_k + 1)
inline GammaProduct block_i2_closed_form(int n, int i, const ParamArray& start) {
    (void)n;
    AffineForm lbar = start.at(1, 1);
    auto lv = [&](int s) { return start.at_slot(2, s); };
    GammaProduct g;
    for (int k = 1; k <= i - 2; ++k)
        g.mul(beta(lv(k + 1) - lbar, lbar - lv(k) + AffineForm(Rational(1))));
    g.mul(beta(lv(i) - lbar, lbar - lv(i - 1) + AffineForm(Rational(1))));
    for (int k = 1; k <= i - 2; ++k)
        g.mul(beta(lv(i) - lv(k + 1), lv(k + 1) - lv(k) + AffineForm(Rational(1))));
    return g;
}

// closed form of the full 1-to-1 swap of the position-i parameters,
// assembled from the three blocks of the composite sequence; a := site-1
// values, b := site-2 values of the starting array
inline GammaProduct sigma12_i_closed_form(int n, int i, const ParamArray& start) {
    auto a = [&](int k) { return start.at(1, k); };
    auto b = [&](int k) { return start.at(2, k); };
    const AffineForm one(Rational(1));
    if (i == n) { /* handled by sigma12_n_closed_form */ }
    GammaProduct g = block_i1_closed_form(n, n - i + 1, start);
    // middle block through the second site
    for (int j = i + 1; j <= n - 1; ++j) g.mul(beta(b(j) - a(i), a(i) - b(j + 1) + one));
    g.mul(beta(b(i) - a(i), a(i) - b(i + 1) + one));
    for (int j = i + 1; j <= n - 1; ++j) g.mul(beta(b(i) - b(j), b(j) - b(j + 1) + one));
    // closing block through the first site
    for (int m = 2; m <= i - 1; ++m) g.mul(beta(b(i) - a(m), a(m - 1) - b(i) + one));
    g.mul(beta(b(i) - b(n), a(i - 1) - b(i) + one));
    for (int m = 2; m <= i - 1; ++m) g.mul(beta(a(m) - b(n), a(m - 1) - a(m) + one));
    return g;
}

// corrected closed form for the full position-n swap through site 1:
//   prod_{k=1}^{n-1} B(l2n - l1_{k+1}, l1_k - l2n + 1)
//   prod_{k=1}^{n-2} B(l1_{k+1} - l1_n, l1_k - l1_{k+1} + 1)
inline GammaProduct sigma12_n_closed_form(int n, const ParamArray& start) {
    AffineForm l2n = start.at(2, n);
    auto l1 = [&](int a) { return start.at(1, a); };
    GammaProduct g;
    for (int k = 1; k <= n - 1; ++k)
        g.mul(beta(l2n - l1(k + 1), l1(k) - l2n + AffineForm(Rational(1))));
    for (int k = 1; k <= n - 2; ++k)
        g.mul(beta(l1(k + 1) - l1(n), l1(k) - l1(k + 1) + AffineForm(Rational(1))));
    return g;
}

}  // namespace yangian
