#pragma once

// L matrices: Jordan-Schwinger form, its restriction to homogeneous
// functions in normal coordinates, and the Biedenharn constraint
// construction of the generic first-order evaluation. Monodromies,
// quantum determinants and highest-weight verification.

#include <set>
#include <vector>

#include "errors.hpp"
#include "weyl.hpp"

namespace yangian {

enum class LKind { JsMinus, JsPlus, JsRestricted, Biedenharn, Composite };

struct LMatrix {
    int n = 0;
    LKind kind = LKind::Composite;
    int site = 1;
    std::vector<std::vector<WeylOp>> entries;  // n x n, 1-based math indices shifted by -1

    const WeylOp& at(int a, int b) const { return entries[a - 1][b - 1]; }
    WeylOp& at(int a, int b) { return entries[a - 1][b - 1]; }

    static LMatrix identity(int n) {
        LMatrix m;
        m.n = n;
        m.entries.assign(n, std::vector<WeylOp>(n));
        for (int a = 0; a < n; ++a) m.entries[a][a] = WeylOp::one();
        return m;
    }

    LMatrix substitute_param(const Param& p, const AffineForm& value) const {
        LMatrix r = *this;
        for (auto& row : r.entries)
            for (auto& e : row) e = e.substitute_param(p, value);
        return r;
    }

    friend LMatrix operator*(const LMatrix& A, const LMatrix& B) {
        if (A.n != B.n) throw std::invalid_argument("LMatrix: rank mismatch");
        LMatrix r;
        r.n = A.n;
        r.kind = LKind::Composite;
        r.entries.assign(A.n, std::vector<WeylOp>(A.n));
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b) {
                WeylOp s;
                for (int c = 0; c < A.n; ++c) s += A.entries[a][c] * B.entries[c][b];
                r.entries[a][b] = s;
            }
        return r;
    }
    friend bool operator==(const LMatrix& A, const LMatrix& B) {
        return A.n == B.n && A.entries == B.entries;
    }

    std::set<VarId> variables() const {
        std::set<VarId> vs;
        for (const auto& row : entries)
            for (const auto& e : row)
                for (const auto& [m, c] : e.terms()) {
                    for (const auto& [v, ex] : m.x_exps) vs.insert(v);
                    for (const auto& [v, ex] : m.d_exps) vs.insert(v);
                }
        return vs;
    }
};

// --- Jordan-Schwinger L matrices -------------------------------------------

// L(u) = u I + L^-, L^-_ab = -d_a x_b  (or L^+_ab = x_a d_b)
inline LMatrix js_L(int n, bool minus, int site = 1) {
    if (n < 2) throw RankTooSmall("js_L: rank must be >= 2");
    LMatrix m;
    m.n = n;
    m.kind = minus ? LKind::JsMinus : LKind::JsPlus;
    m.site = site;
    m.entries.assign(n, std::vector<WeylOp>(n));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            WeylOp e = js_generator(n, minus, a, b, site);
            if (a == b) e += WeylOp(ParamPoly(Param::u()));
            m.entries[a - 1][b - 1] = e;
        }
    return m;
}

// Restriction of the JS minus form to homogeneous functions of degree 2l,
// written in the ratio coordinates x'_a = x_a / x_p around the projection
// position p = n - k. Entries depend on the two spectral slots (u_minus, u)
// with u - u_minus playing the role of 2l.
inline LMatrix js_restricted_L(int n, const AffineForm& u_slot, const AffineForm& uminus_slot,
                               int site = 1, int k = 0) {
    if (n < 2) throw RankTooSmall("js_restricted_L: rank must be >= 2");
    int p = n - k;
    if (p < 1 || p > n) throw std::invalid_argument("js_restricted_L: bad cyclic index");
    AffineForm two_ell = u_slot - uminus_slot;
    LMatrix m;
    m.n = n;
    m.kind = LKind::JsRestricted;
    m.site = site;
    m.entries.assign(n, std::vector<WeylOp>(n));
    WeylOp euler;  // sum over remaining ratio coordinates
    for (int c = 1; c <= n; ++c)
        if (c != p) euler += WeylOp::x(VarId::at(site, c)) * WeylOp::d(VarId::at(site, c));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            WeylOp e;
            if (a != p && b != p) {
                e = -(WeylOp::d(VarId::at(site, a)) * WeylOp::x(VarId::at(site, b)));
                if (a == b) e += WeylOp(u_slot);
            } else if (a != p && b == p) {
                e = -WeylOp::d(VarId::at(site, a));
            } else if (a == p && b != p) {
                e = -(WeylOp(two_ell) + WeylOp(Rational(1)) - euler) * WeylOp::x(VarId::at(site, b));
            } else {
                e = WeylOp(uminus_slot) - WeylOp::one() + euler;
            }
            m.entries[a - 1][b - 1] = e;
        }
    return m;
}

// the rank-two case in one normal coordinate, u_minus = u - 2l
inline LMatrix restricted_L_gl2(const AffineForm& two_ell, int site = 1) {
    return js_restricted_L(2, AffineForm(Param::u()), AffineForm(Param::u()) - two_ell, site, 0);
}

// --- ordered-factor engine for the Biedenharn constraint construction ------
//
// Terms keep their factors as an ordered list so that the constraint
// substitutions happen at the position prescribed by the construction
// (solved momenta inserted in place, ahead of the x factors to their right).
namespace biedenharn_detail {

enum class AtomType { X, D, XInv };

struct Atom {
    AtomType type;
    int slot;
    int comp;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct OrderedTerm {
    ParamPoly coeff;
    std::vector<Atom> atoms;
};

using OrderedOp = std::vector<OrderedTerm>;

inline OrderedOp op_scalar(ParamPoly c) { return {OrderedTerm{std::move(c), {}}}; }

inline OrderedOp mul(const OrderedOp& a, const OrderedOp& b) {
    OrderedOp r;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            OrderedTerm t;
            t.coeff = ta.coeff * tb.coeff;
            if (t.coeff.is_zero()) continue;
            t.atoms = ta.atoms;
            t.atoms.insert(t.atoms.end(), tb.atoms.begin(), tb.atoms.end());
            r.push_back(std::move(t));
        }
    return r;
}
inline void add_to(OrderedOp& a, const OrderedOp& b) { a.insert(a.end(), b.begin(), b.end()); }

// replace every D(slot, comp) atom found in `subs` by its solution (in place),
// and drop terms containing gauge-killed X atoms
inline OrderedOp substitute(const OrderedOp& op, const std::map<std::pair<int, int>, OrderedOp>& d_subs,
                            const std::set<std::pair<int, int>>& x_killed) {
    OrderedOp out;
    for (const auto& term : op) {
        std::vector<OrderedOp> pieces;  // product of single-atom or substituted ops
        bool dead = false;
        for (const Atom& a : term.atoms) {
            if (a.type == AtomType::X && x_killed.count({a.slot, a.comp})) { dead = true; break; }
            if (a.type == AtomType::D) {
                auto it = d_subs.find({a.slot, a.comp});
                if (it != d_subs.end()) { pieces.push_back(it->second); continue; }
            }
            pieces.push_back({OrderedTerm{ParamPoly(Rational(1)), {a}}});
        }
        if (dead) continue;
        OrderedOp acc = op_scalar(term.coeff);
        for (const auto& p : pieces) acc = mul(acc, p);
        add_to(out, acc);
    }
    return out;
}

}  // namespace biedenharn_detail

// Generic first-order evaluation L matrix built from the n-fold JS product by
// imposing the triangular constraint systems, projecting the Euler operators
// onto the weight parameters, and dividing out the forced u power.
// two_ell[a-1] is the parameter 2l_a attached to position a; the slot-i
// factor is projected at position p_i = n-i+1 with parameter 2l_{p_i}.
// Reduced variables are VarId{site, slot=i, comp=a}, a = 1..n-i.
inline LMatrix biedenharn_L(int n, const std::vector<AffineForm>& two_ell, int site = 1) {
    using namespace biedenharn_detail;
    if (n < 2) throw RankTooSmall("biedenharn_L: rank must be >= 2");
    if (static_cast<int>(two_ell.size()) != n)
        throw std::invalid_argument("biedenharn_L: need n weight parameters");
    const Param u = Param::u();

    // slot-i JS factor as ordered ops
    auto factor = [&](int slot) {
        std::vector<std::vector<OrderedOp>> m(n, std::vector<OrderedOp>(n));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                OrderedOp e;
                if (a == b) e.push_back(OrderedTerm{ParamPoly(u), {}});
                e.push_back(OrderedTerm{ParamPoly(Rational(-1)),
                                        {Atom{AtomType::D, slot, a}, Atom{AtomType::X, slot, b}}});
                m[a - 1][b - 1] = e;
            }
        return m;
    };

    // ordered matrix product of the n factors
    std::vector<std::vector<OrderedOp>> prod = factor(1);
    for (int slot = 2; slot <= n; ++slot) {
        auto f = factor(slot);
        std::vector<std::vector<OrderedOp>> next(n, std::vector<OrderedOp>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                OrderedOp s;
                for (int c = 0; c < n; ++c) add_to(s, mul(prod[a][c], f[c][b]));
                next[a][b] = s;
            }
        prod = std::move(next);
    }

    // solve the constraint systems: slot i eliminates d^i_a, a = p_i+1..n
    std::map<std::pair<int, int>, OrderedOp> d_subs;
    std::set<std::pair<int, int>> x_killed;
    for (int slot = 2; slot <= n; ++slot) {
        int p = n - slot + 1;
        for (int a = p + 1; a <= n; ++a) x_killed.insert({slot, a});
        // equations j = slot-1 down to 1 give d^slot_{p+1}, ..., d^slot_n
        for (int j = slot - 1; j >= 1; --j) {
            int pj = n - j + 1;  // highest unknown present in equation j; divisor x^j_{pj}
            int unknown = pj;
            if (unknown <= p) throw NonTriangular("biedenharn_L: constraint system lost triangularity");
            OrderedOp rhs;
            for (int a = 1; a <= pj; ++a) {
                if (a == unknown) continue;
                OrderedTerm t;
                t.coeff = ParamPoly(Rational(-1));
                t.atoms = {Atom{AtomType::X, j, a}, Atom{AtomType::XInv, j, pj}};
                OrderedOp piece{t};
                if (a > p) {
                    auto it = d_subs.find({slot, a});
                    if (it == d_subs.end()) throw NonTriangular("biedenharn_L: unsolved lower momentum");
                    piece = mul(piece, it->second);
                } else {
                    piece = mul(piece, {OrderedTerm{ParamPoly(Rational(1)), {Atom{AtomType::D, slot, a}}}});
                }
                add_to(rhs, piece);
            }
            d_subs[{slot, unknown}] = rhs;
        }
    }

    // reduction of one ordered term to a WeylOp in the ratio variables
    auto reduce_term = [&](const OrderedTerm& term) -> WeylOp {
        // group atoms by slot, preserving order
        std::vector<std::vector<Atom>> per_slot(n + 1);
        for (const Atom& a : term.atoms) per_slot[a.slot].push_back(a);
        WeylOp result(term.coeff);
        for (int slot = 1; slot <= n; ++slot) {
            if (per_slot[slot].empty()) continue;
            int p = n - slot + 1;
            const AffineForm& ell = two_ell[p - 1];
            WeylOp euler;
            for (int c = 1; c < p; ++c)
                euler += WeylOp::x(VarId{site, slot, c}) * WeylOp::d(VarId{site, slot, c});
            WeylOp w = WeylOp::one();
            int s = 0;
            const auto& atoms = per_slot[slot];
            for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
                const Atom& a = *it;
                if (a.type == AtomType::X) {
                    if (a.comp == p) { ++s; continue; }
                    if (a.comp > p) throw std::logic_error("biedenharn_L: unreduced gauge variable");
                    w = WeylOp::x(VarId{site, slot, a.comp}) * w;
                    ++s;
                } else if (a.type == AtomType::XInv) {
                    if (a.comp != p) throw std::logic_error("biedenharn_L: inverse of non-projection variable");
                    --s;
                } else {
                    if (a.comp == p) {
                        w = (WeylOp(ell) + WeylOp(Rational(static_cast<long long>(s))) - euler) * w;
                        --s;
                    } else if (a.comp < p) {
                        w = WeylOp::d(VarId{site, slot, a.comp}) * w;
                        --s;
                    } else {
                        throw std::logic_error("biedenharn_L: unsubstituted eliminated momentum");
                    }
                }
            }
            if (s != 0) throw std::logic_error("biedenharn_L: slot degree imbalance after reduction");
            result = result * w;
        }
        return result;
    };

    LMatrix out;
    out.n = n;
    out.kind = LKind::Biedenharn;
    out.site = site;
    out.entries.assign(n, std::vector<WeylOp>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            OrderedOp sub = substitute(prod[a][b], d_subs, x_killed);
            WeylOp e;
            for (const auto& term : sub) e += reduce_term(term);
            // divide out the forced u power so the evaluation is first order
            WeylOp divided;
            for (const auto& [m, c] : e.terms()) {
                WeylOp one_term;
                one_term += WeylOp(c.divide_by_power(u, n - 1));
                WeylMonomial mono = m;
                WeylOp shell;
                shell += WeylOp(Rational(1));
                // reattach the monomial
                WeylOp xpart = WeylOp::one();
                for (auto& [v, ex] : mono.x_exps) xpart *= WeylOp::x(v, ex);
                for (auto& [v, ex] : mono.d_exps) xpart *= WeylOp::d(v, ex);
                divided += one_term * xpart;
            }
            out.entries[a][b] = divided;
        }

    // cheap internal consistency check at rank two: the composite of the two
    // projected factors reproduces u * result entrywise
    if (n == 2) {
        LMatrix l1 = js_restricted_L(2, AffineForm(u), AffineForm(u) - two_ell[1], site, 0);
        // second factor after constraints: nonzero first column only
        LMatrix l2 = LMatrix::identity(2);
        l2.entries[0][0] = WeylOp(AffineForm(u) - two_ell[0] - AffineForm(Rational(1)));
        l2.entries[0][1] = WeylOp();
        l2.entries[1][0] = WeylOp::x(VarId{site, 1, 1}) * WeylOp(two_ell[0] + AffineForm(Rational(1)));
        l2.entries[1][1] = WeylOp(ParamPoly(u));
        LMatrix composite = l1 * l2;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (!(composite.entries[a][b] == out.entries[a][b] * ParamPoly(u)))
                    throw std::logic_error("biedenharn_L: rank-two factor check failed");
    }
    return out;
}

// --- monodromy --------------------------------------------------------------

struct Monodromy {
    int n = 0;
    std::vector<std::pair<LMatrix, AffineForm>> factors;  // (matrix, shift delta)
    LMatrix product;  // cached ordered product with u -> u + delta substituted

    // T(u) = u^N I + u^(N-1) T[1] + ... ; T[k] = coefficient of u^(N-k)
    LMatrix coefficient(int k) const {
        LMatrix r = product;
        int N = static_cast<int>(factors.size());
        for (auto& row : r.entries)
            for (auto& e : row) e = e.coeff_of_param(Param::u(), N - k);
        return r;
    }
};

inline Monodromy monodromy(const std::vector<std::pair<LMatrix, AffineForm>>& factors) {
    Monodromy m;
    if (factors.empty()) throw std::invalid_argument("monodromy: need at least one factor");
    m.n = factors[0].first.n;
    m.factors = factors;
    std::set<VarId> seen;
    LMatrix prod = LMatrix::identity(m.n);
    bool first = true;
    for (const auto& [L, delta] : factors) {
        if (L.n != m.n) throw std::invalid_argument("monodromy: rank mismatch");
        for (const VarId& v : L.variables())
            if (!seen.insert(v).second)
                throw SiteCollision("monodromy: factors share variable " + v.to_string());
        LMatrix shifted = delta.is_zero() ? L : L.substitute_param(Param::u(), AffineForm(Param::u()) + delta);
        prod = first ? shifted : prod * shifted;
        first = false;
    }
    m.product = prod;
    return m;
}

// --- quantum determinant ----------------------------------------------------

namespace qdet_detail {
inline void permutations(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        fn(perm, sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
}
}  // namespace qdet_detail

// both orderings of the quantum determinant; throws CentralityFailure if they
// disagree (signals an upstream bug)
inline WeylOp quantum_determinant(const LMatrix& T, bool check_both = true) {
    int n = T.n;
    if (n > 4) throw std::invalid_argument("quantum_determinant: rank capped at 4");
    const Param u = Param::u();
    std::vector<LMatrix> shifted(n);  // shifted[k] = T(u - k)
    for (int k = 0; k < n; ++k)
        shifted[k] = k == 0 ? T : T.substitute_param(u, AffineForm(u) - AffineForm(Rational(k)));

    WeylOp formA, formB;
    qdet_detail::permutations(n, [&](const std::vector<int>& perm, int sign) {
        WeylOp tA = WeylOp(Rational(sign));
        for (int a = 1; a <= n; ++a) tA = tA * shifted[n - a].at(a, perm[a - 1]);
        formA += tA;
    });
    if (check_both) {
        qdet_detail::permutations(n, [&](const std::vector<int>& perm, int sign) {
            WeylOp tB = WeylOp(Rational(sign));
            for (int b = 1; b <= n; ++b) tB = tB * shifted[b - 1].at(perm[b - 1], b);
            formB += tB;
        });
        if (!(formA == formB))
            throw CentralityFailure("quantum_determinant: the two orderings disagree");
    }
    return formA;
}

inline WeylOp quantum_determinant(const Monodromy& T, bool check_both = true) {
    return quantum_determinant(T.product, check_both);
}

// --- highest-weight verification ---------------------------------------------

using WeightFunctionList = std::vector<ParamPoly>;  // lambda_a(u), a = 1..n

// verifies annihilation above the diagonal on the given monomial state and
// extracts the diagonal eigenvalue polynomials
inline WeightFunctionList check_highest_weight(const LMatrix& T, const PolyState& state,
                                               const std::map<VarId, AffineForm>& bases = {}) {
    if (state.is_zero()) throw std::invalid_argument("check_highest_weight: zero vector");
    WeightFunctionList lambdas;
    for (int a = 1; a <= T.n; ++a) {
        for (int b = a + 1; b <= T.n; ++b) {
            PolyState r = T.at(a, b).apply(state, bases);
            if (!r.is_zero())
                throw NotHighestWeight("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                       ") does not annihilate the vector: " + r.to_string());
        }
        PolyState diag = T.at(a, a).apply(state, bases);
        // must be proportional to the state with a coefficient free of the variables
        ParamPoly lambda;
        bool have = false;
        for (const auto& [m, c] : state.terms()) {
            auto it = diag.terms().find(m);
            if (it == diag.terms().end())
                throw NotHighestWeight("diagonal entry " + std::to_string(a) + " not an eigenvector");
            // candidate ratio (state coefficients are nonzero)
            // exact proportionality asserted below
            if (!have) {
                // c divides it->second only in the scalar sense for monic states;
                // all uses have state coefficients equal to 1
                if (!(c == ParamPoly(Rational(1))))
                    throw std::invalid_argument("check_highest_weight: state must have unit coefficients");
                lambda = it->second;
                have = true;
            }
        }
        if (!(diag == state * lambda))
            throw NotHighestWeight("diagonal entry " + std::to_string(a) + " not an eigenvector");
        lambdas.push_back(lambda);
    }
    return lambdas;
}

// the weight functions the construction predicts:
// lambda_a(u) = prod_I (u + delta_I - (n - a + 1) - 2l^I_a)
inline WeightFunctionList predicted_weights(int n, const std::vector<std::vector<AffineForm>>& site_params,
                                            const std::vector<AffineForm>& shifts = {}) {
    WeightFunctionList out;
    const Param u = Param::u();
    for (int a = 1; a <= n; ++a) {
        ParamPoly prod(Rational(1));
        for (size_t I = 0; I < site_params.size(); ++I) {
            AffineForm root = AffineForm(u) - AffineForm(Rational(n - a + 1)) - site_params[I][a - 1];
            if (!shifts.empty()) root += shifts[I];
            prod *= ParamPoly(root);
        }
        out.push_back(prod);
    }
    return out;
}

}  // namespace yangian
