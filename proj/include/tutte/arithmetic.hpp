#pragma once

// Arithmetic matroids: matroids with a positive multiplicity function subject
// to the divisibility (A1), molecule multiplicativity (A2) and positivity (P)
// axioms; construction from presentations of finitely generated abelian
// groups via Smith normal form; the universal arithmetic Tutte polynomial
// over the monoid ring K[Z_{>0}] (a prime axis) and its specializations; the
// bi-arithmetic convolution formula and the Backman--Lenz identities.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factor.hpp"
#include "intmatrix.hpp"
#include "matroid.hpp"
#include "minors.hpp"
#include "poly.hpp"

namespace tutte {

// disjoint triple (R, F, T) indexing a coloops+loops minor (M|RFT)/R
struct Molecule {
    uint32_t r, f, t;
};

inline bool is_molecule(const RankTable& m, uint32_t r, uint32_t f, uint32_t t) {
    if ((r & f) || (r & t) || (f & t)) return false;
    uint32_t ft = f | t;
    for (uint32_t s = ft;; s = (s - 1) & ft) {
        if (m.rk[r | s] != m.rk[r] + std::popcount(s & f)) return false;
        if (s == 0) break;
    }
    return true;
}

inline std::vector<Molecule> molecules(const RankTable& m) {
    if (m.n > 10) throw CapError("molecule enumeration capped at n=10");
    std::vector<Molecule> out;
    uint32_t full = full_mask(m.n);
    for (uint32_t r = 0;; ++r) {
        uint32_t rest = full & ~r;
        for (uint32_t ft = rest;; ft = (ft - 1) & rest) {
            for (uint32_t f = ft;; f = (f - 1) & ft) {
                if (is_molecule(m, r, f, ft & ~f)) out.push_back({r, f, ft & ~f});
                if (f == 0) break;
            }
            if (ft == 0) break;
        }
        if (r == full) break;
    }
    return out;
}

struct ArithMatroid {
    RankTable m;
    std::vector<BigInt> mult;  // 2^n positive integers

    ArithMatroid() : mult{1} {}
    ArithMatroid(RankTable m_, std::vector<BigInt> mult_, bool validate = true)
        : m(std::move(m_)), mult(std::move(mult_)) {
        if (mult.size() != m.rk.size()) throw ValidationError("multiplicity size mismatch");
        for (const BigInt& v : mult)
            if (v <= 0) throw ValidationError("multiplicities must be positive");
        if (!validate) return;
        // (A1) divisibility along rank steps
        for (uint32_t a = 0; a < mult.size(); ++a)
            for (int e = 0; e < m.n; ++e) {
                if (a & (1u << e)) continue;
                uint32_t ae = a | (1u << e);
                if (m.rk[ae] > m.rk[a]) {
                    if (mult[ae] % mult[a] != 0)
                        throw ValidationError("A1: m(A) must divide m(A+e)");
                } else if (mult[a] % mult[ae] != 0) {
                    throw ValidationError("A1: m(A+e) must divide m(A)");
                }
            }
        // (A2) multiplicativity and (P) positivity over every molecule;
        // beyond the enumeration cap only A1 is checked
        if (m.n > 10) return;
        for (const Molecule& mol : molecules(m)) {
            uint32_t rft = mol.r | mol.f | mol.t;
            if (mult[mol.r] * mult[rft] != mult[mol.r | mol.f] * mult[mol.r | mol.t])
                throw ValidationError("A2: molecule multiplicativity fails");
            BigInt sum = 0;
            uint32_t ft = mol.f | mol.t;
            for (uint32_t s = ft;; s = (s - 1) & ft) {
                BigInt term = mult[mol.r | s];
                if (std::popcount(ft & ~s) % 2) term = -term;
                sum += term;
                if (s == 0) break;
            }
            if (std::popcount(mol.t) % 2) sum = -sum;
            if (sum < 0) throw ValidationError("P: molecule sum must be nonnegative");
        }
    }

    int n() const { return m.n; }
};

// coloop/loop generators c_a and l_a of the Grothendieck monoid
inline ArithMatroid arith_coloop(const BigInt& a) { return ArithMatroid(coloop(), {1, a}); }
inline ArithMatroid arith_loop(const BigInt& a) { return ArithMatroid(loop(), {a, 1}); }

inline ArithMatroid arith_minor(const ArithMatroid& x, uint32_t a, MinorMode mode) {
    uint32_t full = full_mask(x.n());
    if (a & ~full) throw DomainError("subset out of range");
    if (mode == MinorMode::Delete) return arith_minor(x, full & ~a, MinorMode::Restrict);
    std::vector<BigInt> mult;
    if (mode == MinorMode::Restrict) {
        mult.resize(size_t(1) << std::popcount(a));
        for (uint32_t b = 0; b < mult.size(); ++b) mult[b] = x.mult[expand_bits(b, a)];
    } else {
        mult.resize(size_t(1) << (x.n() - std::popcount(a)));
        for (uint32_t b = 0; b < mult.size(); ++b)
            mult[b] = x.mult[expand_bits(b, full & ~a) | a];
    }
    return ArithMatroid(matroid_minor(x.m, a, mode), std::move(mult), false);
}

inline ArithMatroid arith_direct_sum(const ArithMatroid& x, const ArithMatroid& y) {
    RankTable m = direct_sum(x.m, y.m);
    std::vector<BigInt> mult(m.rk.size());
    for (uint32_t a = 0; a < mult.size(); ++a)
        mult[a] = x.mult[a & full_mask(x.n())] * y.mult[a >> x.n()];
    return ArithMatroid(std::move(m), std::move(mult), false);
}

struct AMatSystem {
    using Value = ArithMatroid;
    static int size(const Value& x) { return x.n(); }
    static Value restrict_to(const Value& x, uint32_t a) {
        return arith_minor(x, a, MinorMode::Restrict);
    }
    static Value contract_out(const Value& x, uint32_t a) {
        return arith_minor(x, a, MinorMode::Contract);
    }
    static std::string key(const Value& x) {
        auto render = [&](const RankTable& m, const std::vector<BigInt>& mult) {
            std::string s = "amat:" + std::to_string(m.n) + ":";
            for (int r : m.rk) s += std::to_string(r) + ",";
            s += "|";
            for (const BigInt& v : mult) s += v.str() + ",";
            return s;
        };
        std::string best = render(x.m, x.mult);
        if (x.n() <= kIsoCap) {
            std::vector<int> perm(x.n());
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end())) {
                std::vector<BigInt> mult(x.mult.size());
                for (uint32_t a = 0; a < mult.size(); ++a) {
                    uint32_t b = 0;
                    for (int i = 0; i < x.n(); ++i)
                        if (a & (1u << i)) b |= 1u << perm[i];
                    mult[b] = x.mult[a];
                }
                best = std::min(best, render(permute_matroid(x.m, perm), mult));
            }
        }
        return best;
    }
};

// ---------------------------------------------------------------------------
// Construction from finitely generated abelian groups

struct AbelianPresentation {
    int free_rank = 0;
    std::vector<BigInt> torsion;               // moduli, each >= 2
    std::vector<std::vector<BigInt>> columns;  // elements of Z^(r+t)

    AbelianPresentation() = default;
    AbelianPresentation(int r, std::vector<BigInt> tor, std::vector<std::vector<BigInt>> cols)
        : free_rank(r), torsion(std::move(tor)), columns(std::move(cols)) {
        if (free_rank < 0) throw ValidationError("free rank must be nonnegative");
        for (const BigInt& d : torsion)
            if (d < 2) throw ValidationError("torsion moduli must be >= 2");
        if ((int)columns.size() > 12) throw CapError("too many columns");
        for (auto& c : columns) {
            if ((int)c.size() != free_rank + (int)torsion.size())
                throw ValidationError("column length mismatch");
            for (size_t i = 0; i < torsion.size(); ++i) {
                BigInt& v = c[free_rank + i];
                v %= torsion[i];
                if (v < 0) v += torsion[i];
            }
        }
    }
};

// rank and torsion of G/<A>: Smith normal form of the relation matrix whose
// columns are the torsion relations d_i e_i and the chosen columns
inline ArithMatroid from_presentation(const AbelianPresentation& p) {
    int gens = p.free_rank + (int)p.torsion.size();
    int n = (int)p.columns.size();
    std::vector<int> rk(size_t(1) << n);
    std::vector<BigInt> mult(size_t(1) << n);
    for (uint32_t a = 0; a < rk.size(); ++a) {
        IntMatrix rel(gens, (int)p.torsion.size() + std::popcount(a));
        for (size_t i = 0; i < p.torsion.size(); ++i)
            rel(p.free_rank + (int)i, (int)i) = p.torsion[i];
        int col = (int)p.torsion.size();
        for (int e = 0; e < n; ++e) {
            if (!(a & (1u << e))) continue;
            for (int i = 0; i < gens; ++i) rel(i, col) = p.columns[e][i];
            ++col;
        }
        SmithResult snf = smith_normal_form(rel);
        int quotient_free = gens - (int)snf.factors.size();
        rk[a] = p.free_rank - quotient_free;
        mult[a] = 1;
        for (const BigInt& f : snf.factors) mult[a] *= f;
    }
    return ArithMatroid(RankTable(n, std::move(rk)), std::move(mult));
}

// ---------------------------------------------------------------------------
// The universal arithmetic Tutte polynomial

// prime axis carrying [m(A)], plus x and y
inline SigPtr arith_sig() { return SigBuilder().prime_axis("m").axis("x").axis("y").build(); }

inline Poly arith_bracket(const SigPtr& sig, const BigInt& n) {
    return Poly::prime_monomial(sig, 0, factorize(n));
}

// sum_A [m(A)] (xv-1)^(rk-rk A) (yv-1)^(|A|-rk A), for arbitrary arguments
inline Poly arith_tutte_eval(const ArithMatroid& x, const Poly& xv, const Poly& yv) {
    SigPtr sig = xv.sig();
    Poly one = Poly::constant(sig, Coeff(1));
    Poly xm = xv - one, ym = yv - one;
    Poly acc = Poly::zero(sig);
    for (uint32_t a = 0;; ++a) {
        acc += arith_bracket(sig, x.mult[a]) * xm.pow(x.m.rank() - x.m.rk[a]) *
               ym.pow(std::popcount(a) - x.m.rk[a]);
        if (a == full_mask(x.n())) break;
    }
    return acc;
}

inline Poly universal_arith_tutte(const ArithMatroid& x, const SigPtr& sig = arith_sig()) {
    return arith_tutte_eval(x, Poly::var(sig, "x"), Poly::var(sig, "y"));
}

// norms (y-1)^cork, (x-1)^rk and twist [m] realizing the same character
// through the generic engine
inline CharacterSpec<AMatSystem> arith_character_spec(const SigPtr& sig) {
    Poly one = Poly::constant(sig, Coeff(1));
    Poly xm = Poly::var(sig, "x") - one, ym = Poly::var(sig, "y") - one;
    return CharacterSpec<AMatSystem>::make(
        sig, [ym](const ArithMatroid& v) { return ym.pow(v.m.cork()); },
        [xm](const ArithMatroid& v) { return xm.pow(v.m.rank()); },
        [sig](const ArithMatroid& v) { return arith_bracket(sig, v.mult[0]); });
}

enum class ArithMode { Forget, Full, PLocal };

// ring morphisms K[Z_{>0}] -> K: forget sends a_p -> 1 (classical Tutte),
// full sends a_p -> p (arithmetic Tutte), p-local keeps only the p-part
inline Poly arith_specialize(const Poly& p, ArithMode mode, long long prime = 0,
                             const SigPtr& target = xy_sig()) {
    Specialization s;
    s.target = target;
    s.prime_values.emplace(0, [mode, prime, target](long long q) {
        BigInt v = 1;
        if (mode == ArithMode::Full || (mode == ArithMode::PLocal && q == prime)) v = q;
        return Poly::constant(target, Coeff(v));
    });
    return p.specialize(s);
}

// ---------------------------------------------------------------------------
// Products and convolution

inline ArithMatroid biarith_product(const ArithMatroid& x, const ArithMatroid& y) {
    if (!(x.m == y.m)) throw DomainError("product needs a common underlying matroid");
    std::vector<BigInt> mult(x.mult.size());
    for (uint32_t a = 0; a < mult.size(); ++a) mult[a] = x.mult[a] * y.mult[a];
    // validation is the content of the de Lucchi--Moci theorem; a failure
    // here would be an internal invariant violation
    return ArithMatroid(x.m, std::move(mult));
}

// M^uni_(M,m1m2)(1-ab, 1-cd)
//   = sum_A a^(rk-rk A) d^(|A|-rk A) M^uni_(M,m1)|A(1-a,1-c) M^uni_(M,m2)/A(1-b,1-d)
inline std::optional<Witness> arith_convolution_check(const ArithMatroid& x1,
                                                      const ArithMatroid& x2) {
    if (!(x1.m == x2.m)) throw DomainError("convolution needs a common underlying matroid");
    SigPtr sig =
        SigBuilder().prime_axis("m").axis("a").axis("b").axis("c").axis("d").build();
    Poly one = Poly::constant(sig, Coeff(1));
    Poly a = Poly::var(sig, "a"), b = Poly::var(sig, "b");
    Poly c = Poly::var(sig, "c"), d = Poly::var(sig, "d");
    Poly lhs = arith_tutte_eval(biarith_product(x1, x2), one - a * b, one - c * d);
    Poly rhs = Poly::zero(sig);
    const RankTable& m = x1.m;
    for (uint32_t s = 0;; ++s) {
        rhs += a.pow(m.rank() - m.rk[s]) * d.pow(std::popcount(s) - m.rk[s]) *
               arith_tutte_eval(arith_minor(x1, s, MinorMode::Restrict), one - a, one - c) *
               arith_tutte_eval(arith_minor(x2, s, MinorMode::Contract), one - b, one - d);
        if (s == full_mask(m.n)) break;
    }
    if (lhs == rhs) return std::nullopt;
    return Witness{"arithmetic convolution failed on " + AMatSystem::key(x1), lhs, rhs};
}

// Backman--Lenz: in Z[x,y],
//   M_(M,m)(x,y) = sum_A M_(M,m)|A(0,y) T_(M/A)(x,0)
//               = sum_A T_(M|A)(0,y) M_(M,m)/A(x,0)
inline std::optional<Witness> backman_lenz_check(const ArithMatroid& x) {
    SigPtr sig = xy_sig();
    // evaluate symbolically over K[Z_{>0}] first, then send each a_p to p
    SigPtr psig = arith_sig();
    auto full_eval = [&](const ArithMatroid& v, const Poly& xv, const Poly& yv) {
        return arith_specialize(arith_tutte_eval(v, xv, yv), ArithMode::Full, 0, sig);
    };
    Poly pzero = Poly::zero(psig);
    Poly pxv = Poly::var(psig, "x"), pyv = Poly::var(psig, "y");
    Poly zero = Poly::zero(sig);
    Poly xv = Poly::var(sig, "x"), yv = Poly::var(sig, "y");
    Poly lhs = full_eval(x, pxv, pyv);
    Poly rhs1 = Poly::zero(sig), rhs2 = Poly::zero(sig);
    for (uint32_t s = 0;; ++s) {
        rhs1 += full_eval(arith_minor(x, s, MinorMode::Restrict), pzero, pyv) *
                tutte_eval(matroid_minor(x.m, s, MinorMode::Contract), xv, zero);
        rhs2 += tutte_eval(matroid_minor(x.m, s, MinorMode::Restrict), zero, yv) *
                full_eval(arith_minor(x, s, MinorMode::Contract), pxv, pzero);
        if (s == full_mask(x.n())) break;
    }
    if (lhs != rhs1)
        return Witness{"Backman-Lenz (first form) failed on " + AMatSystem::key(x), lhs,
                       rhs1};
    if (lhs != rhs2)
        return Witness{"Backman-Lenz (second form) failed on " + AMatSystem::key(x), lhs,
                       rhs2};
    return std::nullopt;
}

}  // namespace tutte
