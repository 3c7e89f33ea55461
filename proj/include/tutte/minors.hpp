#pragma once

// The generic engine: Tutte characters, deletion-contraction, convolution and
// well-definedness checks for any "minors system".
//
// A minors system S is a type with:
//   using Value = ...;                                  // a structure
//   static int  size(const Value&);                     // |E|, ground set {0..n-1}
//   static Value restrict_to(const Value&, uint32_t A); // X|A on A, bits compressed
//   static Value contract_out(const Value&, uint32_t A);// X/A on E\A, bits compressed
//   static std::string key(const Value&);               // canonical key
//
// Ground subsets are bitmasks over {0,...,n-1}.  Both minor operations
// re-index the surviving elements in increasing order.  `key` must be stable
// under that re-indexing for memoized recursions to be sound; every structure
// module here guarantees that.
//
// Characters are described by norms/twists mapping structures to polynomials:
// the Tutte character of X is  sum over A of  N1(X|A) * tau((X|A)/A) * N2(X/A),
// where (X|A)/A is the empty-ground-set part left after contracting all of A.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace tutte {

template <class S>
using ValueFn = std::function<Poly(const typename S::Value&)>;

template <class S>
struct CharacterSpec {
    SigPtr sig;
    ValueFn<S> norm1;
    ValueFn<S> norm2;
    ValueFn<S> twist;  // evaluated on empty-ground-set structures

    static CharacterSpec make(SigPtr sig, ValueFn<S> n1, ValueFn<S> n2,
                              ValueFn<S> tw = nullptr) {
        CharacterSpec c;
        c.sig = std::move(sig);
        c.norm1 = std::move(n1);
        c.norm2 = std::move(n2);
        c.twist = std::move(tw);
        if (!c.twist)
            c.twist = [s = c.sig](const typename S::Value&) {
                return Poly::constant(s, Coeff(1));
            };
        return c;
    }
};

// A failed identity check: what was compared and the two sides.
struct Witness {
    std::string context;
    Poly lhs, rhs;
};

inline uint32_t full_mask(int n) { return n >= 32 ? 0xffffffffu : ((1u << n) - 1u); }

template <class S>
struct CoproductTerm {
    uint32_t mask;
    typename S::Value left;   // X|A
    typename S::Value right;  // X/A
};

template <class S>
std::vector<CoproductTerm<S>> coproduct_terms(const typename S::Value& x) {
    int n = S::size(x);
    std::vector<CoproductTerm<S>> out;
    out.reserve(size_t(1) << n);
    for (uint32_t a = 0; a <= full_mask(n); ++a) {
        out.push_back({a, S::restrict_to(x, a), S::contract_out(x, a)});
        if (n == 0) break;
    }
    return out;
}

// Empty-ground-set part of X: contract everything.
template <class S>
typename S::Value empty_part(const typename S::Value& x) {
    return S::contract_out(x, full_mask(S::size(x)));
}

template <class S>
Poly tutte_character(const typename S::Value& x, const CharacterSpec<S>& spec) {
    Poly acc = Poly::zero(spec.sig);
    for (const auto& t : coproduct_terms<S>(x))
        acc += spec.norm1(t.left) * spec.twist(empty_part<S>(t.left)) * spec.norm2(t.right);
    return acc;
}

// Evaluate the same character by deletion-contraction with smallest-index
// pivot, memoized on canonical keys:
//   T(X) = N1(X|e) T(X/e) + N2(X/(E\e)) T(X\e)   for e = element 0.
// Agrees with tutte_character exactly when norm1/norm2 are genuine norms.
template <class S>
Poly delcon_evaluate(const typename S::Value& x, const CharacterSpec<S>& spec,
                     std::map<std::string, Poly>* memo = nullptr) {
    std::map<std::string, Poly> local;
    if (!memo) memo = &local;
    std::string k = S::key(x);
    if (auto it = memo->find(k); it != memo->end()) return it->second;
    Poly result = Poly::zero(spec.sig);
    int n = S::size(x);
    if (n == 0) {
        result = spec.twist(x);
    } else {
        uint32_t e = 1u;
        uint32_t rest = full_mask(n) & ~e;
        result = spec.norm1(S::restrict_to(x, e)) *
                     delcon_evaluate<S>(S::contract_out(x, e), spec, memo) +
                 spec.norm2(S::contract_out(x, rest)) *
                     delcon_evaluate<S>(S::restrict_to(x, rest), spec, memo);
    }
    memo->emplace(std::move(k), result);
    return result;
}

// Check that Nbar(Y) = (-1)^{|Y|} N(Y) is convolution-inverse to N:
//   sum over A of Nbar(X|A) N(X/A) = [n == 0] * N(empty part of X).
template <class S>
std::optional<Witness> inverse_norm_check(const typename S::Value& x, const ValueFn<S>& norm,
                                          const SigPtr& sig) {
    Poly acc = Poly::zero(sig);
    int n = S::size(x);
    for (const auto& t : coproduct_terms<S>(x)) {
        Coeff sign = (std::popcount(t.mask) % 2) ? Coeff(-1) : Coeff(1);
        acc += sign * (norm(t.left) * norm(t.right));
    }
    Poly expect = (n == 0) ? norm(x) : Poly::zero(sig);
    if (acc == expect) return std::nullopt;
    return Witness{"inverse norm failed on " + S::key(x), acc, expect};
}

// Convolution identity: with Ni norms and tau_i twists,
//   T_{Nbar0, tau1*tau2, N2}(X)
//     = sum over A of T_{Nbar0,tau1,N1}(X|A) * T_{Nbar1,tau2,N2}(X/A).
// Nbar means the sign-inverted norm (-1)^{|E|} N.
template <class S>
std::optional<Witness> convolution_check(const typename S::Value& x, const SigPtr& sig,
                                         const ValueFn<S>& n0, const ValueFn<S>& n1,
                                         const ValueFn<S>& n2, const ValueFn<S>& t1,
                                         const ValueFn<S>& t2) {
    auto bar = [](const ValueFn<S>& f) {
        return [f](const typename S::Value& v) {
            Coeff sign = (S::size(v) % 2) ? Coeff(-1) : Coeff(1);
            return sign * f(v);
        };
    };
    ValueFn<S> t12 = [t1, t2](const typename S::Value& v) { return t1(v) * t2(v); };
    auto lhs_spec = CharacterSpec<S>::make(sig, bar(n0), n2, t12);
    auto left_spec = CharacterSpec<S>::make(sig, bar(n0), n1, t1);
    auto right_spec = CharacterSpec<S>::make(sig, bar(n1), n2, t2);
    Poly lhs = tutte_character<S>(x, lhs_spec);
    Poly rhs = Poly::zero(sig);
    for (const auto& t : coproduct_terms<S>(x))
        rhs += tutte_character<S>(t.left, left_spec) * tutte_character<S>(t.right, right_spec);
    if (lhs == rhs) return std::nullopt;
    return Witness{"convolution failed on " + S::key(x), lhs, rhs};
}

// Iterated convolution over flags of subsets: given norms N_0..N_k and twists
// tau_1..tau_k,
//   T_{Nbar0, tau1...tauk, Nk}(X)
//     = sum over chains 0 = A0 <= A1 <= ... <= Ak = E of
//         prod_i T_{Nbar(i-1), tau_i, N_i}( X|A_i / A_(i-1) ).
template <class S>
std::optional<Witness> iterated_convolution_check(const typename S::Value& x, const SigPtr& sig,
                                                  const std::vector<ValueFn<S>>& norms,
                                                  const std::vector<ValueFn<S>>& twists) {
    int k = (int)twists.size();
    if ((int)norms.size() != k + 1 || k < 1)
        throw Error("iterated convolution needs k+1 norms and k twists");
    auto bar = [](const ValueFn<S>& f) {
        return [f](const typename S::Value& v) {
            Coeff sign = (S::size(v) % 2) ? Coeff(-1) : Coeff(1);
            return sign * f(v);
        };
    };
    ValueFn<S> tall = twists[0];
    for (int i = 1; i < k; ++i)
        tall = [a = tall, b = twists[i]](const typename S::Value& v) { return a(v) * b(v); };
    Poly lhs =
        tutte_character<S>(x, CharacterSpec<S>::make(sig, bar(norms[0]), norms[k], tall));

    std::vector<CharacterSpec<S>> step;
    for (int i = 1; i <= k; ++i)
        step.push_back(CharacterSpec<S>::make(sig, bar(norms[i - 1]), norms[i], twists[i - 1]));

    // recursive chain enumeration: remaining is X with A_(i-1) already
    // contracted away; pick A_i / A_(i-1) as any subset of what's left
    Poly rhs = Poly::zero(sig);
    std::function<void(const typename S::Value&, int, Poly)> rec =
        [&](const typename S::Value& rem, int i, Poly acc) {
            if (i == k) {  // last step must absorb everything that remains
                rhs += acc * tutte_character<S>(rem, step[i - 1]);
                return;
            }
            int n = S::size(rem);
            for (uint32_t a = 0;; ++a) {
                rec(S::contract_out(rem, a), i + 1,
                    acc * tutte_character<S>(S::restrict_to(rem, a), step[i - 1]));
                if (a == full_mask(n)) break;
            }
        };
    rec(x, 1, Poly::constant(sig, Coeff(1)));
    if (lhs == rhs) return std::nullopt;
    return Witness{"iterated convolution failed on " + S::key(x), lhs, rhs};
}

// ---------------------------------------------------------------------------
// Grothendieck monoid of 1-element classes

struct GrothendieckRelation {
    // each side is a sorted pair of generator keys; the relation says the two
    // products of classes agree
    std::pair<std::string, std::string> lhs, rhs;
    std::string source;  // key of the 2-element structure it came from

    bool trivial() const { return lhs == rhs; }
};

struct GrothendieckPresentation {
    std::vector<std::string> generators;            // canonical 1-element keys
    std::vector<GrothendieckRelation> relations;    // deduplicated, nontrivial
};

// Split a 2-element structure into its two defining relation sides.
template <class S>
GrothendieckRelation two_element_relation(const typename S::Value& x) {
    auto side = [&](uint32_t e) {
        std::pair<std::string, std::string> p{S::key(S::restrict_to(x, e)),
                                              S::key(S::contract_out(x, e))};
        if (p.second < p.first) std::swap(p.first, p.second);
        return p;
    };
    GrothendieckRelation r;
    r.lhs = side(1u);
    r.rhs = side(2u);
    if (r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
    r.source = S::key(x);
    return r;
}

template <class S>
GrothendieckPresentation grothendieck_relations(
    const std::vector<typename S::Value>& one_elt,
    const std::vector<typename S::Value>& two_elt) {
    GrothendieckPresentation out;
    for (const auto& v : one_elt) {
        std::string k = S::key(v);
        if (std::find(out.generators.begin(), out.generators.end(), k) ==
            out.generators.end())
            out.generators.push_back(k);
    }
    std::sort(out.generators.begin(), out.generators.end());
    for (const auto& v : two_elt) {
        GrothendieckRelation r = two_element_relation<S>(v);
        if (r.trivial()) continue;
        bool dup = false;
        for (auto& q : out.relations)
            dup = dup || (q.lhs == r.lhs && q.rhs == r.rhs);
        if (!dup) out.relations.push_back(std::move(r));
    }
    return out;
}

// Check that a candidate assignment of monomials to 1-element classes factors
// through the Grothendieck monoid: for every 2-element structure the two
// products agree.  The candidate maps a structure to a (monomial) polynomial;
// it must only depend on the canonical key.
template <class S>
std::optional<Witness> verify_norm_candidate(const std::vector<typename S::Value>& two_elt,
                                             const ValueFn<S>& candidate) {
    for (const auto& x : two_elt) {
        Poly a = candidate(S::restrict_to(x, 1u)) * candidate(S::contract_out(x, 1u));
        Poly b = candidate(S::restrict_to(x, 2u)) * candidate(S::contract_out(x, 2u));
        if (a != b)
            return Witness{"norm candidate breaks relation from " + S::key(x), a, b};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// General recurrence well-definedness
//
// Given arbitrary coefficient maps a, b on 1-element structures (not
// necessarily norms) and a twist on empty structures, define Phi by the
// smallest-index recurrence
//   Phi(X) = a(X|e) Phi(X/e) + b(X/(E\e)) Phi(X\e),   Phi(empty) = twist.
// Phi is independent of pivot choices iff for every structure X and elements
// e != f:
//   ( a(Xef|e) a(Xef/e) - a(Xef|f) a(Xef/f) ) * Phi(X / {e,f})
//     = ( b(X^ef|e) b(X^ef/e) - b(X^ef|f) b(X^ef/f) ) * Phi(X \ {e,f})
// where Xef = X|{e,f} and X^ef = X/(E \ {e,f}).  This checks that identity
// over a supplied family of structures.
template <class S>
std::optional<Witness> recurrence_welldef_check(
    const std::vector<typename S::Value>& structures, const SigPtr& sig, const ValueFn<S>& a,
    const ValueFn<S>& b, const ValueFn<S>& twist) {
    auto spec = CharacterSpec<S>::make(sig, a, b, twist);
    std::map<std::string, Poly> memo;
    auto phi = [&](const typename S::Value& v) { return delcon_evaluate<S>(v, spec, &memo); };
    for (const auto& x : structures) {
        int n = S::size(x);
        for (int e = 0; e < n; ++e)
            for (int f = e + 1; f < n; ++f) {
                uint32_t me = 1u << e, mf = 1u << f, both = me | mf;
                auto xef = S::restrict_to(x, both);        // 2-elt restriction
                auto xup = S::contract_out(x, full_mask(n) & ~both);  // 2-elt contraction
                // inside the 2-element minors, e is element 0 and f element 1
                auto coeff2 = [&](const ValueFn<S>& g, const typename S::Value& y) {
                    Poly de = g(S::restrict_to(y, 1u)) * g(S::contract_out(y, 1u));
                    Poly df = g(S::restrict_to(y, 2u)) * g(S::contract_out(y, 2u));
                    return de - df;
                };
                Poly lhs = coeff2(a, xef) * phi(S::contract_out(x, both));
                Poly rhs = coeff2(b, xup) * phi(S::restrict_to(x, full_mask(n) & ~both));
                if (lhs != rhs)
                    return Witness{"recurrence not well defined on " + S::key(x) +
                                       " at pair (" + std::to_string(e) + "," +
                                       std::to_string(f) + ")",
                                   lhs, rhs};
            }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// exp_* of an infinitesimal character:
//   exp_*(nu)(X) = (1/n!) sum over orderings (e_1..e_n) of E of
//                  prod_i nu( X restricted-then-contracted to the single
//                  element e_i given e_1..e_(i-1) contracted )
// i.e. the i-th factor is (X / {e_1..e_(i-1)}) | {e_i}  as a 1-element
// structure.  nu takes 1-element structures (its value on the empty structure
// is irrelevant; the sum uses only singles).
template <class S>
Poly exp_star(const typename S::Value& x, const ValueFn<S>& nu, const SigPtr& sig) {
    int n = S::size(x);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Poly acc = Poly::zero(sig);
    BigInt count = 0;
    do {
        Poly prod = Poly::constant(sig, Coeff(1));
        typename S::Value cur = x;  // remaining structure, elements re-indexed
        std::vector<int> alive(n);  // current index of original element i, -1 if gone
        for (int i = 0; i < n; ++i) alive[i] = i;
        for (int step = 0; step < n; ++step) {
            int e = alive[perm[step]];
            prod *= nu(S::restrict_to(cur, 1u << e));
            cur = S::contract_out(cur, 1u << e);
            for (int i = 0; i < n; ++i)
                if (alive[i] > e) --alive[i];
            alive[perm[step]] = -1;
        }
        acc += prod;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    BigRat inv(1, count == 0 ? 1 : count);
    return Coeff(inv) * acc;
}

}  // namespace tutte
