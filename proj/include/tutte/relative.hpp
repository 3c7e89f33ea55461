#pragma once

// Relative matroids: a matroid on E + E0 whose minor operations only touch E.
// The zero set E0 is carried along and only matters up to isomorphism, so the
// empty-ground-set structures are isomorphism classes of matroids, and the
// natural twist map takes values in the free commutative algebra R0 on the
// isomorphism classes of connected matroids.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "delta.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "minors.hpp"
#include "poly.hpp"

namespace tutte {

struct RelMatroid {
    RankTable m;    // on the full ground set E + E0
    uint32_t zero;  // positions of E0 inside m

    RelMatroid() : zero(0) {}
    RelMatroid(RankTable m_, uint32_t zero_) : m(std::move(m_)), zero(zero_) {
        if (zero & ~full_mask(m.n)) throw DomainError("zero set out of range");
    }

    uint32_t emask() const { return full_mask(m.n) & ~zero; }
    int esize() const { return m.n - std::popcount(zero); }
    // rank of (A in E-coordinates) together with all of E0
    int rank_with_zero(uint32_t a) const { return m.rank(expand_bits(a, emask()) | zero); }
    int rank_e(uint32_t a) const { return m.rank(expand_bits(a, emask())); }
};

inline RelMatroid rel_minor(const RelMatroid& x, uint32_t a, MinorMode mode) {
    if (a & ~full_mask(x.esize())) throw DomainError("subset out of range");
    uint32_t ea = expand_bits(a, x.emask());
    if (mode == MinorMode::Delete)
        return rel_minor(x, full_mask(x.esize()) & ~a, MinorMode::Restrict);
    if (mode == MinorMode::Restrict) {
        uint32_t keep = ea | x.zero;
        return RelMatroid(matroid_minor(x.m, keep, MinorMode::Restrict),
                          compress_bits(x.zero, keep));
    }
    uint32_t keep = full_mask(x.m.n) & ~ea;
    return RelMatroid(matroid_minor(x.m, ea, MinorMode::Contract),
                      compress_bits(x.zero, keep));
}

// canonical representative: E elements first (order preserved), then the
// lex-min relabeling of the E0 block
inline RankTable rel_canonical(const RelMatroid& x) {
    int n = x.m.n, k = x.esize();
    std::vector<int> base(n);
    int j = 0;
    for (int i = 0; i < n; ++i)
        if (!(x.zero & (1u << i))) base[i] = j++;
    for (int i = 0; i < n; ++i)
        if (x.zero & (1u << i)) base[i] = j++;
    RankTable moved = permute_matroid(x.m, base);
    // now permute the E0 block (positions k..n-1) to the lex-min rank table
    std::vector<int> zperm(n - k);
    std::iota(zperm.begin(), zperm.end(), 0);
    RankTable best = moved;
    if (n - k <= kIsoCap) {
        while (std::next_permutation(zperm.begin(), zperm.end())) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = k; i < n; ++i) perm[i] = k + zperm[i - k];
            best = std::min(best, permute_matroid(moved, perm));
        }
    }
    return best;
}

inline bool rel_equal(const RelMatroid& a, const RelMatroid& b) {
    return a.esize() == b.esize() && rel_canonical(a) == rel_canonical(b);
}

struct RelSystem {
    using Value = RelMatroid;
    static int size(const Value& x) { return x.esize(); }
    static Value restrict_to(const Value& x, uint32_t a) {
        return rel_minor(x, a, MinorMode::Restrict);
    }
    static Value contract_out(const Value& x, uint32_t a) {
        return rel_minor(x, a, MinorMode::Contract);
    }
    static std::string key(const Value& x) {
        return rank_table_key(rel_canonical(x), "rel") + "z" +
               std::to_string(x.esize());
    }
};

// (M \ E0, M / E0) is a matroid perspective
inline Perspective to_perspective(const RelMatroid& x) {
    return Perspective(matroid_minor(x.m, x.zero, MinorMode::Delete),
                       matroid_minor(x.m, x.zero, MinorMode::Contract));
}

// ---------------------------------------------------------------------------
// The twist map into R0 and the relative Tutte character

// the matroid M|E0 carried by x (for an empty-E structure this is all of x)
inline RankTable zero_part(const RelMatroid& x) {
    return rel_minor(x, 0u, MinorMode::Restrict).m;
}

// axes of R0 = one variable per connected-matroid canonical form reachable
// from x; names C0, C1, ... in sorted canonical-key order
struct R0Legend {
    std::vector<std::string> axis_names;      // "C0", "C1", ...
    std::vector<std::string> component_keys;  // canonical rank-table keys
    std::map<std::string, int> index;         // key -> axis position in names

    int axis_of(const std::string& key) const {
        auto it = index.find(key);
        if (it == index.end()) throw DomainError("unregistered R0 component: " + key);
        return it->second;
    }
};

inline R0Legend rel_twist_legend(const RelMatroid& x) {
    std::set<std::string> keys;
    for (uint32_t a = 0;; ++a) {
        RankTable z = zero_part(rel_minor(x, a, MinorMode::Contract));
        for (uint32_t comp : connected_components(z))
            keys.insert(rank_table_key(
                canonical_form(matroid_minor(z, comp, MinorMode::Restrict))));
        if (a == full_mask(x.esize())) break;
    }
    R0Legend out;
    for (const auto& k : keys) {
        out.index[k] = (int)out.axis_names.size();
        out.axis_names.push_back("C" + std::to_string(out.axis_names.size()));
        out.component_keys.push_back(k);
    }
    return out;
}

// signature holding the R0 axes followed by the named character axes
inline SigPtr rel_sig(const R0Legend& legend, const std::vector<std::string>& extra) {
    SigBuilder b;
    for (const auto& name : legend.axis_names) b.axis(name);
    for (const auto& name : extra) b.axis(name);
    return b.build();
}

// tau: the E0-matroid maps to the product of its components' variables
inline ValueFn<RelSystem> rel_twist(const SigPtr& sig, const R0Legend& legend) {
    return [sig, legend](const RelMatroid& x) {
        RankTable z = zero_part(x);
        MonoidElem e = unit_elem(*sig);
        for (uint32_t comp : connected_components(z)) {
            std::string key = rank_table_key(
                canonical_form(matroid_minor(z, comp, MinorMode::Restrict)));
            e.exps[legend.axis_of(key)] += 1;
        }
        return Poly::monomial(sig, std::move(e));
    };
}

// norm pulled back from MatPer:
//   u^(rk(E+E0)-rk(E0)) v^(|E|-rk(E)) w^(rk(E)+rk(E0)-rk(E+E0))
inline ValueFn<RelSystem> rel_norm(const SigPtr& sig, const std::string& u,
                                   const std::string& v, const std::string& w) {
    return [sig, u, v, w](const RelMatroid& x) {
        int rfull = x.m.rank(), rz = x.m.rank(x.zero), re = x.rank_e(full_mask(x.esize()));
        MonoidElem e = unit_elem(*sig);
        e.exps[sig->axis_index(u)] = rfull - rz;
        e.exps[sig->axis_index(v)] = x.esize() - re;
        e.exps[sig->axis_index(w)] = re + rz - rfull;
        return Poly::monomial(sig, std::move(e));
    };
}

// 6-variable universal mode over R0[u1,v1,w1,u2,v2,w2]
inline Poly relative_universal(const RelMatroid& x, const SigPtr& sig,
                               const R0Legend& legend) {
    auto spec = CharacterSpec<RelSystem>::make(sig, rel_norm(sig, "u1", "v1", "w1"),
                                               rel_norm(sig, "u2", "v2", "w2"),
                                               rel_twist(sig, legend));
    return tutte_character<RelSystem>(x, spec);
}

// T^rel(x,y,z) = sum_A tau((M/A)|E0) (x-1)^(rk(E+E0)-rk(A+E0))
//                (y-1)^(|A|-rk(A)) z^(rk(E)+rk(A+E0)-rk(A)-rk(E+E0))
inline Poly relative_tutte(const RelMatroid& x, const SigPtr& sig,
                           const R0Legend& legend) {
    Poly one = Poly::constant(sig, Coeff(1));
    Poly xm1 = Poly::var(sig, "x") - one, ym1 = Poly::var(sig, "y") - one;
    Poly z = Poly::var(sig, "z");
    auto tau = rel_twist(sig, legend);
    int k = x.esize(), rfull = x.m.rank(), re = x.rank_e(full_mask(k));
    Poly acc = Poly::zero(sig);
    for (uint32_t a = 0;; ++a) {
        int raz = x.rank_with_zero(a), ra = x.rank_e(a);
        acc += tau(rel_minor(x, a, MinorMode::Contract)) * xm1.pow(rfull - raz) *
               ym1.pow(std::popcount(a) - ra) * z.pow(re + raz - ra - rfull);
        if (a == full_mask(k)) break;
    }
    return acc;
}

// Las Vergnas's Tutte polynomial of M pointed by E0: send every R0 variable
// to 1 and multiply by z^(rk(E+E0)-rk(E))
inline Poly pointed_las_vergnas(const RelMatroid& x, const SigPtr& target = xyz_sig()) {
    R0Legend legend = rel_twist_legend(x);
    SigPtr sig = rel_sig(legend, {"x", "y", "z"});
    Poly t = relative_tutte(x, sig, legend);
    Specialization s;
    s.target = target;
    Poly one = Poly::constant(target, Coeff(1));
    for (size_t i = 0; i < legend.axis_names.size(); ++i)
        s.axis_values.emplace((int)i, one);
    int re = x.rank_e(full_mask(x.esize()));
    return Poly::var(target, "z").pow(x.m.rank() - re) * t.specialize(s);
}

// all relative matroids with |E + E0| = total elements, every zero set
inline std::vector<RelMatroid> enumerate_relative(int total) {
    std::vector<RelMatroid> out;
    for (const auto& m : enumerate_labeled_matroids(total))
        for (uint32_t z = 0;; ++z) {
            out.push_back(RelMatroid(m, z));
            if (z == full_mask(total)) break;
        }
    return out;
}

}  // namespace tutte
