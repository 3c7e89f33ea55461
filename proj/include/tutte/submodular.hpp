#pragma once

// Submodular functions / generalized permutohedra, polymatroids, and
// r-polymatroids.  Ranks may be negative, so the y-axes of every signature
// here live in the Integer exponent domain.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "delta.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "minors.hpp"
#include "poly.hpp"

namespace tutte {

struct SubmodTable {
    int n = 0;
    std::vector<int> rk;  // 2^n entries, possibly negative
    bool is_polymatroid = false;

    SubmodTable() : rk{0}, is_polymatroid(true) {}
    SubmodTable(int n_, std::vector<int> rk_, bool validate = true)
        : n(n_), rk(std::move(rk_)) {
        if (n < 0 || n > kRankTableCap) throw CapError("ground size out of range");
        if (rk.size() != size_t(1) << n) throw ValidationError("rank table size mismatch");
        if (validate) {
            if (rk[0] != 0) throw ValidationError("Sub1: rk(empty) must be 0");
            // local form of Sub2, equivalent to the two-set inequality
            for (uint32_t x = 0; x < rk.size(); ++x)
                for (int e = 0; e < n; ++e) {
                    if (x & (1u << e)) continue;
                    for (int f = e + 1; f < n; ++f) {
                        if (x & (1u << f)) continue;
                        if (rk[x | (1u << e)] + rk[x | (1u << f)] <
                            rk[x | (1u << e) | (1u << f)] + rk[x])
                            throw ValidationError("Sub2: submodularity fails");
                    }
                }
        }
        is_polymatroid = true;
        for (uint32_t x = 0; x < rk.size() && is_polymatroid; ++x)
            for (int e = 0; e < n; ++e)
                if (!(x & (1u << e)) && rk[x | (1u << e)] < rk[x]) {
                    is_polymatroid = false;
                    break;
                }
    }

    int rank(uint32_t a) const { return rk[a]; }
    int rank() const { return rk.back(); }
    // least r such that this is an r-polymatroid (0 on the empty ground set)
    int r_bound() const {
        int r = 0;
        for (int e = 0; e < n; ++e) r = std::max(r, rk[1u << e]);
        return r;
    }

    friend bool operator==(const SubmodTable& a, const SubmodTable& b) {
        return a.n == b.n && a.rk == b.rk;
    }
};

// single-element function s_b with rk({e}) = b
inline SubmodTable s_elem(int b) { return SubmodTable(1, {0, b}); }

inline SubmodTable sf_minor(const SubmodTable& m, uint32_t a, MinorMode mode) {
    uint32_t full = full_mask(m.n);
    if (a & ~full) throw DomainError("subset out of range");
    if (mode == MinorMode::Delete) return sf_minor(m, full & ~a, MinorMode::Restrict);
    int k = std::popcount(a);
    int nn = mode == MinorMode::Restrict ? k : m.n - k;
    std::vector<int> rk(size_t(1) << nn);
    if (mode == MinorMode::Restrict) {
        for (uint32_t b = 0; b < rk.size(); ++b) rk[b] = m.rk[expand_bits(b, a)];
    } else {
        for (uint32_t b = 0; b < rk.size(); ++b)
            rk[b] = m.rk[expand_bits(b, full & ~a) | a] - m.rk[a];
    }
    return SubmodTable(nn, std::move(rk), false);
}

inline SubmodTable sf_direct_sum(const SubmodTable& x, const SubmodTable& y) {
    int n = x.n + y.n;
    if (n > kRankTableCap) throw CapError("direct sum exceeds ground size cap");
    std::vector<int> rk(size_t(1) << n);
    for (uint32_t a = 0; a < rk.size(); ++a)
        rk[a] = x.rk[a & full_mask(x.n)] + y.rk[a >> x.n];
    return SubmodTable(n, std::move(rk), false);
}

inline SubmodTable sf_permute(const SubmodTable& m, const std::vector<int>& perm) {
    std::vector<int> rk(m.rk.size());
    for (uint32_t a = 0; a < rk.size(); ++a) {
        uint32_t b = 0;
        for (int i = 0; i < m.n; ++i)
            if (a & (1u << i)) b |= 1u << perm[i];
        rk[b] = m.rk[a];
    }
    return SubmodTable(m.n, std::move(rk), false);
}

struct SFSystem {
    using Value = SubmodTable;
    static int size(const Value& m) { return m.n; }
    static Value restrict_to(const Value& m, uint32_t a) {
        return sf_minor(m, a, MinorMode::Restrict);
    }
    static Value contract_out(const Value& m, uint32_t a) {
        return sf_minor(m, a, MinorMode::Contract);
    }
    static std::string key(const Value& m) {
        std::vector<int> best = m.rk;
        if (m.n <= kIsoCap) {
            std::vector<int> perm(m.n);
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end()))
                best = std::min(best, sf_permute(m, perm).rk);
        }
        std::string s = "sf:" + std::to_string(m.n) + ":";
        for (int r : best) s += std::to_string(r) + ",";
        return s;
    }
};

// matroids include into polymatroids by reading the rank table verbatim
inline SubmodTable sf_from_matroid(const RankTable& m) {
    return SubmodTable(m.n, m.rk, false);
}

// ---------------------------------------------------------------------------
// Grothendieck image and the universal character

inline SigPtr sf_image_sig() {
    return SigBuilder().axis("x").axis("y", AxisDomain::Integer).build();
}

// iota([M]) = x^|E| y^rk(E); the image of U(SF) is {1} + {x^a y^b : a > 0}
inline Poly sf_universal_image(const SubmodTable& m, const SigPtr& sig = sf_image_sig()) {
    MonoidElem e = unit_elem(*sig);
    e.exps[sig->axis_index("x")] = m.n;
    e.exps[sig->axis_index("y")] = m.rank();
    return Poly::monomial(sig, std::move(e));
}

inline SigPtr sf_sig() {
    return SigBuilder()
        .axis("x1")
        .axis("y1", AxisDomain::Integer)
        .axis("x2")
        .axis("y2", AxisDomain::Integer)
        .build();
}

inline ValueFn<SFSystem> sf_norm(const SigPtr& sig, const std::string& x,
                                 const std::string& y) {
    return [sig, x, y](const SubmodTable& m) {
        MonoidElem e = unit_elem(*sig);
        e.exps[sig->axis_index(x)] = m.n;
        e.exps[sig->axis_index(y)] = m.rank();
        return Poly::monomial(sig, std::move(e));
    };
}

// T^SF(M) = sum_A x1^|A| y1^rk(A) x2^|E\A| y2^(rk(E)-rk(A))
inline Poly t_sf(const SubmodTable& m, const SigPtr& sig = sf_sig()) {
    auto one = [sig](const SubmodTable&) { return Poly::constant(sig, Coeff(1)); };
    auto spec = CharacterSpec<SFSystem>::make(sig, sf_norm(sig, "x1", "y1"),
                                              sf_norm(sig, "x2", "y2"), one);
    return tutte_character<SFSystem>(m, spec);
}

// N(s_0) N(s_2) = N(s_1)^2, the constraint a norm on 2-polymatroids puts on
// its single-element values
inline bool ow_norm_relation_check(const Poly& n0, const Poly& n1, const Poly& n2) {
    return n0 * n2 == n1 * n1;
}

// the Welsh--Kayibi injection MatPer -> PMat_2: rk_N = rk_M + rk_M'
inline SubmodTable matper_to_pmat2(const Perspective& p) {
    std::vector<int> rk(p.m.rk.size());
    for (uint32_t a = 0; a < rk.size(); ++a) rk[a] = p.m.rk[a] + p.mp.rk[a];
    return SubmodTable(p.m.n, std::move(rk));
}

// random submodular function: a nonnegative combination of matroid ranks plus
// a modular shift (which may be negative, breaking monotonicity)
inline SubmodTable random_submodular(std::mt19937& rng, int n) {
    std::vector<int> rk(size_t(1) << n, 0);
    int parts = 1 + (int)(rng() % 2);
    for (int i = 0; i < parts; ++i) {
        RankTable m = random_matroid(rng, n);
        int w = 1 + (int)(rng() % 3);
        for (uint32_t a = 0; a < rk.size(); ++a) rk[a] += w * m.rk[a];
    }
    for (int e = 0; e < n; ++e) {
        int shift = (int)(rng() % 5) - 2;
        for (uint32_t a = 0; a < rk.size(); ++a)
            if (a & (1u << e)) rk[a] += shift;
    }
    return SubmodTable(n, std::move(rk));
}

}  // namespace tutte
