#pragma once

// Matroids with colored elements, their universal character, the colored Tutte
// polynomial, and the Bollobas--Riordan well-definedness criterion for general
// (non-norm) deletion-contraction coefficients.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "delta.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "minors.hpp"
#include "poly.hpp"

namespace tutte {

struct ColoredMatroid {
    RankTable m;
    std::vector<int> color;            // per element, index into palette
    std::vector<std::string> palette;  // the fixed color set, shared by minors

    ColoredMatroid() = default;
    ColoredMatroid(RankTable m_, std::vector<int> color_, std::vector<std::string> pal)
        : m(std::move(m_)), color(std::move(color_)), palette(std::move(pal)) {
        if ((int)color.size() != m.n) throw ValidationError("one color per element");
        for (int c : color)
            if (c < 0 || c >= (int)palette.size())
                throw ValidationError("color id out of palette");
    }
};

inline ColoredMatroid colored_minor(const ColoredMatroid& x, uint32_t a, MinorMode mode) {
    uint32_t full = full_mask(x.m.n);
    if (a & ~full) throw DomainError("subset out of range");
    uint32_t keep = mode == MinorMode::Restrict ? a
                    : mode == MinorMode::Delete ? full & ~a
                                                : full & ~a;
    std::vector<int> color;
    for (int i = 0; i < x.m.n; ++i)
        if (keep & (1u << i)) color.push_back(x.color[i]);
    return ColoredMatroid(matroid_minor(x.m, a, mode), std::move(color), x.palette);
}

struct ColoredSystem {
    using Value = ColoredMatroid;
    static int size(const Value& x) { return x.m.n; }
    static Value restrict_to(const Value& x, uint32_t a) {
        return colored_minor(x, a, MinorMode::Restrict);
    }
    static Value contract_out(const Value& x, uint32_t a) {
        return colored_minor(x, a, MinorMode::Contract);
    }
    static std::string key(const Value& x) {
        // minimize (rank table, color word) jointly over relabelings
        std::pair<std::vector<int>, std::vector<int>> best{x.m.rk, x.color};
        if (x.m.n <= kIsoCap) {
            std::vector<int> perm(x.m.n);
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end())) {
                std::vector<int> col(x.m.n);
                for (int i = 0; i < x.m.n; ++i) col[perm[i]] = x.color[i];
                best = std::min(best, {permute_matroid(x.m, perm).rk, std::move(col)});
            }
        }
        std::string s = "cmat:" + std::to_string(x.m.n) + ":";
        for (int r : best.first) s += std::to_string(r) + ",";
        s += "|";
        for (int c : best.second) s += x.palette[c] + ",";
        return s;
    }
};

// all matroids on n labeled elements, all colorings from the palette
inline std::vector<ColoredMatroid> enumerate_colored(
    int n, const std::vector<std::string>& palette) {
    std::vector<ColoredMatroid> out;
    int k = (int)palette.size();
    std::vector<RankTable> labeled = enumerate_labeled_matroids(n);
    long long words = 1;
    for (int i = 0; i < n; ++i) words *= k;
    for (const auto& m : labeled)
        for (long long w = 0; w < words; ++w) {
            std::vector<int> color(n);
            long long t = w;
            for (int i = 0; i < n; ++i) color[i] = (int)(t % k), t /= k;
            out.push_back(ColoredMatroid(m, std::move(color), palette));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Characters

// u1, v1, u2, v2, then a1_<color> and a2_<color> per palette entry
inline SigPtr colored_universal_sig(const std::vector<std::string>& palette) {
    SigBuilder b;
    b.axis("u1").axis("v1").axis("u2").axis("v2");
    for (const auto& c : palette) b.axis("a1_" + c);
    for (const auto& c : palette) b.axis("a2_" + c);
    return b.build();
}

// N_i(X) = u_i^rk v_i^cork * prod_e a_{color(e),i}
inline ValueFn<ColoredSystem> colored_norm(const SigPtr& sig, const std::string& u,
                                           const std::string& v, const std::string& ai) {
    return [sig, u, v, ai](const ColoredMatroid& x) {
        MonoidElem e = unit_elem(*sig);
        e.exps[sig->axis_index(u)] = x.m.rank();
        e.exps[sig->axis_index(v)] = x.m.cork();
        for (int c : x.color) e.exps[sig->axis_index(ai + "_" + x.palette[c])] += 1;
        return Poly::monomial(sig, std::move(e));
    };
}

inline Poly colored_universal(const ColoredMatroid& x,
                              const SigPtr& sig_in = nullptr) {
    SigPtr sig = sig_in ? sig_in : colored_universal_sig(x.palette);
    auto spec = CharacterSpec<ColoredSystem>::make(sig,
                                                   colored_norm(sig, "u1", "v1", "a1"),
                                                   colored_norm(sig, "u2", "v2", "a2"));
    return tutte_character<ColoredSystem>(x, spec);
}

// x, y, then a_<color> per palette entry
inline SigPtr colored_sig(const std::vector<std::string>& palette) {
    SigBuilder b;
    b.axis("x").axis("y");
    for (const auto& c : palette) b.axis("a_" + c);
    return b.build();
}

// sum_A (prod_{e in A} a_color(e)) (x-1)^(rk-rk A) (y-1)^(|A|-rk A)
inline Poly colored_tutte(const ColoredMatroid& x, const SigPtr& sig_in = nullptr) {
    SigPtr sig = sig_in ? sig_in : colored_sig(x.palette);
    Poly one = Poly::constant(sig, Coeff(1));
    Poly xm = Poly::var(sig, "x") - one, ym = Poly::var(sig, "y") - one;
    Poly acc = Poly::zero(sig);
    for (uint32_t a = 0;; ++a) {
        MonoidElem e = unit_elem(*sig);
        for (int i = 0; i < x.m.n; ++i)
            if (a & (1u << i)) e.exps[sig->axis_index("a_" + x.palette[x.color[i]])] += 1;
        acc += Poly::monomial(sig, std::move(e)) * xm.pow(x.m.rank() - x.m.rk[a]) *
               ym.pow(std::popcount(a) - x.m.rk[a]);
        if (a == full_mask(x.m.n)) break;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Bollobas--Riordan well-definedness

// deletion-contraction coefficient values indexed by color name
struct BRCoeffs {
    std::map<std::string, Poly> u1, v1, u2, v2;
};

// the coefficient map on 1-element colored structures induced by a value table
inline ValueFn<ColoredSystem> br_coeff(const std::map<std::string, Poly>& u,
                                       const std::map<std::string, Poly>& v) {
    return [u, v](const ColoredMatroid& x) {
        if (x.m.n != 1) throw DomainError("coefficient map wants 1-element structures");
        const std::string& c = x.palette[x.color[0]];
        return x.m.rank() == 1 ? u.at(c) : v.at(c);
    };
}

// delegate to the general recurrence criterion over the supplied structures
inline std::optional<Witness> br_relations_check(
    const std::vector<ColoredMatroid>& structures, const SigPtr& sig,
    const BRCoeffs& co) {
    auto one = [sig](const ColoredMatroid&) { return Poly::constant(sig, Coeff(1)); };
    return recurrence_welldef_check<ColoredSystem>(structures, sig,
                                                   br_coeff(co.u1, co.v1),
                                                   br_coeff(co.u2, co.v2), one);
}

// the closed-form criterion: for all colors l, m, n,
//   (BR1)  u_{l,1}v_{m,1} - u_{m,1}v_{l,1} = u_{l,2}v_{m,2} - u_{m,2}v_{l,2}
//   (BR2)  (u_{l,1}v_{m,1} - u_{m,1}v_{l,1}) (v_{n,1} + v_{n,2}) = 0
//   (BR3)  (u_{l,2}v_{m,2} - u_{m,2}v_{l,2}) (u_{n,1} + u_{n,2}) = 0
inline bool br_equations_check(const std::vector<std::string>& palette,
                               const BRCoeffs& co) {
    for (const auto& l : palette)
        for (const auto& m : palette) {
            Poly d1 = co.u1.at(l) * co.v1.at(m) - co.u1.at(m) * co.v1.at(l);
            Poly d2 = co.u2.at(l) * co.v2.at(m) - co.u2.at(m) * co.v2.at(l);
            if (d1 != d2) return false;
            for (const auto& n : palette) {
                if (!(d1 * (co.v1.at(n) + co.v2.at(n))).is_zero()) return false;
                if (!(d2 * (co.u1.at(n) + co.u2.at(n))).is_zero()) return false;
            }
        }
    return true;
}

}  // namespace tutte
