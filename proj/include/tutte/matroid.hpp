#pragma once

// Matroids as full rank tables over bitmask-indexed subsets: axioms, minors,
// duality, connectivity, canonical forms, enumeration, Tutte polynomials and
// the convolution identities they satisfy.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "minors.hpp"
#include "poly.hpp"

namespace tutte {

constexpr int kRankTableCap = 20;   // storage cap
constexpr int kTutteCap = 16;       // full subset expansion cap
constexpr int kIsoCap = 10;         // factorial canonical-form cap

struct RankTable {
    int n = 0;
    std::vector<int> rk;  // size 2^n

    RankTable() : rk{0} {}
    RankTable(int n_, std::vector<int> rk_, bool validate = true)
        : n(n_), rk(std::move(rk_)) {
        if (n < 0 || n > kRankTableCap) throw CapError("ground size out of range");
        if (rk.size() != (size_t(1) << n)) throw ValidationError("rank table size mismatch");
        if (validate) check_axioms();
    }

    int rank(uint32_t a) const { return rk[a]; }
    int rank() const { return rk.back(); }
    int cork() const { return n - rank(); }

    void check_axioms() const {
        if (rk[0] != 0) throw ValidationError("rk(empty) must be 0");
        uint32_t full = (1u << n) - 1;
        for (uint32_t a = 0; a <= full; ++a) {
            for (int e = 0; e < n; ++e) {
                if (a & (1u << e)) continue;
                int step = rk[a | (1u << e)] - rk[a];
                if (step < 0 || step > 1)
                    throw ValidationError("unit rank increment violated");  // R1+R2
                // local submodularity, equivalent to R3
                for (int f = e + 1; f < n; ++f) {
                    if (a & (1u << f)) continue;
                    if (rk[a | (1u << e)] + rk[a | (1u << f)] <
                        rk[a | (1u << e) | (1u << f)] + rk[a])
                        throw ValidationError("submodularity violated");
                }
            }
            if (a == full) break;
        }
    }

    friend bool operator==(const RankTable& x, const RankTable& y) {
        return x.n == y.n && x.rk == y.rk;
    }
    friend bool operator<(const RankTable& x, const RankTable& y) {
        return x.n != y.n ? x.n < y.n : x.rk < y.rk;
    }
};

// Compress the bits of `sub` (a subset of `mask`) to consecutive positions.
inline uint32_t compress_bits(uint32_t sub, uint32_t mask) {
    uint32_t out = 0;
    int j = 0;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) {
            if (sub & (1u << i)) out |= 1u << j;
            ++j;
        }
    return out;
}

// Inverse of compress_bits: spread low bits of `packed` into positions of mask.
inline uint32_t expand_bits(uint32_t packed, uint32_t mask) {
    uint32_t out = 0;
    int j = 0;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) {
            if (packed & (1u << j)) out |= 1u << i;
            ++j;
        }
    return out;
}

enum class MinorMode { Restrict, Contract, Delete };

inline RankTable matroid_minor(const RankTable& m, uint32_t a, MinorMode mode) {
    uint32_t full = full_mask(m.n);
    if (a & ~full) throw DomainError("subset not within ground set");
    if (mode == MinorMode::Delete) return matroid_minor(m, full & ~a, MinorMode::Restrict);
    if (mode == MinorMode::Restrict) {
        int k = std::popcount(a);
        std::vector<int> rk(size_t(1) << k);
        for (uint32_t b = 0; b < rk.size(); ++b) rk[b] = m.rk[expand_bits(b, a)];
        return RankTable(k, std::move(rk), false);
    }
    // contract: result on E \ A, rk'(B) = rk(B u A) - rk(A)
    uint32_t rest = full & ~a;
    int k = std::popcount(rest);
    std::vector<int> rk(size_t(1) << k);
    for (uint32_t b = 0; b < rk.size(); ++b)
        rk[b] = m.rk[expand_bits(b, rest) | a] - m.rk[a];
    return RankTable(k, std::move(rk), false);
}

inline RankTable dual(const RankTable& m) {
    uint32_t full = full_mask(m.n);
    std::vector<int> rk(m.rk.size());
    for (uint32_t a = 0; a < rk.size(); ++a)
        rk[a] = m.rk[full & ~a] + std::popcount(a) - m.rank();
    return RankTable(m.n, std::move(rk), false);
}

inline RankTable direct_sum(const RankTable& x, const RankTable& y) {
    int n = x.n + y.n;
    if (n > kRankTableCap) throw CapError("direct sum exceeds ground size cap");
    std::vector<int> rk(size_t(1) << n);
    uint32_t xmask = full_mask(x.n);
    for (uint32_t a = 0; a < rk.size(); ++a)
        rk[a] = x.rk[a & xmask] + y.rk[a >> x.n];
    return RankTable(n, std::move(rk), false);
}

// Finest partition of E into separators: rk(A) + rk(E\A) = rk(E).  The block
// of e is the intersection of all separators containing e.
inline std::vector<uint32_t> connected_components(const RankTable& m) {
    uint32_t full = full_mask(m.n);
    if (m.n == 0) return {};
    std::vector<uint32_t> comp(m.n, full);
    for (uint32_t a = 1; a < full; ++a)
        if (m.rk[a] + m.rk[full & ~a] == m.rank())
            for (int e = 0; e < m.n; ++e)
                if (a & (1u << e)) comp[e] &= a;
    std::vector<uint32_t> blocks;
    for (int e = 0; e < m.n; ++e)
        if (std::find(blocks.begin(), blocks.end(), comp[e]) == blocks.end())
            blocks.push_back(comp[e]);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

inline RankTable permute_matroid(const RankTable& m, const std::vector<int>& perm) {
    // perm[i] = new index of old element i
    std::vector<int> rk(m.rk.size());
    for (uint32_t a = 0; a < rk.size(); ++a) {
        uint32_t b = 0;
        for (int i = 0; i < m.n; ++i)
            if (a & (1u << i)) b |= 1u << perm[i];
        rk[b] = m.rk[a];
    }
    return RankTable(m.n, std::move(rk), false);
}

// Lexicographically minimal rank table over all relabelings.
inline RankTable canonical_form(const RankTable& m) {
    if (m.n > kIsoCap) throw CapError("canonical form over permutation cap");
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    RankTable best = m;
    do {
        RankTable cand = permute_matroid(m, perm);
        if (cand.rk < best.rk) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const RankTable& a, const RankTable& b) {
    return a.n == b.n && canonical_form(a) == canonical_form(b);
}

inline std::string rank_table_key(const RankTable& m, const char* tag = "mat") {
    std::string s = std::string(tag) + ":" + std::to_string(m.n) + ":";
    for (int r : m.rk) s += std::to_string(r) + ",";
    return s;
}

// Named small matroids
inline RankTable uniform_matroid(int r, int n) {
    std::vector<int> rk(size_t(1) << n);
    for (uint32_t a = 0; a < rk.size(); ++a) rk[a] = std::min(r, std::popcount(a));
    return RankTable(n, std::move(rk), false);
}
inline RankTable coloop() { return uniform_matroid(1, 1); }
inline RankTable loop() { return uniform_matroid(0, 1); }

// Rank function from a basis list: rk(A) = max over bases of |A n B|.
inline RankTable matroid_from_bases(int n, const std::vector<uint32_t>& bases) {
    if (bases.empty()) throw ValidationError("basis list must be nonempty");
    std::vector<int> rk(size_t(1) << n, 0);
    for (uint32_t a = 0; a < rk.size(); ++a)
        for (uint32_t b : bases) rk[a] = std::max(rk[a], std::popcount(a & b));
    return RankTable(n, std::move(rk));  // validated
}

// All labeled matroids on n elements, via basis families with the exchange
// property.  Intended for small n (the candidate count is sum_r 2^C(n,r)).
inline std::vector<RankTable> enumerate_matroids(int n) {
    if (n > 5) throw CapError("exhaustive matroid enumeration capped at n=5");
    std::vector<RankTable> out;
    for (int r = 0; r <= n; ++r) {
        std::vector<uint32_t> rsets;
        for (uint32_t a = 0; a <= full_mask(n); ++a) {
            if (std::popcount(a) == r) rsets.push_back(a);
            if (n == 0) break;
        }
        for (uint32_t fam = 1; fam < (1u << rsets.size()); ++fam) {
            std::vector<uint32_t> bases;
            for (size_t i = 0; i < rsets.size(); ++i)
                if (fam & (1u << i)) bases.push_back(rsets[i]);
            bool ok = true;
            for (uint32_t b1 : bases)
                for (uint32_t b2 : bases) {
                    if (!ok) break;
                    uint32_t only1 = b1 & ~b2;
                    for (int x = 0; x < n && ok; ++x) {
                        if (!(only1 & (1u << x))) continue;
                        bool found = false;
                        uint32_t only2 = b2 & ~b1;
                        for (int y = 0; y < n && !found; ++y)
                            if (only2 & (1u << y))
                                found = std::find(bases.begin(), bases.end(),
                                                  (b1 & ~(1u << x)) | (1u << y)) !=
                                        bases.end();
                        ok = found;
                    }
                }
            if (ok) out.push_back(matroid_from_bases(n, bases));
        }
        if (n == 0) break;  // only r=0
    }
    return out;
}

inline size_t count_canonical_matroids(int n) {
    std::vector<RankTable> canon;
    for (const auto& m : enumerate_matroids(n)) {
        RankTable c = canonical_form(m);
        if (std::find(canon.begin(), canon.end(), c) == canon.end()) canon.push_back(c);
    }
    return canon.size();
}

// Random linear matroid over GF(3): deterministic in the generator state,
// always a valid matroid, covers loops / coloops / parallel elements.
inline RankTable random_matroid(std::mt19937& rng, int n) {
    int rows = n == 0 ? 0 : 1 + (int)(rng() % (uint32_t)n);
    std::vector<std::vector<int>> cols(n, std::vector<int>(rows));
    for (auto& c : cols)
        for (auto& x : c) x = (int)(rng() % 3);
    std::vector<int> rk(size_t(1) << n, 0);
    for (uint32_t a = 0; a < rk.size(); ++a) {
        // gaussian elimination over GF(3)
        std::vector<std::vector<int>> mat;
        for (int i = 0; i < n; ++i)
            if (a & (1u << i)) mat.push_back(cols[i]);
        int rank = 0;
        for (int c = 0; c < rows && rank < (int)mat.size(); ++c) {
            int piv = -1;
            for (int r2 = rank; r2 < (int)mat.size(); ++r2)
                if (mat[r2][c] != 0) {
                    piv = r2;
                    break;
                }
            if (piv < 0) continue;
            std::swap(mat[rank], mat[piv]);
            int inv = mat[rank][c] == 1 ? 1 : 2;  // inverse mod 3
            for (int r2 = 0; r2 < (int)mat.size(); ++r2) {
                if (r2 == rank || mat[r2][c] == 0) continue;
                int f = (mat[r2][c] * inv) % 3;
                for (int cc = 0; cc < rows; ++cc)
                    mat[r2][cc] = ((mat[r2][cc] - f * mat[rank][cc]) % 3 + 3) % 3;
            }
            ++rank;
        }
        rk[a] = rank;
    }
    return RankTable(n, std::move(rk));
}

// ---------------------------------------------------------------------------
// Minors-system adapter

struct MatroidSystem {
    using Value = RankTable;
    static int size(const Value& m) { return m.n; }
    static Value restrict_to(const Value& m, uint32_t a) {
        return matroid_minor(m, a, MinorMode::Restrict);
    }
    static Value contract_out(const Value& m, uint32_t a) {
        return matroid_minor(m, a, MinorMode::Contract);
    }
    static std::string key(const Value& m) {
        return rank_table_key(m.n <= kIsoCap ? canonical_form(m) : m);
    }
};

// ---------------------------------------------------------------------------
// Tutte polynomials

inline SigPtr mat_universal_sig() {
    return SigBuilder().axis("u1").axis("v1").axis("u2").axis("v2").build();
}
inline SigPtr xy_sig() { return SigBuilder().axis("x").axis("y").build(); }

inline ValueFn<MatroidSystem> mat_norm(const SigPtr& sig, const std::string& u,
                                       const std::string& v) {
    return [sig, u, v](const RankTable& m) {
        MonoidElem e = unit_elem(*sig);
        e.exps[sig->axis_index(u)] = m.rank();
        e.exps[sig->axis_index(v)] = m.cork();
        return Poly::monomial(sig, std::move(e));
    };
}

inline Poly tutte_universal(const RankTable& m) {
    if (m.n > kTutteCap) throw CapError("ground size exceeds Tutte expansion cap");
    SigPtr sig = mat_universal_sig();
    auto spec = CharacterSpec<MatroidSystem>::make(sig, mat_norm(sig, "u1", "v1"),
                                                   mat_norm(sig, "u2", "v2"));
    return tutte_character<MatroidSystem>(m, spec);
}

// sum over A of (xv - 1)^(rk(M)-rk(A)) (yv - 1)^(|A|-rk(A)), for arbitrary
// polynomial arguments xv, yv; with variables x,y this is the classical Tutte
// polynomial.
inline Poly tutte_eval(const RankTable& m, const Poly& xv, const Poly& yv) {
    if (m.n > kTutteCap) throw CapError("ground size exceeds Tutte expansion cap");
    SigPtr sig = xv.sig();
    Poly one = Poly::constant(sig, Coeff(1));
    Poly xm = xv - one, ym = yv - one;
    Poly acc = Poly::zero(sig);
    for (uint32_t a = 0;; ++a) {
        acc += xm.pow(m.rank() - m.rk[a]) * ym.pow(std::popcount(a) - m.rk[a]);
        if (a == full_mask(m.n)) break;
    }
    return acc;
}

inline Poly tutte_classical(const RankTable& m, const SigPtr& sig = xy_sig()) {
    return tutte_eval(m, Poly::var(sig, "x"), Poly::var(sig, "y"));
}

inline Poly tutte_corank_nullity(const RankTable& m) {
    SigPtr sig = SigBuilder().axis("u").axis("v").build();
    Poly one = Poly::constant(sig, Coeff(1));
    return tutte_eval(m, Poly::var(sig, "u") + one, Poly::var(sig, "v") + one);
}

// Potts-style multivariate Tutte: per-element axes alpha_e plus x,y.
inline Poly tutte_multivariate(const RankTable& m) {
    SigBuilder b;
    for (int i = 0; i < m.n; ++i) b.axis("alpha" + std::to_string(i));
    SigPtr sig = b.axis("x").axis("y").build();
    Poly one = Poly::constant(sig, Coeff(1));
    Poly xm = Poly::var(sig, "x") - one, ym = Poly::var(sig, "y") - one;
    Poly acc = Poly::zero(sig);
    for (uint32_t a = 0;; ++a) {
        MonoidElem e = unit_elem(*sig);
        for (int i = 0; i < m.n; ++i)
            if (a & (1u << i)) e.exps[i] = 1;
        acc += Poly::monomial(sig, std::move(e)) * xm.pow(m.rank() - m.rk[a]) *
               ym.pow(std::popcount(a) - m.rk[a]);
        if (a == full_mask(m.n)) break;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Convolution identities (symbolic, exact)

// Kung's four-variable convolution:
//   T_M(1-ab, 1-cd) = sum_A a^(rk M - rk A) d^(|A| - rk A)
//                       T_(M|A)(1-a,1-c) T_(M/A)(1-b,1-d)
inline std::optional<Witness> kung_check(const RankTable& m) {
    SigPtr sig = SigBuilder().axis("a").axis("b").axis("c").axis("d").build();
    Poly one = Poly::constant(sig, Coeff(1));
    Poly a = Poly::var(sig, "a"), b = Poly::var(sig, "b"), c = Poly::var(sig, "c"),
         d = Poly::var(sig, "d");
    Poly lhs = tutte_eval(m, one - a * b, one - c * d);
    Poly rhs = Poly::zero(sig);
    for (uint32_t s = 0;; ++s) {
        rhs += a.pow(m.rank() - m.rk[s]) * d.pow(std::popcount(s) - m.rk[s]) *
               tutte_eval(matroid_minor(m, s, MinorMode::Restrict), one - a, one - c) *
               tutte_eval(matroid_minor(m, s, MinorMode::Contract), one - b, one - d);
        if (s == full_mask(m.n)) break;
    }
    if (lhs == rhs) return std::nullopt;
    return Witness{"Kung convolution failed on " + rank_table_key(m), lhs, rhs};
}

// Kook-Reiner-Stanton: T_M(x,y) = sum_A T_(M|A)(0,y) T_(M/A)(x,0)
inline std::optional<Witness> krs_check(const RankTable& m) {
    SigPtr sig = xy_sig();
    Poly x = Poly::var(sig, "x"), y = Poly::var(sig, "y"), zero = Poly::zero(sig);
    Poly lhs = tutte_eval(m, x, y);
    Poly rhs = Poly::zero(sig);
    for (uint32_t s = 0;; ++s) {
        rhs += tutte_eval(matroid_minor(m, s, MinorMode::Restrict), zero, y) *
               tutte_eval(matroid_minor(m, s, MinorMode::Contract), x, zero);
        if (s == full_mask(m.n)) break;
    }
    if (lhs == rhs) return std::nullopt;
    return Witness{"KRS convolution failed on " + rank_table_key(m), lhs, rhs};
}

// Iterated convolution over n-step flags, symbolic in a_1..a_k, b_1..b_k:
//   T_M(1 - a1...ak, 1 - b1...bk)
//     = sum over flags 0=A0<=...<=Ak=E of prod_i a_i^rk(M/A_i) b_i^cork(M|A_(i-1))
//           T_(M|A_i/A_(i-1))(1-a_i, 1-b_i)
inline std::optional<Witness> iterated_check(const RankTable& m, int k) {
    SigBuilder sb;
    for (int i = 1; i <= k; ++i) sb.axis("a" + std::to_string(i));
    for (int i = 1; i <= k; ++i) sb.axis("b" + std::to_string(i));
    SigPtr sig = sb.build();
    Poly one = Poly::constant(sig, Coeff(1));
    std::vector<Poly> av, bv;
    for (int i = 1; i <= k; ++i) {
        av.push_back(Poly::var(sig, "a" + std::to_string(i)));
        bv.push_back(Poly::var(sig, "b" + std::to_string(i)));
    }
    Poly aprod = one, bprod = one;
    for (int i = 0; i < k; ++i) {
        aprod *= av[i];
        bprod *= bv[i];
    }
    Poly lhs = tutte_eval(m, one - aprod, one - bprod);

    Poly rhs = Poly::zero(sig);
    // enumerate flags as nested subsets A_1 <= ... <= A_(k-1) of E (A_k = E)
    std::vector<uint32_t> flag(k + 1, 0);
    flag[k] = full_mask(m.n);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            Poly term = one;
            for (int j = 1; j <= k; ++j) {
                uint32_t lo = flag[j - 1], hi = flag[j];
                RankTable mid = matroid_minor(
                    matroid_minor(m, hi, MinorMode::Restrict),
                    compress_bits(lo, hi), MinorMode::Contract);
                RankTable contr = matroid_minor(m, flag[j], MinorMode::Contract);
                RankTable restr = matroid_minor(m, flag[j - 1], MinorMode::Restrict);
                term *= av[j - 1].pow(contr.rank()) * bv[j - 1].pow(restr.cork()) *
                        tutte_eval(mid, one - av[j - 1], one - bv[j - 1]);
            }
            rhs += term;
            return;
        }
        // choose A_i with A_(i-1) <= A_i <= E
        uint32_t lo = flag[i - 1], full = full_mask(m.n);
        uint32_t freebits = full & ~lo;
        for (uint32_t s = freebits;; s = (s - 1) & freebits) {
            flag[i] = lo | s;
            rec(i + 1);
            if (s == 0) break;
        }
    };
    rec(1);
    if (lhs == rhs) return std::nullopt;
    return Witness{"iterated convolution failed on " + rank_table_key(m), lhs, rhs};
}

// Second-root-of-unity case:
//   T_M(x^2, y^2) = sum_A (1-x)^(rk M - rk A) (1+y)^(|A| - rk A)
//                      T_(M|A)(x,y) T_(M/A)(-x,-y)
inline std::optional<Witness> signflip_check(const RankTable& m) {
    SigPtr sig = xy_sig();
    Poly x = Poly::var(sig, "x"), y = Poly::var(sig, "y");
    Poly one = Poly::constant(sig, Coeff(1));
    Poly lhs = tutte_eval(m, x * x, y * y);
    Poly rhs = Poly::zero(sig);
    for (uint32_t s = 0;; ++s) {
        rhs += (one - x).pow(m.rank() - m.rk[s]) *
               (one + y).pow(std::popcount(s) - m.rk[s]) *
               tutte_eval(matroid_minor(m, s, MinorMode::Restrict), x, y) *
               tutte_eval(matroid_minor(m, s, MinorMode::Contract),
                          Coeff(-1) * x, Coeff(-1) * y);
        if (s == full_mask(m.n)) break;
    }
    if (lhs == rhs) return std::nullopt;
    return Witness{"sign-flip convolution failed on " + rank_table_key(m), lhs, rhs};
}

}  // namespace tutte
