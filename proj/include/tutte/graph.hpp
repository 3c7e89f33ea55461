#pragma once

// Graphs as a minors system on their edge sets.  Vertices are tracked
// explicitly because the empty-edge structures are "k isolated vertices" and
// that k is exactly the information the dichromatic polynomial adds over the
// cycle matroid.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"
#include "minors.hpp"
#include "poly.hpp"

namespace tutte {

struct EdgeGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // loops and multi-edges allowed

    EdgeGraph() = default;
    EdgeGraph(int v, std::vector<std::pair<int, int>> e)
        : vertices(v), edges(std::move(e)) {
        for (auto& [s, t] : edges)
            if (s < 0 || t < 0 || s >= vertices || t >= vertices)
                throw ValidationError("edge endpoint out of range");
        if ((int)edges.size() > kRankTableCap) throw CapError("too many edges");
    }

    int edge_count() const { return (int)edges.size(); }
};

namespace detail {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace detail

// components of (V, edge subset A), isolated vertices included
inline int component_count(const EdgeGraph& g, uint32_t a) {
    detail::UnionFind uf(g.vertices);
    for (int i = 0; i < g.edge_count(); ++i)
        if (a & (1u << i)) uf.unite(g.edges[i].first, g.edges[i].second);
    int k = 0;
    for (int v = 0; v < g.vertices; ++v) k += uf.find(v) == v;
    return k;
}

inline int component_count(const EdgeGraph& g) {
    return component_count(g, full_mask(g.edge_count()));
}
inline int graph_rank(const EdgeGraph& g) { return g.vertices - component_count(g); }
inline int graph_rank(const EdgeGraph& g, uint32_t a) {
    return g.vertices - component_count(g, a);
}

inline EdgeGraph graph_minor(const EdgeGraph& g, uint32_t a, MinorMode mode) {
    uint32_t full = full_mask(g.edge_count());
    if (a & ~full) throw DomainError("edge subset out of range");
    if (mode == MinorMode::Delete) return graph_minor(g, full & ~a, MinorMode::Restrict);
    if (mode == MinorMode::Restrict) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < g.edge_count(); ++i)
            if (a & (1u << i)) edges.push_back(g.edges[i]);
        return EdgeGraph(g.vertices, std::move(edges));
    }
    // contract: merge along the edges of A (a loop merges nothing), drop A
    detail::UnionFind uf(g.vertices);
    for (int i = 0; i < g.edge_count(); ++i)
        if (a & (1u << i)) uf.unite(g.edges[i].first, g.edges[i].second);
    std::vector<int> newid(g.vertices, -1);
    int nv = 0;
    for (int v = 0; v < g.vertices; ++v)
        if (uf.find(v) == v) newid[v] = nv++;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!(a & (1u << i)))
            edges.push_back({newid[uf.find(g.edges[i].first)],
                             newid[uf.find(g.edges[i].second)]});
    return EdgeGraph(nv, std::move(edges));
}

inline RankTable to_matroid(const EdgeGraph& g) {
    if (g.edge_count() > kTutteCap) throw CapError("too many edges for a rank table");
    int n = g.edge_count();
    std::vector<int> rk(size_t(1) << n);
    for (uint32_t a = 0; a < rk.size(); ++a) rk[a] = graph_rank(g, a);
    return RankTable(n, std::move(rk));
}

struct GraphSystem {
    using Value = EdgeGraph;
    static int size(const Value& g) { return g.edge_count(); }
    static Value restrict_to(const Value& g, uint32_t a) {
        return graph_minor(g, a, MinorMode::Restrict);
    }
    static Value contract_out(const Value& g, uint32_t a) {
        return graph_minor(g, a, MinorMode::Contract);
    }
    static std::string key(const Value& g) {
        // Vertex labels are internal (the species only tracks edge labels), so
        // the key minimizes the edge-endpoint sequence over vertex relabelings.
        // Edge order is preserved: edges are the ground set.
        auto render = [&](const std::vector<int>& perm) {
            std::vector<std::pair<int, int>> e = g.edges;
            for (auto& [s, t] : e) {
                s = perm[s];
                t = perm[t];
                if (s > t) std::swap(s, t);
            }
            return e;
        };
        std::vector<int> perm(g.vertices);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::pair<int, int>> best = render(perm);
        if (g.vertices <= 7) {  // beyond that, settle for the identity labeling
            while (std::next_permutation(perm.begin(), perm.end()))
                best = std::min(best, render(perm));
        }
        std::string k = "gra:" + std::to_string(g.vertices) + ":";
        for (auto& [s, t] : best)
            k += std::to_string(s) + "-" + std::to_string(t) + ",";
        return k;
    }
};

inline SigPtr gra_universal_sig() {
    return SigBuilder().axis("u1").axis("v1").axis("a").axis("u2").axis("v2").build();
}

inline ValueFn<GraphSystem> gra_norm(const SigPtr& sig, const std::string& u,
                                     const std::string& v) {
    return [sig, u, v](const EdgeGraph& g) {
        MonoidElem e = unit_elem(*sig);
        e.exps[sig->axis_index(u)] = graph_rank(g);
        e.exps[sig->axis_index(v)] = g.edge_count() - graph_rank(g);
        return Poly::monomial(sig, std::move(e));
    };
}

// twist: k isolated vertices |-> a^k
inline ValueFn<GraphSystem> gra_twist(const SigPtr& sig, const std::string& a = "a") {
    return [sig, a](const EdgeGraph& g) {
        MonoidElem e = unit_elem(*sig);
        e.exps[sig->axis_index(a)] = g.vertices;
        return Poly::monomial(sig, std::move(e));
    };
}

// Universal 5-variable character of Gra.
inline Poly graph_universal(const EdgeGraph& g) {
    SigPtr sig = gra_universal_sig();
    auto spec = CharacterSpec<GraphSystem>::make(sig, gra_norm(sig, "u1", "v1"),
                                                 gra_norm(sig, "u2", "v2"),
                                                 gra_twist(sig));
    return tutte_character<GraphSystem>(g, spec);
}

// Q_G(a,b) = sum_A a^k(A) b^(|A| - |V| + k(A))
inline Poly dichromatic(const EdgeGraph& g, const SigPtr& sig, const Poly& a,
                        const Poly& b) {
    Poly acc = Poly::zero(sig);
    for (uint32_t s = 0;; ++s) {
        int k = component_count(g, s);
        acc += a.pow(k) * b.pow(std::popcount(s) - g.vertices + k);
        if (s == full_mask(g.edge_count())) break;
    }
    return acc;
}

inline Poly dichromatic(const EdgeGraph& g) {
    SigPtr sig = SigBuilder().axis("a").axis("b").build();
    return dichromatic(g, sig, Poly::var(sig, "a"), Poly::var(sig, "b"));
}

// chromatic polynomial in the variable `q`, computed by the standard
// deletion-contraction recurrence (independent of the subset expansions)
inline Poly chromatic(const EdgeGraph& g, const SigPtr& sig, const Poly& q) {
    if (g.edge_count() == 0) return q.pow(g.vertices);
    return chromatic(graph_minor(g, 1u, MinorMode::Delete), sig, q) -
           chromatic(graph_minor(g, 1u, MinorMode::Contract), sig, q);
}

// Q_G(a1 a2, b) = sum_A Q_(G|A)(a1, b) * chi_(G/A)(a2)
inline std::optional<Witness> chromatic_convolution_check(const EdgeGraph& g) {
    SigPtr sig = SigBuilder().axis("a1").axis("a2").axis("b").build();
    Poly a1 = Poly::var(sig, "a1"), a2 = Poly::var(sig, "a2"), b = Poly::var(sig, "b");
    Poly lhs = dichromatic(g, sig, a1 * a2, b);
    Poly rhs = Poly::zero(sig);
    for (uint32_t s = 0;; ++s) {
        rhs += dichromatic(graph_minor(g, s, MinorMode::Restrict), sig, a1, b) *
               chromatic(graph_minor(g, s, MinorMode::Contract), sig, a2);
        if (s == full_mask(g.edge_count())) break;
    }
    if (lhs == rhs) return std::nullopt;
    return Witness{"chromatic convolution failed on " + GraphSystem::key(g), lhs, rhs};
}

// Small structure zoo used by relation extraction and tests.
inline std::vector<EdgeGraph> graphs_with_edges(int k) {
    std::vector<EdgeGraph> out;
    auto add = [&](int v, std::vector<std::pair<int, int>> e) {
        out.push_back(EdgeGraph(v, std::move(e)));
    };
    if (k == 0) {
        add(0, {});
        add(1, {});
        add(2, {});
    } else if (k == 1) {
        add(2, {{0, 1}});           // bridge
        add(1, {{0, 0}});           // loop
        add(3, {{0, 1}});           // bridge + isolated vertex
        add(2, {{0, 0}});           // loop + isolated vertex
    } else if (k == 2) {
        add(3, {{0, 1}, {1, 2}});   // path
        add(2, {{0, 1}, {0, 1}});   // parallel pair
        add(1, {{0, 0}, {0, 0}});   // two loops, same vertex
        add(2, {{0, 0}, {1, 1}});   // two loops, apart
        add(2, {{0, 0}, {0, 1}});   // loop + bridge sharing a vertex
        add(3, {{0, 0}, {1, 2}});   // loop + bridge apart
        add(4, {{0, 1}, {2, 3}});   // two bridges apart
        add(4, {{0, 1}, {1, 2}});   // path + isolated vertex
    }
    return out;
}

}  // namespace tutte
