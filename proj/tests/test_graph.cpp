#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"

using namespace tutte;

static EdgeGraph triangle() { return EdgeGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

static EdgeGraph random_graph(std::mt19937& rng, int maxv, int maxe) {
    int v = 1 + (int)(rng() % (uint32_t)maxv);
    int e = (int)(rng() % (uint32_t)(maxe + 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < e; ++i)
        edges.push_back({(int)(rng() % (uint32_t)v), (int)(rng() % (uint32_t)v)});
    return EdgeGraph(v, std::move(edges));
}

TEST_CASE("graph minors") {
    EdgeGraph e(2, {{0, 1}});
    EdgeGraph c = graph_minor(e, 1u, MinorMode::Contract);
    CHECK(c.vertices == 1);
    CHECK(c.edges.empty());
    EdgeGraph l(1, {{0, 0}});
    EdgeGraph dl = graph_minor(l, 1u, MinorMode::Delete);
    CHECK(dl.vertices == 1);
    CHECK(dl.edges.empty());
    // contracting a loop also just removes it
    EdgeGraph cl = graph_minor(l, 1u, MinorMode::Contract);
    CHECK(cl.vertices == 1);
    CHECK(graph_minor(triangle(), 0u, MinorMode::Contract).edge_count() == 3);
}

TEST_CASE("graph coassociativity") {
    std::mt19937 rng(41);
    for (int it = 0; it < 40; ++it) {
        EdgeGraph g = random_graph(rng, 4, 5);
        uint32_t full = full_mask(g.edge_count());
        for (uint32_t a = 0; a <= full; ++a) {
            EdgeGraph ca = graph_minor(g, a, MinorMode::Contract);
            uint32_t rest = full & ~a;
            for (uint32_t b = rest;; b = (b - 1) & rest) {
                EdgeGraph lhs =
                    graph_minor(ca, compress_bits(b, rest), MinorMode::Contract);
                EdgeGraph rhs = graph_minor(g, a | b, MinorMode::Contract);
                CHECK(GraphSystem::key(lhs) == GraphSystem::key(rhs));
                if (b == 0) break;
            }
            if (a == full) break;
        }
    }
}

TEST_CASE("to_matroid") {
    CHECK(to_matroid(triangle()) == uniform_matroid(2, 3));
    CHECK(to_matroid(EdgeGraph(1, {{0, 0}})) == loop());
    CHECK(to_matroid(EdgeGraph(2, {{0, 1}})) == coloop());
    // commutes with minors
    std::mt19937 rng(43);
    for (int it = 0; it < 25; ++it) {
        EdgeGraph g = random_graph(rng, 4, 5);
        for (uint32_t a = 0; a <= full_mask(g.edge_count()); ++a) {
            CHECK(to_matroid(graph_minor(g, a, MinorMode::Restrict)) ==
                  matroid_minor(to_matroid(g), a, MinorMode::Restrict));
            CHECK(to_matroid(graph_minor(g, a, MinorMode::Contract)) ==
                  matroid_minor(to_matroid(g), a, MinorMode::Contract));
            if (a == full_mask(g.edge_count())) break;
        }
    }
}

TEST_CASE("dichromatic polynomial") {
    CHECK(dichromatic(EdgeGraph(2, {{0, 1}})).str() == "1*a^2 + 1*a^1");
    CHECK(dichromatic(EdgeGraph(1, {{0, 0}})).str() == "1*a^1*b^1 + 1*a^1");
    CHECK(dichromatic(EdgeGraph(3, {})).str() == "1*a^3");
    // deletion-contraction recurrence: Q_G = b^cork(G\e^c) Q_(G/e) + Q_(G\e)
    std::mt19937 rng(47);
    SigPtr sig = SigBuilder().axis("a").axis("b").build();
    Poly a = Poly::var(sig, "a"), b = Poly::var(sig, "b");
    for (int it = 0; it < 25; ++it) {
        EdgeGraph g = random_graph(rng, 4, 5);
        if (g.edge_count() == 0) continue;
        EdgeGraph single = graph_minor(g, 1u, MinorMode::Restrict);
        int cork1 = single.edge_count() - graph_rank(single);  // 1 iff e loop
        CHECK(dichromatic(g, sig, a, b) ==
              b.pow(cork1) * dichromatic(graph_minor(g, 1u, MinorMode::Contract), sig,
                                         a, b) +
                  dichromatic(graph_minor(g, 1u, MinorMode::Delete), sig, a, b));
    }
}

TEST_CASE("universal graph character and specializations") {
    SigPtr sig = gra_universal_sig();
    std::mt19937 rng(53);
    for (int it = 0; it < 20; ++it) {
        EdgeGraph g = random_graph(rng, 4, 5);
        Poly uni = graph_universal(g);
        Poly one;
        // (1, y-1, 1, x-1, 1) -> classical Tutte of the cycle matroid
        {
            SigPtr xy = xy_sig();
            Specialization s;
            s.target = xy;
            one = Poly::constant(xy, Coeff(1));
            s.axis_values.emplace(0, one);
            s.axis_values.emplace(1, Poly::var(xy, "y") - one);
            s.axis_values.emplace(2, one);
            s.axis_values.emplace(3, Poly::var(xy, "x") - one);
            s.axis_values.emplace(4, one);
            CHECK(uni.specialize(s) == tutte_classical(to_matroid(g)));
        }
        // (1, b, a, 1, 1) -> dichromatic
        {
            SigPtr ab = SigBuilder().axis("a").axis("b").build();
            Specialization s;
            s.target = ab;
            one = Poly::constant(ab, Coeff(1));
            s.axis_values.emplace(0, one);
            s.axis_values.emplace(1, Poly::var(ab, "b"));
            s.axis_values.emplace(3, one);
            s.axis_values.emplace(4, one);
            CHECK(uni.specialize(s) == dichromatic(g));
        }
    }
}

TEST_CASE("dichromatic is not a matroid invariant") {
    EdgeGraph plain_edge(2, {{0, 1}});
    EdgeGraph with_isolated(3, {{0, 1}});
    CHECK(to_matroid(plain_edge) == to_matroid(with_isolated));
    SigPtr sig = SigBuilder().axis("a").axis("b").build();
    Poly a = Poly::var(sig, "a"), b = Poly::var(sig, "b");
    CHECK(dichromatic(with_isolated, sig, a, b) ==
          a * dichromatic(plain_edge, sig, a, b));
    CHECK(dichromatic(with_isolated) != dichromatic(plain_edge));
}

TEST_CASE("chromatic polynomial oracle") {
    SigPtr sig = SigBuilder().axis("q").build();
    Poly q = Poly::var(sig, "q");
    Poly one = Poly::constant(sig, Coeff(1));
    // triangle: q(q-1)(q-2)
    CHECK(chromatic(triangle(), sig, q) ==
          q * (q - one) * (q - one - one));
    // loop kills it
    CHECK(chromatic(EdgeGraph(1, {{0, 0}}), sig, q).is_zero());
}

TEST_CASE("chromatic convolution") {
    CHECK(!chromatic_convolution_check(EdgeGraph(2, {{0, 1}})).has_value());
    CHECK(!chromatic_convolution_check(triangle()).has_value());
    CHECK(!chromatic_convolution_check(EdgeGraph(3, {})).has_value());
    std::mt19937 rng(59);
    for (int it = 0; it < 10; ++it)
        CHECK(!chromatic_convolution_check(random_graph(rng, 4, 4)).has_value());
}

TEST_CASE("graph engine equivalence and norms") {
    SigPtr sig = gra_universal_sig();
    auto spec = CharacterSpec<GraphSystem>::make(sig, gra_norm(sig, "u1", "v1"),
                                                 gra_norm(sig, "u2", "v2"),
                                                 gra_twist(sig));
    std::mt19937 rng(61);
    for (int it = 0; it < 20; ++it) {
        EdgeGraph g = random_graph(rng, 4, 5);
        CHECK(delcon_evaluate<GraphSystem>(g, spec) ==
              tutte_character<GraphSystem>(g, spec));
    }
    // the graph norm candidate respects all 2-edge relations
    CHECK(!verify_norm_candidate<GraphSystem>(graphs_with_edges(2),
                                              gra_norm(sig, "u1", "v1"))
               .has_value());
    // twist is multiplicative on Gra[0] (disjoint unions of isolated vertices)
    auto tw = gra_twist(sig);
    CHECK(tw(EdgeGraph(3, {})) == tw(EdgeGraph(1, {})) * tw(EdgeGraph(2, {})));
}
