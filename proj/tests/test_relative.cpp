#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tutte/relative.hpp"

using namespace tutte;

// U_{1,2} on {e, e0} with e0 as the zero set
static RelMatroid u12_pointed() { return RelMatroid(uniform_matroid(1, 2), 2u); }

TEST_CASE("relative minors") {
    // an empty zero set reduces everything to plain matroid minors
    std::mt19937 rng(19);
    for (int it = 0; it < 10; ++it) {
        RankTable m = random_matroid(rng, 4);
        RelMatroid x(m, 0u);
        for (uint32_t a = 0;; ++a) {
            CHECK(rel_minor(x, a, MinorMode::Restrict).m ==
                  matroid_minor(m, a, MinorMode::Restrict));
            CHECK(rel_minor(x, a, MinorMode::Contract).m ==
                  matroid_minor(m, a, MinorMode::Contract));
            if (a == full_mask(4)) break;
        }
    }

    // contracting e in U_{1,2}/{e0} leaves a loop on e0 (Higgs lift endpoint)
    RelMatroid c = rel_minor(u12_pointed(), 1u, MinorMode::Contract);
    CHECK(c.esize() == 0);
    CHECK(c.zero == 1u);
    CHECK(c.m == loop());
    // restriction to the empty set keeps the zero set around as a coloop
    RelMatroid r = rel_minor(u12_pointed(), 0u, MinorMode::Restrict);
    CHECK(r.esize() == 0);
    CHECK(r.m == coloop());

    CHECK_THROWS_AS(rel_minor(u12_pointed(), 2u, MinorMode::Contract), DomainError);

    // coassociativity through the canonical keys, all structures with 3 elements
    for (const auto& x : enumerate_relative(3)) {
        uint32_t full = full_mask(x.esize());
        for (uint32_t a = 0; a <= full; ++a) {
            RelMatroid ca = rel_minor(x, a, MinorMode::Contract);
            uint32_t rest = full & ~a;
            for (uint32_t b = rest;; b = (b - 1) & rest) {
                CHECK(RelSystem::key(rel_minor(ca, compress_bits(b, rest),
                                               MinorMode::Contract)) ==
                      RelSystem::key(rel_minor(x, a | b, MinorMode::Contract)));
                if (b == 0) break;
            }
            RelMatroid ra = rel_minor(x, a, MinorMode::Restrict);
            for (uint32_t b = a;; b = (b - 1) & a) {
                CHECK(RelSystem::key(rel_minor(ra, compress_bits(b, a),
                                               MinorMode::Restrict)) ==
                      RelSystem::key(rel_minor(x, b, MinorMode::Restrict)));
                if (b == 0) break;
            }
        }
    }
}

TEST_CASE("zero set labels do not matter") {
    // coloop on E, loop in the zero set, built with either interleaving
    RelMatroid a(direct_sum(coloop(), loop()), 2u);
    RelMatroid b(direct_sum(loop(), coloop()), 1u);
    CHECK(rel_equal(a, b));
    CHECK(RelSystem::key(a) == RelSystem::key(b));
    // swapping which element is in the zero set does matter
    RelMatroid c(direct_sum(coloop(), loop()), 1u);
    CHECK(!rel_equal(a, c));
}

TEST_CASE("perspective from a relative matroid") {
    // empty zero set gives the identity perspective
    for (const auto& m : enumerate_matroids(3)) {
        Perspective p = to_perspective(RelMatroid(m, 0u));
        CHECK(p.m == m);
        CHECK(p.mp == m);
    }
    Perspective p = to_perspective(u12_pointed());
    CHECK(p.m == coloop());
    CHECK(p.mp == loop());

    // to_perspective commutes with minors, all structures with <= 4 elements
    for (int total = 0; total <= 4; ++total)
        for (const auto& x : enumerate_relative(total)) {
            Perspective px = to_perspective(x);
            for (uint32_t a = 0;; ++a) {
                for (MinorMode mode : {MinorMode::Restrict, MinorMode::Contract}) {
                    Perspective q = to_perspective(rel_minor(x, a, mode));
                    CHECK(q.m == matroid_minor(px.m, a, mode));
                    CHECK(q.mp == matroid_minor(px.mp, a, mode));
                }
                if (a == full_mask(x.esize())) break;
            }
        }
}

TEST_CASE("relative tutte with empty zero set is las vergnas of (M, M)") {
    for (const auto& m : enumerate_matroids(3)) {
        RelMatroid x(m, 0u);
        R0Legend legend = rel_twist_legend(x);
        CHECK(legend.axis_names.empty());
        SigPtr sig = rel_sig(legend, {"x", "y", "z"});
        CHECK(relative_tutte(x, sig, legend) == las_vergnas(Perspective(m, m), sig));
    }
}

TEST_CASE("two point golden value") {
    RelMatroid x = u12_pointed();
    R0Legend legend = rel_twist_legend(x);
    // the zero-set matroids that occur are a loop (after contracting e) and a
    // coloop (before); sorted canonical keys put the loop first
    REQUIRE(legend.component_keys ==
            std::vector<std::string>{rank_table_key(loop()), rank_table_key(coloop())});
    SigPtr sig = rel_sig(legend, {"x", "y", "z"});
    Poly expected = Poly::var(sig, "C0") + Poly::var(sig, "C1") * Poly::var(sig, "z");
    CHECK(relative_tutte(x, sig, legend) == expected);
}

TEST_CASE("collapsing the zero-set variables recovers las vergnas") {
    for (int total = 0; total <= 4; ++total)
        for (const auto& x : enumerate_relative(total)) {
            R0Legend legend = rel_twist_legend(x);
            SigPtr sig = rel_sig(legend, {"x", "y", "z"});
            SigPtr target = xyz_sig();
            Specialization s;
            s.target = target;
            for (size_t i = 0; i < legend.axis_names.size(); ++i)
                s.axis_values.emplace((int)i, Poly::constant(target, Coeff(1)));
            Poly collapsed = relative_tutte(x, sig, legend).specialize(s);
            CHECK(collapsed == las_vergnas(to_perspective(x), target));
            int zdeg = x.m.rank() - x.rank_e(full_mask(x.esize()));
            CHECK(pointed_las_vergnas(x, target) ==
                  Poly::var(target, "z").pow(zdeg) * collapsed);
        }
}

TEST_CASE("universal character agrees with deletion-contraction") {
    for (int total = 0; total <= 3; ++total)
        for (const auto& x : enumerate_relative(total)) {
            R0Legend legend = rel_twist_legend(x);
            SigPtr sig = rel_sig(legend, {"u1", "v1", "w1", "u2", "v2", "w2"});
            Poly t = relative_universal(x, sig, legend);
            auto spec = CharacterSpec<RelSystem>::make(
                sig, rel_norm(sig, "u1", "v1", "w1"), rel_norm(sig, "u2", "v2", "w2"),
                rel_twist(sig, legend));
            std::map<std::string, Poly> memo;
            CHECK(t == delcon_evaluate<RelSystem>(x, spec, &memo));

            // (u1,v1,w1,u2,v2,w2) -> (1, y-1, 1, x-1, 1, z) gives the
            // three-variable relative Tutte polynomial
            SigPtr target = rel_sig(legend, {"x", "y", "z"});
            int base = (int)legend.axis_names.size();
            Poly one = Poly::constant(target, Coeff(1));
            Specialization s;
            s.target = target;
            for (int i = 0; i < base; ++i)
                s.axis_values.emplace(i, Poly::var(target, legend.axis_names[i]));
            s.axis_values.emplace(base + 0, one);
            s.axis_values.emplace(base + 1, Poly::var(target, "y") - one);
            s.axis_values.emplace(base + 2, one);
            s.axis_values.emplace(base + 3, Poly::var(target, "x") - one);
            s.axis_values.emplace(base + 4, one);
            s.axis_values.emplace(base + 5, Poly::var(target, "z"));
            CHECK(t.specialize(s) == relative_tutte(x, target, legend));
        }
}

TEST_CASE("convolution identities hold for relative matroids") {
    for (int total = 0; total <= 3; ++total)
        for (const auto& x : enumerate_relative(total)) {
            R0Legend legend = rel_twist_legend(x);
            SigPtr sig = rel_sig(
                legend, {"u1", "v1", "w1", "u2", "v2", "w2", "u3", "v3", "w3"});
            auto n1 = rel_norm(sig, "u1", "v1", "w1");
            auto n2 = rel_norm(sig, "u2", "v2", "w2");
            auto n3 = rel_norm(sig, "u3", "v3", "w3");
            auto tau = rel_twist(sig, legend);
            CHECK(!inverse_norm_check<RelSystem>(x, n1, sig));
            CHECK(!convolution_check<RelSystem>(x, sig, n1, n2, n3, tau, tau));
        }
    // iterated version with two intermediate subsets on a couple of structures
    for (const RelMatroid& x :
         {u12_pointed(), RelMatroid(uniform_matroid(2, 3), 4u)}) {
        R0Legend legend = rel_twist_legend(x);
        SigPtr sig = rel_sig(
            legend, {"u1", "v1", "w1", "u2", "v2", "w2", "u3", "v3", "w3"});
        std::vector<ValueFn<RelSystem>> norms = {rel_norm(sig, "u1", "v1", "w1"),
                                                 rel_norm(sig, "u2", "v2", "w2"),
                                                 rel_norm(sig, "u3", "v3", "w3")};
        std::vector<ValueFn<RelSystem>> twists = {rel_twist(sig, legend),
                                                  rel_twist(sig, legend)};
        CHECK(!iterated_convolution_check<RelSystem>(x, sig, norms, twists));
    }
}

TEST_CASE("twist is multiplicative over connected components") {
    std::mt19937 rng(23);
    for (int it = 0; it < 12; ++it) {
        RankTable m = random_matroid(rng, 4);
        RelMatroid x(m, full_mask(4));  // everything in the zero set
        R0Legend legend = rel_twist_legend(x);
        SigPtr sig = rel_sig(legend, {});
        auto tau = rel_twist(sig, legend);
        Poly prod = Poly::constant(sig, Coeff(1));
        auto blocks = connected_components(m);
        for (uint32_t comp : blocks) {
            RankTable part = matroid_minor(m, comp, MinorMode::Restrict);
            prod = prod * tau(RelMatroid(part, full_mask(part.n)));
        }
        CHECK(tau(x) == prod);
        // the components really do reassemble the matroid
        RankTable rebuilt(0, {0}, false);
        for (uint32_t comp : blocks)
            rebuilt = direct_sum(rebuilt, matroid_minor(m, comp, MinorMode::Restrict));
        CHECK(isomorphic(rebuilt, m));
    }
}
