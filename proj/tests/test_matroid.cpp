#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tutte/matroid.hpp"
#include "tutte/minors.hpp"

using namespace tutte;

TEST_CASE("rank table validation") {
    CHECK_NOTHROW(uniform_matroid(1, 2).check_axioms());
    CHECK_THROWS_AS(RankTable(1, {0, 2}), ValidationError);          // step 2
    CHECK_THROWS_AS(RankTable(1, {1, 1}), ValidationError);          // rk(empty)
    CHECK_THROWS_AS(RankTable(2, {0, 1, 1, 1, 0}), ValidationError); // size
    // submodularity violation at A={2}, e=0, f=1:
    // rk({0,2}) + rk({1,2}) = 2 < rk({0,1,2}) + rk({2}) = 3
    CHECK_THROWS_AS(RankTable(3, {0, 1, 1, 2, 1, 1, 1, 2}), ValidationError);
}

TEST_CASE("minors of U_{1,2}") {
    RankTable u12 = uniform_matroid(1, 2);
    CHECK(matroid_minor(u12, 1u, MinorMode::Restrict) == coloop());
    CHECK(matroid_minor(u12, 1u, MinorMode::Contract) == loop());
    CHECK(matroid_minor(u12, 0u, MinorMode::Contract) == u12);
    CHECK(matroid_minor(u12, 0u, MinorMode::Delete) == u12);
    CHECK_THROWS_AS(matroid_minor(u12, 4u, MinorMode::Restrict), DomainError);
}

TEST_CASE("coassociativity on random matroids") {
    std::mt19937 rng(7);
    for (int it = 0; it < 30; ++it) {
        RankTable m = random_matroid(rng, 5);
        uint32_t full = full_mask(m.n);
        for (uint32_t a = 0; a <= full; ++a) {
            // (X|A)|B = X|B for B <= A (in compressed indices)
            RankTable ra = matroid_minor(m, a, MinorMode::Restrict);
            for (uint32_t b = a;; b = (b - 1) & a) {
                CHECK(matroid_minor(ra, compress_bits(b, a), MinorMode::Restrict) ==
                      matroid_minor(m, b, MinorMode::Restrict));
                if (b == 0) break;
            }
            // (X/A)/B' = X/(A u B)
            RankTable ca = matroid_minor(m, a, MinorMode::Contract);
            uint32_t rest = full & ~a;
            for (uint32_t b = rest;; b = (b - 1) & rest) {
                CHECK(matroid_minor(ca, compress_bits(b, rest), MinorMode::Contract) ==
                      matroid_minor(m, a | b, MinorMode::Contract));
                if (b == 0) break;
            }
        }
    }
}

TEST_CASE("duality") {
    CHECK(dual(coloop()) == loop());
    CHECK(dual(uniform_matroid(1, 2)) == uniform_matroid(1, 2));
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        RankTable m = random_matroid(rng, 5);
        CHECK(dual(dual(m)) == m);
        uint32_t full = full_mask(m.n);
        for (uint32_t a = 0; a <= full; ++a) {
            // (M \ A)^v = M^v / A  (delete A, complement convention)
            CHECK(dual(matroid_minor(m, a, MinorMode::Delete)) ==
                  matroid_minor(dual(m), a, MinorMode::Contract));
            if (a == full) break;
        }
    }
}

TEST_CASE("direct sum and components") {
    RankTable cl = direct_sum(coloop(), loop());
    CHECK(cl.rk == std::vector<int>{0, 1, 0, 1});
    CHECK(connected_components(cl) == std::vector<uint32_t>{1u, 2u});
    CHECK(connected_components(uniform_matroid(1, 2)) == std::vector<uint32_t>{3u});
    CHECK(connected_components(direct_sum(loop(), loop())).size() == 2);
    CHECK(direct_sum(cl, RankTable()) == cl);
    CHECK(direct_sum(coloop(), coloop()).rank() == 2);
}

TEST_CASE("canonical forms and enumeration counts") {
    RankTable cl = direct_sum(coloop(), loop());
    RankTable lc = direct_sum(loop(), coloop());
    CHECK(canonical_form(cl) == canonical_form(lc));
    CHECK(isomorphic(cl, lc));
    CHECK(!isomorphic(cl, uniform_matroid(1, 2)));
    CHECK(count_canonical_matroids(0) == 1);
    CHECK(count_canonical_matroids(1) == 2);
    CHECK(count_canonical_matroids(2) == 4);
    CHECK(count_canonical_matroids(3) == 8);
    CHECK(count_canonical_matroids(4) == 17);
}

TEST_CASE("tutte polynomials") {
    RankTable u12 = uniform_matroid(1, 2);
    CHECK(tutte_classical(u12).str() == "1*x^1 + 1*y^1");
    CHECK(tutte_classical(coloop()).str() == "1*x^1");
    CHECK(tutte_classical(loop()).str() == "1*y^1");

    SigPtr usig = mat_universal_sig();
    CHECK(tutte_universal(coloop()) ==
          Poly::var(usig, "u1") + Poly::var(usig, "u2"));

    // classical = universal specialized at (1, y-1, x-1, 1)
    SigPtr xy = xy_sig();
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        RankTable m = random_matroid(rng, 4);
        Poly uni = tutte_universal(m);
        Specialization s;
        s.target = xy;
        Poly one = Poly::constant(xy, Coeff(1));
        s.axis_values.emplace(0, one);
        s.axis_values.emplace(1, Poly::var(xy, "y") - one);
        s.axis_values.emplace(2, Poly::var(xy, "x") - one);
        s.axis_values.emplace(3, one);
        CHECK(uni.specialize(s) == tutte_classical(m));
    }
}

TEST_CASE("prefactor identity recovers the universal character") {
    // T_Mat(M) = u1^rk v2^cork * Tutte(1 + u2/u1, 1 + v1/v2), in Laurent axes
    SigPtr sig = SigBuilder()
                     .axis("u1", AxisDomain::Integer)
                     .axis("v1", AxisDomain::Integer)
                     .axis("u2", AxisDomain::Integer)
                     .axis("v2", AxisDomain::Integer)
                     .build();
    auto spec = CharacterSpec<MatroidSystem>::make(sig, mat_norm(sig, "u1", "v1"),
                                                   mat_norm(sig, "u2", "v2"));
    Poly one = Poly::constant(sig, Coeff(1));
    Poly u1 = Poly::var(sig, "u1"), v1 = Poly::var(sig, "v1");
    Poly u2 = Poly::var(sig, "u2"), v2 = Poly::var(sig, "v2");
    std::mt19937 rng(5);
    for (int it = 0; it < 15; ++it) {
        RankTable m = random_matroid(rng, 4);
        Poly lhs = tutte_character<MatroidSystem>(m, spec);
        Poly rhs = u1.pow(m.rank()) * v2.pow(m.cork()) *
                   tutte_eval(m, one + u2 * u1.inverse_term(),
                              one + v1 * v2.inverse_term());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bihomogeneity of the universal character") {
    SigPtr sig = mat_universal_sig();
    std::mt19937 rng(17);
    for (int it = 0; it < 15; ++it) {
        RankTable m = random_matroid(rng, 4);
        Poly t = tutte_universal(m);
        for (const auto& [mono, c] : t.terms()) {
            CHECK(mono.exps[0] + mono.exps[2] == m.rank());   // u-degree
            CHECK(mono.exps[1] + mono.exps[3] == m.cork());   // v-degree
        }
    }
}

TEST_CASE("duality of the tutte polynomial") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& m : enumerate_matroids(n)) {
            SigPtr xy = xy_sig();
            CHECK(tutte_classical(dual(m)) ==
                  tutte_eval(m, Poly::var(xy, "y"), Poly::var(xy, "x")));
        }
}

TEST_CASE("multivariate tutte collapses to classical at alpha=1") {
    std::mt19937 rng(23);
    for (int it = 0; it < 10; ++it) {
        RankTable m = random_matroid(rng, 4);
        Poly mv = tutte_multivariate(m);
        SigPtr xy = xy_sig();
        Specialization s;
        s.target = xy;
        for (int i = 0; i < m.n; ++i)
            s.axis_values.emplace(i, Poly::constant(xy, Coeff(1)));
        CHECK(mv.specialize(s) == tutte_classical(m));
    }
}

TEST_CASE("convolution identities on small matroids") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& m : enumerate_matroids(n)) {
            CHECK(!kung_check(m).has_value());
            CHECK(!krs_check(m).has_value());
            CHECK(!signflip_check(m).has_value());
            CHECK(!iterated_check(m, 3).has_value());
        }
}

TEST_CASE("engine equivalence and norm checks for matroids") {
    SigPtr sig = mat_universal_sig();
    auto spec = CharacterSpec<MatroidSystem>::make(sig, mat_norm(sig, "u1", "v1"),
                                                   mat_norm(sig, "u2", "v2"));
    auto universal_norm = mat_norm(sig, "u1", "v1");
    std::mt19937 rng(29);
    for (int it = 0; it < 25; ++it) {
        RankTable m = random_matroid(rng, 5);
        CHECK(delcon_evaluate<MatroidSystem>(m, spec) ==
              tutte_character<MatroidSystem>(m, spec));
        CHECK(!inverse_norm_check<MatroidSystem>(m, universal_norm, sig).has_value());
        // N1 multiplicativity across coproduct splits
        for (uint32_t a = 0; a <= full_mask(m.n); ++a) {
            CHECK(universal_norm(m) ==
                  universal_norm(MatroidSystem::restrict_to(m, a)) *
                      universal_norm(MatroidSystem::contract_out(m, a)));
            if (a == full_mask(m.n)) break;
        }
    }
}

TEST_CASE("grothendieck monoid of matroids is free on c and l") {
    auto pres = grothendieck_relations<MatroidSystem>(enumerate_matroids(1),
                                                      enumerate_matroids(2));
    CHECK(pres.generators.size() == 2);
    CHECK(pres.relations.empty());

    // u^rk v^cork candidate passes
    SigPtr sig = mat_universal_sig();
    CHECK(!verify_norm_candidate<MatroidSystem>(enumerate_matroids(2),
                                                mat_norm(sig, "u1", "v1"))
               .has_value());
}

TEST_CASE("exp_star of the universal norm truncation") {
    SigPtr sig = mat_universal_sig();
    auto nu = mat_norm(sig, "u1", "v1");  // on single elements: u or v
    for (int n = 0; n <= 3; ++n)
        for (const auto& m : enumerate_matroids(n))
            CHECK(exp_star<MatroidSystem>(m, nu, sig) == nu(m));
}
