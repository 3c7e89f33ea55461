#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tutte/coeff.hpp"
#include "tutte/factor.hpp"
#include "tutte/intmatrix.hpp"
#include "tutte/monoid.hpp"
#include "tutte/poly.hpp"

using namespace tutte;

TEST_CASE("gaussian rational coefficients") {
    Coeff i = Coeff::i();
    CHECK(i * i == Coeff(-1));
    CHECK((Coeff(2) + i) * (Coeff(2) - i) == Coeff(5));
    CHECK(Coeff(BigRat(1, 3)) * Coeff(3) == Coeff(1));
    CHECK(Coeff(5).pow(-2) == Coeff(BigRat(1, 25)));
    CHECK((Coeff(1) + i).pow(4) == Coeff(-4));
    CHECK(Coeff(0).is_zero());
    CHECK(Coeff(BigRat(1, 2)).str() == "1/2");
    CHECK((Coeff(1) + i).str() == "(1+i)");
    CHECK((-i).str() == "-i");
}

static SigPtr uvw_sig() {
    return SigBuilder()
        .axis("u")
        .axis("v")
        .axis("w")
        .rule("w", "u", "v")
        .build();
}

TEST_CASE("canonicalization with quotient rule w^2 = u v") {
    SigPtr sig = uvw_sig();
    MonoidElem e = unit_elem(*sig);
    e.exps[2] = 5;  // w^5 -> u^2 v^2 w
    canonicalize(*sig, e);
    CHECK(e.exps == std::vector<long long>{2, 2, 1});
    MonoidElem e2 = e;
    canonicalize(*sig, e2);  // idempotent
    CHECK(e2 == e);

    MonoidElem neg = unit_elem(*sig);
    neg.exps[0] = -1;
    CHECK_THROWS_AS(canonicalize(*sig, neg), DomainError);
}

TEST_CASE("quotient rule folds into multiplication") {
    SigPtr sig = uvw_sig();
    Poly w = Poly::var(sig, "w");
    Poly u = Poly::var(sig, "u");
    Poly v = Poly::var(sig, "v");
    CHECK(w * w == u * v);
    CHECK((w * w + u * v + w).str() == "2*u^1*v^1 + 1*w^1");
}

TEST_CASE("polynomial ring axioms against evaluation oracle") {
    // Evaluate at numeric points compatible with w^2 = u v (u = r^2, v = s^2,
    // w = r s): evaluation is then a ring homomorphism, giving an oracle
    // independent of the term-merge implementation.
    SigPtr sig = uvw_sig();
    std::mt19937 rng(12345);
    auto random_poly = [&]() {
        Poly p = Poly::zero(sig);
        int terms = (int)(rng() % 5);
        for (int t = 0; t < terms; ++t) {
            MonoidElem e = unit_elem(*sig);
            for (int a = 0; a < 3; ++a) e.exps[a] = rng() % 3;
            p += Poly::monomial(sig, e, Coeff((long long)(rng() % 7) - 3));
        }
        return p;
    };
    auto eval = [&](const Poly& p, long long r, long long s) {
        Coeff acc(0);
        for (const auto& [m, c] : p.terms()) {
            Coeff t = c;
            t *= Coeff(r * r).pow(m.exps[0]);
            t *= Coeff(s * s).pow(m.exps[1]);
            t *= Coeff(r * s).pow(m.exps[2]);
            acc += t;
        }
        return acc;
    };
    for (int it = 0; it < 50; ++it) {
        Poly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        for (long long r = 1; r <= 3; ++r)
            for (long long s = 1; s <= 2; ++s) {
                CHECK(eval(a * b, r, s) == eval(a, r, s) * eval(b, r, s));
                CHECK(eval(a + b, r, s) == eval(a, r, s) + eval(b, r, s));
            }
    }
}

TEST_CASE("signature mismatch is rejected") {
    SigPtr s1 = SigBuilder().axis("x").build();
    SigPtr s2 = SigBuilder().axis("y").build();
    CHECK_THROWS_AS(Poly::var(s1, "x") + Poly::var(s2, "y"), SignatureError);
    // same shape, different pointer: fine
    SigPtr s3 = SigBuilder().axis("x").build();
    CHECK(Poly::var(s1, "x") == Poly::var(s3, "x"));
}

TEST_CASE("specialization") {
    SigPtr src = SigBuilder().axis("x").axis("y", AxisDomain::Integer).build();
    SigPtr dst = SigBuilder().axis("a").axis("y", AxisDomain::Integer).build();
    Poly x = Poly::var(src, "x");
    Poly y = Poly::var(src, "y");
    Poly p = x * x * y + Coeff(2) * x + Poly::constant(src, Coeff(5));

    SECTION("substitute one axis, pass the other through by name") {
        Specialization s;
        s.target = dst;
        Poly a = Poly::var(dst, "a");
        s.axis_values.emplace(0, a + Poly::constant(dst, Coeff(1)));  // x -> a+1
        Poly q = p.specialize(s);
        Poly ya = Poly::var(dst, "y");
        Poly one = Poly::constant(dst, Coeff(1));
        CHECK(q == (a + one) * (a + one) * ya + Coeff(2) * (a + one) +
                       Poly::constant(dst, Coeff(5)));
    }
    SECTION("missing assignment") {
        Specialization s;
        s.target = SigBuilder().axis("a").build();
        s.axis_values.emplace(0, Poly::var(s.target, "a"));
        CHECK_THROWS_AS(p.specialize(s), MissingAssignmentError);
    }
    SECTION("negative exponents need invertible values") {
        Poly q = Poly::var(src, "y").pow(-2);
        Specialization s;
        s.target = dst;
        s.axis_values.emplace(1, Poly::constant(dst, Coeff(2)));
        CHECK(q.specialize(s) == Poly::constant(dst, Coeff(BigRat(1, 4))));
    }
}

TEST_CASE("half axes store doubled exponents and specialize by generator") {
    SigPtr sig = SigBuilder().half_axis("q").build();
    Poly g = Poly::var(sig, "q");  // q^(1/2)
    CHECK(g.str() == "1*q^(1/2)");
    CHECK((g * g).str() == "1*q^1");
    CHECK((g * g * g).str() == "1*q^(3/2)");

    // q^(1/2) -> i * t: then q^1 -> -t^2
    SigPtr dst = SigBuilder().axis("t").build();
    Specialization s;
    s.target = dst;
    s.axis_values.emplace(0, Coeff::i() * Poly::var(dst, "t"));
    Poly q1 = g * g;
    Poly t = Poly::var(dst, "t");
    CHECK(q1.specialize(s) == Coeff(-1) * (t * t));
}

TEST_CASE("prime axes") {
    SigPtr sig = SigBuilder().axis("x").prime_axis("a").build();
    Poly m6 = Poly::prime_monomial(sig, 0, factorize(6));
    Poly m10 = Poly::prime_monomial(sig, 0, factorize(10));
    Poly m60 = Poly::prime_monomial(sig, 0, factorize(60));
    CHECK(m6 * m10 == m60);
    CHECK(m60.str() == "[2^2*3^1*5^1]");
    CHECK((m6 * Poly::var(sig, "x")).str() == "[2^1*3^1]*x^1");

    // non-rational prime axis rejects inverses
    CHECK_THROWS_AS(Poly::prime_monomial(sig, 0, factorize_ratio(1, 2)), DomainError);
    SigPtr rsig = SigBuilder().prime_axis("a", true).build();
    Poly half = Poly::prime_monomial(rsig, 0, factorize_ratio(1, 2));
    Poly two = Poly::prime_monomial(rsig, 0, factorize(2));
    CHECK(half * two == Poly::constant(rsig, Coeff(1)));

    // specialize primes to numbers: "full" style p -> p
    SigPtr dst = SigBuilder().axis("x").build();
    Specialization s;
    s.target = dst;
    s.prime_values.emplace(0, [&](long long p) { return Poly::constant(dst, Coeff(p)); });
    CHECK((m60 * Poly::var(sig, "x")).specialize(s) ==
          Coeff(60) * Poly::var(dst, "x"));
}

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(360) == Factorization{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize_ratio(4, 6) == Factorization{{2, 1}, {3, -1}});
    CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("smith normal form") {
    std::mt19937 rng(999);
    for (int it = 0; it < 200; ++it) {
        int r = 1 + (int)(rng() % 4), c = 1 + (int)(rng() % 4);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = (long long)(rng() % 21) - 10;
        SmithResult s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        // diagonal with divisibility chain, off-diagonal zero
        for (int i = 0; i < s.d.rows(); ++i)
            for (int j = 0; j < s.d.cols(); ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
        for (size_t i = 0; i + 1 < s.factors.size(); ++i) {
            CHECK(s.factors[i] > 0);
            CHECK(s.factors[i + 1] % s.factors[i] == 0);
        }
    }
    // known case
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(1, 0) = 6;
    m(1, 1) = 8;
    auto s = smith_normal_form(m);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == 2);
    CHECK(s.factors[1] == 4);
}
