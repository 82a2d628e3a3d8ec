#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "exactbench/graph.hpp"
#include "exactbench/rational.hpp"
#include "exactbench/rng.hpp"
#include "exactbench/surd.hpp"

using namespace exb;

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6).num() == -2);
    CHECK(Rational(-4, 6).den() == 3);
    CHECK(Rational(4, -6).num() == -2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-1, 2).floor() == -1);
    CHECK(Rational(-1, 2).ceil() == 0);
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("rational text format is strict") {
    CHECK(Rational::parse("2/3") == Rational(2, 3));
    CHECK(Rational::parse("-2/3") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(2, 3).str() == "2/3");
    CHECK(Rational(-7).str() == "-7");
    for (const char* bad : {"4/6", "1/0", "2/-3", "1/1", "03", "", "/3", "1.5", "+2"})
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
    // roundtrip on random values
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational r = rng.rational(50, 50) - rng.rational(50, 50);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("surd normalization") {
    CHECK(Surd(2, 0, 2, 2) == Surd(1));              // (2+0*sqrt2)/2 = 1
    CHECK(Surd(0, 1, 1, 8) == Surd(0, 2, 1, 2));     // sqrt8 = 2 sqrt2
    CHECK(Surd(0, 3, 2, 4) == Surd(3));              // 3*sqrt4/2 = 3
    CHECK(Surd(1, 1, 1, 1) == Surd(2));              // d=1 folds into p
    CHECK(Surd(2, 4, 6, 5).p() == 1);                // gcd reduction
    CHECK(Surd(1, 0, -2, 0) == Surd(Rational(-1, 2)));
    CHECK_THROWS_AS(Surd(1, 1, 0, 2), Error);
    CHECK_THROWS_AS(Surd(1, 1, 1, -2), Error);
    CHECK(Surd(0, 0, 5, 7) == Surd(0));
}

TEST_CASE("surd comparisons: frozen cases") {
    Surd one_plus_rt2(1, 1, 1, 2);
    CHECK(one_plus_rt2 > Surd(2));
    CHECK(Surd(2, 0, 2, 2) == Surd(1));
    Surd rt2_over_5(0, 1, 5, 2);
    CHECK(rt2_over_5 < Surd(Rational(1, 3)));  // sign of 9*2 - 25
    CHECK(Surd(0, 1, 1, 2) + Surd(1, -1, 1, 2) == Surd(1));
    CHECK(-Surd(0) == Surd(0));
}

TEST_CASE("surd field mismatch is an error") {
    Surd rt2(0, 1, 1, 2), rt3(0, 1, 1, 3);
    CHECK_THROWS_AS(rt2 + rt3, Error);
    CHECK_THROWS_AS(rt2 < rt3, Error);
    CHECK_NOTHROW(rt2 + Surd(Rational(1, 2)));  // rational mixes with anything
    CHECK_NOTHROW(rt2 * rt2);
    CHECK(rt2 * rt2 == Surd(2));
}

TEST_CASE("surd floor and reduce_mod_1") {
    CHECK(Surd(0, 1, 1, 2).floor() == 1);
    CHECK(Surd(0, -1, 1, 2).floor() == -2);
    CHECK(Surd(1, 1, 2, 5).floor() == 1);  // golden ratio
    CHECK(Surd(-3).floor() == -3);

    // reduce_mod_1(3*eps - 1) with eps = sqrt2/5  ->  3*sqrt2/5
    Surd eps(0, 1, 5, 2);
    Surd v = Surd(3) * eps - Surd(1);
    CHECK(v.reduced_mod_1() == Surd(0, 3, 5, 2));

    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Surd x(Int(rng.uniform(-40, 40)), Int(rng.uniform(-40, 40)), Int(rng.uniform(1, 20)), Int(3));
        Surd o = x.reduced_mod_1();
        CHECK(o.sign() >= 0);
        CHECK((o - Surd(1)).sign() < 0);
        Surd diff = x - o;
        REQUIRE(diff.is_rational());
        CHECK(diff.to_rational().is_integer());
    }
}

TEST_CASE("surd ordering is total and consistent on a fixed field") {
    Rng rng(23);
    auto rand_surd = [&] {
        return Surd(Int(rng.uniform(-15, 15)), Int(rng.uniform(-15, 15)), Int(rng.uniform(1, 10)), Int(7));
    };
    for (int i = 0; i < 500; ++i) {
        Surd a = rand_surd(), b = rand_surd(), c = rand_surd();
        int ab = (a - b).sign(), ba = (b - a).sign();
        CHECK(ab == -ba);  // antisymmetry
        CHECK(((a < b) ? 1 : 0) + ((a == b) ? 1 : 0) + ((a > b) ? 1 : 0) == 1);
        if (a <= b && b <= c) CHECK(a <= c);  // transitivity
        if (a < b && b < c) CHECK(a < c);
    }
}

TEST_CASE("surd arithmetic round-trips") {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        Int d = rng.coin() ? 2 : 0;  // mix irrational and rational operands
        Surd x(Int(rng.uniform(-30, 30)), Int(rng.uniform(-30, 30)), Int(rng.uniform(1, 12)), d);
        Surd y(Int(rng.uniform(-30, 30)), Int(rng.uniform(-30, 30)), Int(rng.uniform(1, 12)), Int(2));
        CHECK(x + y - y == x);
        if (y.sign() != 0) CHECK(x * y / y == x);
    }
}

TEST_CASE("square-free detection") {
    for (long d : {0L, 1L, 2L, 3L, 5L, 6L, 7L, 10L, 30L}) CHECK(is_square_free(Int(d)));
    for (long d : {4L, 8L, 9L, 12L, 18L, 25L, 50L}) CHECK(!is_square_free(Int(d)));
    CHECK(is_perfect_square(Int(144)));
    CHECK(!is_perfect_square(Int(145)));
    CHECK(isqrt(Int(17)) == 4);
}

TEST_CASE("graph construction guards") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(1, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(0) == 1);
}

TEST_CASE("cycle detection") {
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(path.is_forest());

    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    auto cyc = tri.find_cycle();
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 3);

    // witness is an actual closed walk
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {4, 5}});
    auto c = g.find_cycle();
    REQUIRE(c.has_value());
    REQUIRE(c->size() >= 3);
    for (std::size_t i = 0; i < c->size(); ++i)
        CHECK(g.has_edge((*c)[i], (*c)[(i + 1) % c->size()]));
}

TEST_CASE("pruefer decoding enumerates distinct trees") {
    // n=4: all 16 codes give distinct connected 3-edge graphs
    std::set<std::vector<std::pair<int, int>>> seen;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Graph t = tree_from_pruefer({a, b}, 4);
            CHECK(t.edges().size() == 3);
            CHECK(t.is_forest());
            CHECK(t.components().size() == 1);
            seen.insert(t.edges());
        }
    CHECK(seen.size() == 16);

    Graph star = tree_from_pruefer({0, 0}, 4);
    CHECK(star.degree(0) == 3);
}

TEST_CASE("max clique against subset brute force") {
    Rng rng(43);
    for (int iter = 0; iter < 50; ++iter) {
        int n = int(rng.uniform(1, 9));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform(0, 2) == 0) g.add_edge(u, v);
        int brute = 0;
        for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s)
            if (g.is_clique_mask(s)) brute = std::max(brute, __builtin_popcountll(s));
        CHECK(g.max_clique_size() == brute);
    }
}

TEST_CASE("chordality") {
    CHECK(Graph(3, {{0, 1}, {1, 2}, {0, 2}}).is_chordal());
    CHECK(!Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}).is_chordal());
    CHECK(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}).is_chordal());
    CHECK(!Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}).is_chordal());
    CHECK(Graph(5, {{0, 1}, {1, 2}, {3, 4}}).is_chordal());  // forests are chordal
    CHECK(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}).is_chordal());
    CHECK(Graph(0).is_chordal());
}
