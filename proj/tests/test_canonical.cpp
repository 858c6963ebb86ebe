#include "doctest.h"

#include "corpus.hpp"

#include "plumbing/canonical.hpp"

using namespace plumbing;

TEST_CASE("canonical cycle examples") {
    CanonicalCycle a1 = canonical_cycle(parse_graph("vertex a e=-2 g=0"));
    CHECK(a1.coefficients == QVector{0});
    CHECK(a1.k_squared == Rational(0));

    CanonicalCycle n3 = canonical_cycle(corpus::family_graph(3, 1, 28));
    CHECK(n3.adjunction_rhs == std::vector<BigInt>{3, 55});
    CHECK(n3.coefficients == QVector{-29, -84});
    CHECK(n3.k_squared == Rational(-4707));
    CHECK(n3.k_squared_integral());

    CanonicalCycle n5 = canonical_cycle(corpus::family_graph(5, 3, 174));
    CHECK(n5.adjunction_rhs == std::vector<BigInt>{9, 347});
    CHECK(n5.coefficients == QVector{-89, -436});
    CHECK(n5.k_squared == Rational(-152093));
}

TEST_CASE("canonical cycle can be fractional") {
    // single (-3)-sphere: -3 r = 1
    CanonicalCycle k = canonical_cycle(parse_graph("vertex a e=-3 g=0"));
    CHECK(k.coefficients == QVector{Rational(BigInt(-1), BigInt(3))});
    CHECK(k.k_squared == Rational(BigInt(-1), BigInt(3)));
    CHECK_FALSE(k.k_squared_integral());
}

TEST_CASE("adjunction residual and K^2 identities") {
    for (const auto& named : corpus::named_graphs()) {
        CAPTURE(named.name);
        const PlumbingGraph& g = named.graph;
        CanonicalCycle k = canonical_cycle(g);
        QMatrix im = intersection_matrix(g);
        QVector rhs = to_qvector(k.adjunction_rhs);
        CHECK(im * k.coefficients == rhs);
        CHECK(k.k_squared == dot(k.coefficients, im * k.coefficients));
    }
}

TEST_CASE("ADE graphs have trivial canonical cycle") {
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "E7", "E8"}) {
        CAPTURE(name);
        CanonicalCycle k = canonical_cycle(corpus::named(name));
        for (const Rational& r : k.coefficients) CHECK(r.is_zero());
        CHECK(k.k_squared == Rational(0));
    }
}
