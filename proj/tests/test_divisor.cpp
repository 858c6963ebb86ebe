#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"

#include "plumbing/divisor.hpp"
#include "plumbing/errors.hpp"

using namespace plumbing;

namespace {

Cycle cycle(std::initializer_list<long long> xs) {
    Cycle c;
    for (long long x : xs) c.coefficients.emplace_back(x);
    return c;
}

std::vector<long long> to_ll(const std::vector<BigInt>& xs) {
    std::vector<long long> out;
    for (const BigInt& x : xs) out.push_back(x.convert_to<long long>());
    return out;
}

} // namespace

TEST_CASE("open-book existence condition") {
    PlumbingGraph n3 = corpus::family_graph(3, 1, 28);
    CanonicalCycle k3 = canonical_cycle(n3);

    ConditionReport r = cnp_condition(n3, k3, cycle({30, 87}));
    CHECK(r.holds);
    CHECK(r.slack == std::vector<BigInt>{0, 0});

    ConditionReport bad = cnp_condition(n3, k3, cycle({1, 1}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.slack[1] == 57);

    PlumbingGraph one = parse_graph("vertex a e=-1 g=1");
    ConditionReport r1 = cnp_condition(one, canonical_cycle(one), cycle({2}));
    CHECK(r1.holds);
    CHECK(r1.slack == std::vector<BigInt>{0});

    CHECK_THROWS_AS(cnp_condition(n3, k3, cycle({0, 0})), ValidationError);
    CHECK_THROWS_AS(cnp_condition(n3, k3, cycle({-1, 5})), ValidationError);
    CHECK_THROWS_AS(cnp_condition(n3, k3, cycle({1})), DimensionError);
}

TEST_CASE("minimal divisor examples") {
    PlumbingGraph n3 = corpus::family_graph(3, 1, 28);
    DivisorResult d3 = minimal_cnp_divisor(n3, canonical_cycle(n3));
    CHECK(d3.divisor == cycle({30, 87}));
    CHECK(d3.binding.entries == std::vector<BigInt>{3, 57});

    PlumbingGraph one = parse_graph("vertex a e=-1 g=1");
    DivisorResult d1 = minimal_cnp_divisor(one, canonical_cycle(one));
    CHECK(d1.divisor == cycle({2}));
    CHECK(d1.binding.entries == std::vector<BigInt>{2});

    // (-2)-sphere: the inequality is already met at d = 0, so d >= 1 and
    // n >= 1 decide: d = 1, n = 2.
    PlumbingGraph a1 = parse_graph("vertex a e=-2 g=0");
    DivisorResult da = minimal_cnp_divisor(a1, canonical_cycle(a1));
    CHECK(da.divisor == cycle({1}));
    CHECK(da.binding.entries == std::vector<BigInt>{2});
    auto bf = oracle::brute_force_divisor(a1, 10);
    CHECK(bf.pointwise_min == std::vector<long long>{1});

    auto bf3 = oracle::brute_force_divisor(n3, 100);
    CHECK(bf3.pointwise_min == std::vector<long long>{30, 87});
    auto bf1 = oracle::brute_force_divisor(one, 10);
    CHECK(bf1.pointwise_min == std::vector<long long>{2});
}

TEST_CASE("minimal divisor matches brute force on small graphs") {
    // the m = 3 part of the corpus is covered by the acceptance suite
    for (const PlumbingGraph& g : corpus::small_corpus(0)) {
        if (g.size() > 2) continue;
        CAPTURE(serialize_graph(g));
        DivisorResult d = minimal_cnp_divisor(g, canonical_cycle(g));
        auto bf = oracle::brute_force_divisor(g, 200);
        REQUIRE(bf.feasible_count > 0);
        CHECK(bf.min_is_feasible);
        CHECK(to_ll(d.divisor.coefficients) == bf.pointwise_min);
        CHECK(d.binding.positive());
        CHECK(d.binding == binding_of(g, d.divisor));
    }
}

TEST_CASE("feasible divisors form a meet-semilattice") {
    for (const char* text : {"vertex a e=-3 g=1\nvertex b e=-2 g=2\nedge a b",
                             "vertex a e=-2 g=3\nvertex b e=-1 g=3\nedge a b",
                             "vertex a e=-4 g=0\nvertex b e=-5 g=1\nedge a b"}) {
        PlumbingGraph g = parse_graph(text);
        auto bf = oracle::brute_force_divisor(g, 120);
        REQUIRE(bf.sample.size() > 4);
        auto im = oracle::int_intersection_matrix(g);
        std::vector<long long> rhs;
        for (const Vertex& v : g.vertices()) rhs.push_back(2 * v.genus - 2 - v.euler);
        for (const auto& x : bf.sample)
            for (const auto& y : bf.sample) {
                std::vector<long long> meet(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) meet[i] = std::min(x[i], y[i]);
                CHECK(oracle::divisor_feasible(im, rhs, meet));
            }
    }
}

TEST_CASE("scaling preserves the condition") {
    PlumbingGraph n3 = corpus::family_graph(3, 1, 28);
    CanonicalCycle k3 = canonical_cycle(n3);
    Cycle doubled = scale_divisor(n3, k3, cycle({30, 87}), 2);
    CHECK(doubled == cycle({60, 174}));
    CHECK(cnp_condition_holds(n3, k3, doubled));

    PlumbingGraph one = parse_graph("vertex a e=-1 g=1");
    CanonicalCycle k1 = canonical_cycle(one);
    Cycle tripled = scale_divisor(one, k1, cycle({2}), 3);
    CHECK(tripled == cycle({6}));
    CHECK(cnp_condition(one, k1, tripled).slack == std::vector<BigInt>{-4});

    CHECK(scale_divisor(n3, k3, cycle({30, 87}), 1) == cycle({30, 87}));
    CHECK_THROWS_AS(scale_divisor(n3, k3, cycle({30, 87}), 0), ValidationError);
    CHECK_THROWS_AS(scale_divisor(n3, k3, cycle({1, 1}), 2), ValidationError);

    for (const auto& named : corpus::named_graphs()) {
        CAPTURE(named.name);
        CanonicalCycle k = canonical_cycle(named.graph);
        DivisorResult d = minimal_cnp_divisor(named.graph, k);
        for (int factor : {2, 3, 5}) {
            CHECK(cnp_condition_holds(named.graph, k, scale_divisor(named.graph, k, d.divisor, factor)));
        }
    }
}

TEST_CASE("minimal divisor rejects invalid graphs") {
    PlumbingGraph pos = parse_graph("vertex a e=1 g=0");
    CanonicalCycle k;
    k.adjunction_rhs = {BigInt(-3)};
    CHECK_THROWS_AS(minimal_cnp_divisor(pos, k), ValidationError);
}
