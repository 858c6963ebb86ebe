#include "doctest.h"

#include "corpus.hpp"

#include "plumbing/surgery.hpp"

using namespace plumbing;

namespace {

SmoothingInvariants invariants(long long mu, long long sigma) {
    SmoothingInvariants inv;
    inv.mu = mu;
    inv.sigma = sigma;
    return inv;
}

void check_identities(const SurgeryReport& r) {
    CHECK(r.c1_squared == 2 * r.chi + 3 * r.sigma);
    CHECK(r.chi_h * Rational(4) == Rational(r.chi + r.sigma));
    CHECK(r.bmy_defect == Rational(9) * r.chi_h - Rational(r.c1_squared));
}

} // namespace

TEST_CASE("surgery on the N=3 configuration") {
    SurgeryReport r = surgery_characteristics({1, -100, ""}, corpus::family_graph(3, 1, 28), invariants(9865, -5047));
    CHECK(r.chi == 9922);
    CHECK(r.sigma == -5145);
    CHECK(r.c1_squared == 4409);
    CHECK(r.chi_h == Rational(BigInt(4777), BigInt(4)));
    CHECK_FALSE(r.chi_h_integral());
    CHECK(r.bmy_defect == Rational(BigInt(25357), BigInt(4)));
    CHECK_FALSE(r.b1_note.empty());
    check_identities(r);
}

TEST_CASE("surgery on a genus one (-1)-curve") {
    SurgeryReport r = surgery_characteristics({100, -20, ""}, parse_graph("vertex a e=-1 g=1"), invariants(10, -8));
    CHECK(r.chi == 111);
    CHECK(r.sigma == -27);
    check_identities(r);
}

TEST_CASE("replacing a (-2)-sphere by a contractible-rank piece") {
    // chi(nu C) = 2, m = 1, mu = 0, sigma_W = -1: chi drops by one, sigma unchanged
    for (long long chi_x : {0, 3, 24})
        for (long long sigma_x : {-16, 0, 5}) {
            SurgeryReport r =
                surgery_characteristics({chi_x, sigma_x, ""}, parse_graph("vertex a e=-2 g=0"), invariants(0, -1));
            CHECK(r.chi == chi_x - 1);
            CHECK(r.sigma == sigma_x);
            check_identities(r);
        }
}

TEST_CASE("surgery identities across the family") {
    for (long long n : {3, 5, 6, 8}) {
        FamilyReport f = evaluate_family(FamilyParams::specialized(n));
        SurgeryReport r = surgery_characteristics({12 * n, -4 * n, ""}, f.graph, f.invariants);
        check_identities(r);
    }
}
