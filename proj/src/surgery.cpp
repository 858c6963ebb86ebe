#include "plumbing/surgery.hpp"

namespace plumbing {

SurgeryReport surgery_characteristics(const AmbientData& ambient, const PlumbingGraph& g,
                                      const SmoothingInvariants& inv) {
    GraphSummary nbhd = validate(g);
    SurgeryReport r;
    r.chi = BigInt(ambient.chi_x) - nbhd.chi_neighborhood + 1 + inv.mu;
    r.sigma = BigInt(ambient.sigma_x) + static_cast<long long>(nbhd.m) + inv.sigma;
    r.c1_squared = 2 * r.chi + 3 * r.sigma;
    r.chi_h = Rational(r.chi + r.sigma, 4);
    r.bmy_defect = Rational(9) * r.chi_h - Rational(r.c1_squared);
    r.b1_note = "b1(X_C) = 0 holds when the inclusion of the configuration into X is onto on H_1 "
                "(the Milnor fiber has b1 = 0); not computed here";
    return r;
}

} // namespace plumbing
