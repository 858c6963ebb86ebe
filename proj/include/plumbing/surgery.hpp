#pragma once

#include "plumbing/family.hpp"

#include <string>

namespace plumbing {

// Characteristic numbers of the closed manifold X containing the
// configuration. Both are user-supplied; nothing here guesses them.
struct AmbientData {
    long long chi_x = 0;
    long long sigma_x = 0;
    std::string description;
};

struct SurgeryReport {
    BigInt chi;
    BigInt sigma;
    BigInt c1_squared;   // 2 chi + 3 sigma
    Rational chi_h;      // (chi + sigma) / 4
    Rational bmy_defect; // 9 chi_h - c1^2
    std::string b1_note;

    bool chi_h_integral() const { return chi_h.is_integer(); }
};

// X_C = (X - int nu C) glued to the Milnor fiber W along the boundary.
//   chi(X_C)   = chi(X) - chi(nu C) + chi(W),  chi(W) = 1 + mu (b1(W) = 0)
//   sigma(X_C) = sigma(X) - sigma(nu C) + sigma(W),  sigma(nu C) = -m
// The signature uses Novikov additivity across the separating 3-manifold.
SurgeryReport surgery_characteristics(const AmbientData& ambient, const PlumbingGraph& g,
                                      const SmoothingInvariants& inv);

} // namespace plumbing
