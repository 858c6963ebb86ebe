#pragma once

#include "plumbing/openbook.hpp"
#include "plumbing/surgery.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plumbing::report {

using Json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are always strings ("p" or "p/q", q > 0).
Json integer(const BigInt& value);
Json rational(const Rational& value);

Json summary_json(const PlumbingGraph& g, const GraphSummary& s);
Json canonical_json(const PlumbingGraph& g, const CanonicalCycle& k);
Json divisor_json(const PlumbingGraph& g, const DivisorResult& d, const ConditionReport& condition);
Json scaled_divisor_json(const BigInt& factor, const Cycle& scaled, const ConditionReport& condition);
Json openbook_json(const PlumbingGraph& g, const OpenBookDescription& ob, const GluingReport& gluing);
Json certificate_json(const PlumbingGraph& g, const EquivalenceCertificate& cert);
Json family_json(const FamilyReport& r);
Json surgery_json(const AmbientData& ambient, const GraphSummary& s, const SmoothingInvariants& inv,
                  const SurgeryReport& r);

// Human-readable rendering of any report above: nested objects become
// indented "key: value" blocks, arrays of scalars render as (a, b, ...).
std::string render_text(const Json& report);

// Compact, key-order-preserving JSON followed by a newline.
std::string render_json(const Json& report);

} // namespace plumbing::report
