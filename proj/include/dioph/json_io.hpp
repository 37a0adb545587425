#pragma once

#include <nlohmann/json.hpp>

#include "dioph/closed_form.hpp"
#include "dioph/solve.hpp"

namespace dioph {

// Stable-ordered JSON with every number rendered as a decimal string
// (rationals as "num/den"), safe for arbitrary precision consumers.
using Json = nlohmann::ordered_json;

Json to_json(const Int& n);
Json to_json(const Rat& r);
Json to_json(const Solution& s);
Json to_json(const PellEquation& eq);
Json to_json(const GeneralQuadratic& gq);
Json to_json(const Classification& c);
Json to_json(const Mat2& m);
Json to_json(const Mat3Q& m);
Json to_json(const Automorphism& aut);
Json to_json(const QuadraticNumber& v);
Json to_json(const ClosedForm& cf);
Json to_json(const AffineTransform& t);
Json to_json(const VerificationReport& report);

}  // namespace dioph
