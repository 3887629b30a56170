#pragma once

#include <nlohmann/json.hpp>

#include "burau/bounds.hpp"
#include "burau/fox.hpp"
#include "burau/freegroup.hpp"
#include "burau/laurent.hpp"
#include "burau/spectral.hpp"

namespace burau {

using json = nlohmann::json;

/// Exact polynomials: {"<exponent>": "<integer>"}. Complex: {"<exponent>": [re, im]}.
json to_json(const IntLaurent& p);
json to_json(const ComplexLaurent& p);
IntLaurent int_laurent_from_json(const json& j);
ComplexLaurent complex_laurent_from_json(const json& j);

/// {"dimension": n, "flavor": "full"|"reduced", "exponent_sum": e|null,
///  "entries": [[poly, ...], ...]} with rows in order.
json to_json(const BurauMatrix& m);
BurauMatrix burau_from_json(const json& j);

/// Ascending list of Laurent coefficients of the outer variable.
json to_json(const IntBivariate& p);

/// Ascending [re, im] pairs.
json to_json(const ComplexPolynomial& p);

json to_json(const SweepResult& s);
json to_json(const GrowthReport& g);
json to_json(const OccurrenceMatrix& m);
json to_json(const GapReport& g);
json to_json(const EntropyBound& e);

}  // namespace burau
