#include "burau/serialize.hpp"

#include <cmath>
#include <string>

#include "burau/error.hpp"

namespace burau {

namespace {

int parse_exponent(const std::string& key) {
  std::size_t used = 0;
  int e = 0;
  try {
    e = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw ParseError("bad exponent key '" + key + "'");
  }
  if (used != key.size()) throw ParseError("bad exponent key '" + key + "'");
  return e;
}

json complex_pair(const Complex& c) { return json::array({c.real(), c.imag()}); }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const IntLaurent& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
  return j;
}

json to_json(const ComplexLaurent& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = complex_pair(c);
  return j;
}

IntLaurent int_laurent_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
  IntLaurent p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("exact coefficient must be a decimal string");
    BigInt c;
    try {
      c = BigInt(value.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad integer coefficient '" + value.get<std::string>() + "'");
    }
    p.add_term(parse_exponent(key), c);
  }
  return p;
}

ComplexLaurent complex_laurent_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
  ComplexLaurent p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_array() || value.size() != 2) throw ParseError("complex coefficient must be [re, im]");
    p.add_term(parse_exponent(key), Complex(value[0].get<double>(), value[1].get<double>()));
  }
  return p;
}

json to_json(const BurauMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.matrix.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.matrix.size(); ++j) row.push_back(to_json(m.matrix(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dimension", m.matrix.size()},
          {"flavor", m.flavor == BurauFlavor::full ? "full" : "reduced"},
          {"exponent_sum", m.exponent_sum ? json(*m.exponent_sum) : json(nullptr)},
          {"entries", std::move(rows)}};
}

BurauMatrix burau_from_json(const json& j) {
  try {
    const auto n = j.at("dimension").get<std::size_t>();
    const auto flavor = j.at("flavor").get<std::string>();
    if (flavor != "full" && flavor != "reduced") throw ParseError("unknown matrix flavor '" + flavor + "'");
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n) throw ParseError("matrix JSON has wrong number of rows");
    IntLaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix JSON row has wrong length");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = int_laurent_from_json(rows[i][k]);
    }
    BurauMatrix out{std::move(m), flavor == "full" ? BurauFlavor::full : BurauFlavor::reduced, std::nullopt};
    if (j.contains("exponent_sum") && !j["exponent_sum"].is_null()) out.exponent_sum = j["exponent_sum"].get<int>();
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

json to_json(const IntBivariate& p) {
  json j = json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_json(c));
  return j;
}

json to_json(const ComplexPolynomial& p) {
  json j = json::array();
  for (const auto& c : p.coefficients()) j.push_back(complex_pair(c));
  return j;
}

json to_json(const SweepResult& s) {
  json samples = json::array();
  for (const auto& x : s.samples) samples.push_back({{"theta", x.theta}, {"spectral_radius", number_or_null(x.radius)}});
  return {{"grid", s.grid},
          {"refined", s.refined},
          {"refinement_iterations", s.refinement_iterations},
          {"max", {{"theta", s.best.theta}, {"t", complex_pair(s.best.t)}, {"spectral_radius", s.best.radius}}},
          {"grid_max", s.grid_max()},
          {"samples", std::move(samples)},
          {"diagnostics", s.diagnostics}};
}

json to_json(const OccurrenceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const GrowthReport& g) {
  json steps = json::array();
  for (const auto& s : g.steps) {
    steps.push_back({{"power", s.power}, {"norm", s.norm}, {"estimate", s.estimate}, {"cancelled", s.cancelled}});
  }
  return {{"steps", std::move(steps)},
          {"budget_exhausted", g.budget_exhausted},
          {"square_witness", g.square_witness},
          {"exact_growth_rate", g.exact_growth_rate ? json(*g.exact_growth_rate) : json(nullptr)}};
}

json to_json(const GapReport& g) {
  return {{"lambda", g.lambda},
          {"grid", g.grid},
          {"min_resultant", number_or_null(g.min_resultant)},
          {"min_resultant_theta", g.min_resultant_theta},
          {"vanishing_resultant_points", g.vanishing_resultant_points},
          {"unit_root_points", g.unit_root_points},
          {"inconclusive_points", g.inconclusive_points},
          {"sweep_max", g.sweep_max},
          {"sweep_max_theta", g.sweep_max_theta},
          {"gap_holds", g.gap_holds}};
}

json to_json(const EntropyBound& e) {
  json spots = json::array();
  for (const auto& s : e.spots) spots.push_back({{"label", s.label}, {"t", complex_pair(s.t)}, {"spectral_radius", s.radius}});
  return {{"bound", e.bound},
          {"argmax", {{"theta", e.sweep.best.theta}, {"t", complex_pair(e.sweep.best.t)}}},
          {"sweep_max", e.sweep.best.radius},
          {"grid", e.sweep.grid},
          {"refined", e.sweep.refined},
          {"spots", std::move(spots)}};
}

}  // namespace burau
