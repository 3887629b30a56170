#include "burau/laurent.hpp"

#include <cstdio>
#include <sstream>

namespace burau {

namespace {

std::string power_text(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// Joins signed term strings: the first keeps its sign, later ones become " + x" / " - x".
std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    const std::string& s = terms[k];
    if (!s.empty() && s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_complex(const Complex& c) {
  if (c.imag() == 0.0) return format_double(c.real());
  std::string im = format_double(c.imag());
  if (c.real() == 0.0) return im + "i";
  if (im.front() != '-') im = "+" + im;
  return "(" + format_double(c.real()) + im + "i)";
}

}  // namespace

std::string to_string(const IntLaurent& p, const std::string& var) {
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    std::string s = negative ? "-" : "";
    if (e == 0) {
      s += mag.str();
    } else if (mag == 1) {
      s += power_text(var, e);
    } else {
      s += mag.str() + "*" + power_text(var, e);
    }
    terms.push_back(std::move(s));
  }
  return join_terms(terms);
}

std::string to_string(const ComplexLaurent& p, const std::string& var) {
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string s = format_complex(c);
    if (e != 0) s += "*" + power_text(var, e);
    terms.push_back(std::move(s));
  }
  return join_terms(terms);
}

ComplexLaurent to_complex(const IntLaurent& p) {
  ComplexLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, CoefficientTraits<BigInt>::to_complex(c));
  return r;
}

std::string to_string(const IntBivariate& p, const std::string& var, const std::string& inner, bool ascending) {
  std::vector<std::string> terms;
  for (int step = 0; step <= p.degree(); ++step) {
    const int k = ascending ? step : p.degree() - step;
    const IntLaurent c = p.coefficient(k);
    if (c.is_zero()) continue;
    const std::string x = power_text(var, k);
    std::string s;
    if (k > 0 && c.is_constant(BigInt(1))) {
      s = x;
    } else if (k > 0 && c.is_constant(BigInt(-1))) {
      s = "-" + x;
    } else {
      s = c.is_monomial() ? to_string(c, inner) : "(" + to_string(c, inner) + ")";
      if (k > 0) s += "*" + x;
    }
    terms.push_back(std::move(s));
  }
  return join_terms(terms);
}

}  // namespace burau
