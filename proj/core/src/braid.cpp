#include "burau/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "burau/error.hpp"

namespace burau {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) {
    throw ArgumentError("braid needs at least 2 strands, got " + std::to_string(strands_));
  }
  for (int k : letters_) {
    if (k == 0 || std::abs(k) >= strands_) {
      throw ArgumentError("generator index " + std::to_string(k) + " out of range for " +
                          std::to_string(strands_) + " strands");
    }
  }
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

// "1", "-2", "+3", "s1", "s2^-1", "s2^1".
int parse_token(std::string_view tok) {
  int value = 0;
  if (tok.front() != 's' && tok.front() != 'S') {
    if (!parse_int(tok, value)) throw ParseError("malformed braid token '" + std::string(tok) + "'");
    return value;
  }
  std::string_view rest = tok.substr(1);
  std::string_view exponent = "1";
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    exponent = rest.substr(caret + 1);
    rest = rest.substr(0, caret);
  }
  int power = 0;
  if (rest.empty() || rest.front() == '-' || rest.front() == '+' || !parse_int(rest, value) ||
      !parse_int(exponent, power) || (power != 1 && power != -1)) {
    throw ParseError("malformed braid token '" + std::string(tok) + "'");
  }
  return value * power;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 2) {
    throw ParseError("braid needs at least 2 strands, got " + std::to_string(strands));
  }
  std::vector<int> letters;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    if (end == pos) break;
    std::string_view tok = text.substr(pos, end - pos);
    int k = parse_token(tok);
    if (k == 0 || std::abs(k) >= strands) {
      throw ParseError("generator index in '" + std::string(tok) + "' out of range [1, " +
                       std::to_string(strands - 1) + "]");
    }
    letters.push_back(k);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::ostringstream out;
  bool first = true;
  for (int k : w.letters()) {
    if (!first) out << ' ';
    out << k;
    first = false;
  }
  return out.str();
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw ArgumentError("cannot compose braids on " + std::to_string(a.strands()) + " and " +
                        std::to_string(b.strands()) + " strands");
  }
  std::vector<int> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& k : letters) k = -k;
  return BraidWord(w.strands(), std::move(letters));
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int k : w.letters()) e += k > 0 ? 1 : -1;
  return e;
}

Permutation permutation(const BraidWord& w) {
  Permutation mu(static_cast<std::size_t>(w.strands()));
  std::iota(mu.begin(), mu.end(), 1);
  // mu_i tracks which generator sits at the core of (x_i)w; a letter sigma_k
  // swaps the cores k and k+1 wherever they currently appear.
  for (int k : w.letters()) {
    const int a = std::abs(k);
    for (int& m : mu) {
      if (m == a) {
        m = a + 1;
      } else if (m == a + 1) {
        m = a;
      }
    }
  }
  return mu;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw ArgumentError("permutation size mismatch");
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i] - 1)];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

}  // namespace burau
