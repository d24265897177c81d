#include "graphoid/laurent.hpp"

#include <sstream>

#include "graphoid/errors.hpp"

namespace graphoid {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(const Int& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

LaurentPoly LaurentPoly::variable() { return monomial(1, 1); }

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw GraphoidError("zero_poly", "degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw GraphoidError("zero_poly", "degree of zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::span() const { return max_degree() - min_degree(); }

Int LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::trim() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) terms_[e] += c;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) terms_[e] -= c;
  trim();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.terms_[ea + eb] += ca * cb;
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::unit_normalized() const {
  if (is_zero()) return *this;
  int m = min_degree();
  // Even shift moving m into {0, 1}: subtract m rounded down to an even value.
  int shift = (m % 2 == 0) ? -m : -(m - 1);
  return shifted(shift);
}

Int LaurentPoly::at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) {
    (void)e;
    s += c;
  }
  return s;
}

std::vector<std::pair<int, std::string>> LaurentPoly::term_pairs() const {
  std::vector<std::pair<int, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e, c.str());
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (mag == 1) && (e != 0);
    if (!unit_coeff) os << mag.str();
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << "A";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly sigma() {
  LaurentPoly p = LaurentPoly::monomial(1, 1);
  p += LaurentPoly(1);
  p += LaurentPoly::monomial(1, -1);
  return p;
}

LaurentPoly sigma_prime() { return -sigma_dprime(); }

LaurentPoly sigma_dprime() {
  LaurentPoly p = LaurentPoly::monomial(1, 1);
  p += LaurentPoly(2);
  p += LaurentPoly::monomial(1, -1);
  return p;
}

}  // namespace graphoid
