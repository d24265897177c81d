#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphoid {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in one variable A with exact integer coefficients.
// Terms are kept in a map keyed by exponent, so iteration order (and therefore
// printing) is deterministic.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Int& constant);

  static LaurentPoly monomial(const Int& coeff, int exponent);
  static LaurentPoly variable();  // the monomial A

  bool is_zero() const { return terms_.empty(); }
  // Degree queries require a nonzero polynomial.
  int min_degree() const;
  int max_degree() const;
  int span() const;  // max_degree - min_degree
  Int coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  LaurentPoly pow(unsigned n) const;
  // Multiply by A^k (k may be negative).
  LaurentPoly shifted(int k) const;
  // Substitute A -> A^{-1}; swaps the two mirror conventions.
  LaurentPoly mirrored() const;
  // Canonical representative of the orbit under multiplication by A^{±2}:
  // shifted by an even power so the minimum degree lands in {0, 1}.
  LaurentPoly unit_normalized() const;
  // Value at A = 1 (the sum of the coefficients).
  Int at_one() const;

  const std::map<int, Int>& terms() const { return terms_; }
  // Pairs (exponent, coefficient) in ascending exponent order, coefficients
  // rendered in decimal.  This is the JSON wire form.
  std::vector<std::pair<int, std::string>> term_pairs() const;
  // Human-readable form, ascending exponents, e.g. "A^-2 - 2 + A^2".
  std::string str() const;

private:
  std::map<int, Int> terms_;
  void trim();
};

// sigma  = A + 1 + A^{-1}; the value of a loop factor.
LaurentPoly sigma();
// sigma' = -A - 2 - A^{-1}; the cycle-rank weight in the flow polynomial.
LaurentPoly sigma_prime();
// sigma'' = A + 2 + A^{-1} = -sigma'.
LaurentPoly sigma_dprime();

}  // namespace graphoid
