#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace tidal {

using Integer = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in v, stored densely from the lowest nonzero
/// exponent. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: integers embed as constants
  LaurentPoly(int lo, std::vector<Integer> coeffs);

  static LaurentPoly monomial(int exponent, Integer coeff = 1);
  /// v + v^{-1}
  static LaurentPoly quantum_two();

  bool is_zero() const { return coeffs_.empty(); }
  int lo() const { return lo_; }
  /// Highest exponent; undefined for zero.
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int exponent) const;

  /// Lowest exponent with nonzero coefficient (the valuation).
  int valuation() const { return lo_; }
  int degree() const { return hi(); }

  bool is_monomial() const { return coeffs_.size() == 1; }
  bool in_vZv() const { return is_zero() || lo_ >= 1; }
  bool in_Zv() const { return is_zero() || lo_ >= 0; }
  bool nonnegative() const;
  bool bar_invariant() const;

  /// v -> v^{-1}
  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // multiply by v^k
  /// Bar-invariant polynomial agreeing with *this in all exponents <= 0.
  LaurentPoly nonpositive_symmetric_part() const;
  Integer evaluate_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Adds c * v^k * other in place; the hot path of all module recursions.
  void add_scaled(const LaurentPoly& other, int k = 0, const Integer& c = 1);

  std::string to_string() const;

 private:
  void normalize();
  int lo_ = 0;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Parses "v^-1 + 2v^2 - 3", "0", "v". Throws InvalidArgument on junk.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace tidal
