#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mosaickit {

/// Exact Laurent polynomial in one variable A with integer coefficients.
/// Stored as the lowest degree plus a dense coefficient list, trimmed so the
/// first and last coefficients are nonzero (the zero polynomial is empty).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int mindeg, std::vector<std::int64_t> coeffs);

  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
  static LaurentPoly monomial(std::int64_t c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int mindeg() const { return mindeg_; }
  int maxdeg() const { return mindeg_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(int degree) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(std::int64_t s, LaurentPoly p);
  LaurentPoly operator-() const { return -1 * *this; }

  /// Multiplies by A^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes A -> A^{-1}.
  LaurentPoly inverted() const;
  LaurentPoly pow(int e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  /// `mindeg:c0,c1,...`; the zero polynomial prints as `0:`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();

  int mindeg_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace mosaickit
