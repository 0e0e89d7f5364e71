#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace rankdual {

/// Exponent pair (power of t, power of z); either may be negative.
struct Exponents {
  std::int64_t t = 0;
  std::int64_t z = 0;

  friend constexpr bool operator==(Exponents, Exponents) = default;
  friend constexpr auto operator<=>(Exponents, Exponents) = default;
};

/// Sparse Laurent polynomial in t and z with exact integer coefficients.
///
/// Terms are kept in canonical order (t-exponent descending, then
/// z-exponent descending) and zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
class LaurentPoly2 {
 public:
  using Coefficient = std::int64_t;
  using TermMap = std::map<Exponents, Coefficient, std::greater<>>;

  LaurentPoly2() = default;
  /// The constant polynomial c.
  explicit LaurentPoly2(Coefficient c);

  static LaurentPoly2 monomial(Exponents e, Coefficient c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(Exponents e) const;
  /// True when no exponent is negative.
  bool is_polynomial() const;

  /// Adds c * t^e.t * z^e.z in place.
  void add_term(Exponents e, Coefficient c);

  LaurentPoly2& operator+=(const LaurentPoly2& other);
  LaurentPoly2& operator-=(const LaurentPoly2& other);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);

  /// Multiplies every term by c * t^e.t * z^e.z.
  LaurentPoly2 scaled(Exponents e, Coefficient c = 1) const;

  /// Exchanges the roles of t and z.
  LaurentPoly2 swap_vars() const;

  /// Canonical text, e.g. "t^3*z + 2*t^2 + t*z^-1 - 1". The zero polynomial is "0".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  TermMap terms_;
};

inline LaurentPoly2 swap_vars(const LaurentPoly2& p) { return p.swap_vars(); }

}  // namespace rankdual
