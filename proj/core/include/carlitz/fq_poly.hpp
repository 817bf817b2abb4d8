#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

/// Dense univariate polynomial over F_q. Coefficient i multiplies y^i; the
/// coefficient vector never has a trailing zero.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(const Field& f) : f_(&f) {}
  FqPoly(const Field& f, std::vector<std::uint8_t> coeffs);

  static FqPoly constant(const Field& f, FqElem c);
  static FqPoly monomial(const Field& f, std::size_t deg, FqElem c);
  /// sum c_i y^{e_i}; repeated exponents are added.
  static FqPoly from_terms(const Field& f, std::span<const std::pair<std::size_t, FqElem>> terms);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  FqElem lead() const { return c_.empty() ? FqElem{0} : FqElem{c_.back()}; }
  FqElem coeff(std::size_t i) const { return i < c_.size() ? FqElem{c_[i]} : FqElem{0}; }
  const std::vector<std::uint8_t>& coeffs() const { return c_; }
  std::size_t nnz() const;
  /// gcd of the exponents carrying nonzero coefficients; 0 for constants.
  std::size_t stride() const;
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  std::size_t low_degree() const;

  FqPoly operator-() const;
  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  FqPoly& operator*=(const FqPoly& o) { return *this = *this * o; }

  FqPoly scaled(FqElem c) const;
  FqPoly shifted(std::size_t k) const;  // * y^k
  /// y -> y^g.
  FqPoly spread(std::size_t g) const;
  /// Inverse of spread; every exponent must be divisible by g.
  FqPoly compress(std::size_t g) const;
  FqPoly monic() const;
  FqPoly pow(std::uint64_t e) const;
  /// Evaluate at an element of F_q.
  FqElem eval(FqElem y) const;

  bool operator==(const FqPoly& o) const { return c_ == o.c_; }

  FqPoly& trim();

 private:
  const Field* f_ = nullptr;
  std::vector<std::uint8_t> c_;
};

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
/// a / b where b must divide a (throws Error otherwise).
FqPoly exact_div(const FqPoly& a, const FqPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FqPoly gcd(const FqPoly& a, const FqPoly& b);
/// a mod m.
FqPoly mod(const FqPoly& a, const FqPoly& m);
/// Multiplicity of the factor p in a (a != 0, deg p >= 1).
std::uint64_t multiplicity(FqPoly a, const FqPoly& p);

}  // namespace carlitz
