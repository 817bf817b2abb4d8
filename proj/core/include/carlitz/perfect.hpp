#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "carlitz/fq_poly.hpp"
#include "carlitz/qexp.hpp"

namespace carlitz {

/// Polynomial in x whose exponents are non-negative rationals with q-power
/// denominators. Stored as a dense polynomial in y = x^{1/q^level}, with the
/// level as small as possible.
class PerfectPoly {
 public:
  PerfectPoly() = default;
  explicit PerfectPoly(const Field& f) : p_(f) {}
  /// The polynomial poly(x^{1/q^level}); normalizes the level.
  PerfectPoly(FqPoly poly, std::uint32_t level);

  static PerfectPoly constant(const Field& f, FqElem c);
  /// c * x^e.
  static PerfectPoly monomial(const Field& f, const QExp& e, FqElem c);

  const Field& field() const { return p_.field(); }
  const Field* field_ptr() const { return p_.field_ptr(); }
  std::uint32_t level() const { return level_; }
  const FqPoly& poly() const { return p_; }
  /// The coefficient array of the same polynomial read at a higher level.
  FqPoly lifted(std::uint32_t level) const;

  bool is_zero() const { return p_.is_zero(); }
  bool is_one() const { return p_.is_one(); }
  bool is_constant() const { return p_.is_constant(); }
  QExp degree() const;
  FqElem lead() const { return p_.lead(); }
  std::size_t nnz() const { return p_.nnz(); }

  /// (exponent, coefficient) pairs in ascending exponent order.
  std::vector<std::pair<QExp, FqElem>> terms() const;

  PerfectPoly frobenius() const;
  PerfectPoly qth_root() const;
  /// x -> x^{q^k}, k of either sign.
  PerfectPoly q_power(std::int64_t k) const;

  PerfectPoly operator-() const { return PerfectPoly(-p_, level_); }
  friend PerfectPoly operator+(const PerfectPoly& a, const PerfectPoly& b);
  friend PerfectPoly operator-(const PerfectPoly& a, const PerfectPoly& b);
  friend PerfectPoly operator*(const PerfectPoly& a, const PerfectPoly& b);
  PerfectPoly scaled(FqElem c) const { return PerfectPoly(p_.scaled(c), level_); }

  bool operator==(const PerfectPoly& o) const { return level_ == o.level_ && p_ == o.p_; }

 private:
  void normalize();

  FqPoly p_;
  std::uint32_t level_ = 0;
};

/// Element of the perfect closure of F_q(x), kept in canonical form: at the
/// common level of numerator and denominator the two are coprime and the
/// denominator is monic. Equality is structural.
class PerfectRational {
 public:
  PerfectRational() = default;  // zero without a field; adopts one on first use
  explicit PerfectRational(const Field& f);
  explicit PerfectRational(PerfectPoly num);
  PerfectRational(PerfectPoly num, PerfectPoly den);  // throws DivisionByZero

  static PerfectRational zero(const Field& f) { return PerfectRational(f); }
  static PerfectRational one(const Field& f);
  static PerfectRational constant(const Field& f, FqElem c);
  static PerfectRational from_int(const Field& f, std::int64_t n);
  static PerfectRational x(const Field& f);
  static PerfectRational monomial(const Field& f, const QExp& e, FqElem c);

  const Field& field() const;
  const Field* field_ptr() const { return num_.field_ptr(); }
  const PerfectPoly& num() const { return num_; }
  const PerfectPoly& den() const { return den_; }
  std::uint32_t level() const { return std::max(num_.level(), den_.level()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Nonzero element of F_q, or zero.
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  PerfectRational frobenius() const;
  PerfectRational qth_root() const;
  PerfectRational q_power(std::int64_t k) const;
  PerfectRational inv() const;
  PerfectRational pow(std::int64_t e) const;

  PerfectRational operator-() const;
  friend PerfectRational operator+(const PerfectRational& a, const PerfectRational& b);
  friend PerfectRational operator-(const PerfectRational& a, const PerfectRational& b);
  friend PerfectRational operator*(const PerfectRational& a, const PerfectRational& b);
  friend PerfectRational operator/(const PerfectRational& a, const PerfectRational& b);
  PerfectRational& operator+=(const PerfectRational& o) { return *this = *this + o; }
  PerfectRational& operator-=(const PerfectRational& o) { return *this = *this - o; }
  PerfectRational& operator*=(const PerfectRational& o) { return *this = *this * o; }
  PerfectRational scaled(FqElem c) const;

  bool operator==(const PerfectRational& o) const;

 private:
  static PerfectRational make_raw(PerfectPoly num, PerfectPoly den) {
    PerfectRational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  PerfectPoly num_;
  PerfectPoly den_;
};

/// [i] = x^{q^i} - x, with [0] = 0.
PerfectRational bracket(const Field& f, std::uint32_t i);

}  // namespace carlitz
