#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carlitz {

/// Characteristic and degree of F_q, q = p^nu.
struct FieldConfig {
  std::uint32_t p = 2;
  std::uint32_t nu = 1;

  std::uint32_t q() const;
  bool operator==(const FieldConfig&) const = default;
  auto operator<=>(const FieldConfig&) const = default;
};

/// An element of F_q, stored as the integer code sum d_i p^i of its
/// coordinates d_i over the field's fixed modulus.
struct FqElem {
  std::uint8_t v = 0;

  bool is_zero() const { return v == 0; }
  bool operator==(const FqElem&) const = default;
  auto operator<=>(const FqElem&) const = default;
};

/// The finite field F_q with full lookup tables (q <= 256).
///
/// Instances are interned: Field::get returns the same object for the same
/// (p, nu) for the lifetime of the process, so values may keep a plain
/// pointer to their field.
class Field {
 public:
  static const Field& get(FieldConfig cfg);
  static const Field& get(std::uint32_t p, std::uint32_t nu = 1) {
    return get(FieldConfig{p, nu});
  }

  FieldConfig config() const { return cfg_; }
  std::uint32_t p() const { return cfg_.p; }
  std::uint32_t nu() const { return cfg_.nu; }
  std::uint32_t q() const { return q_; }
  bool is_prime_field() const { return cfg_.nu == 1; }

  /// Monic modulus over F_p (low-to-high coefficients, length nu + 1).
  const std::vector<std::uint8_t>& modulus() const { return modulus_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem from_int(std::int64_t n) const;  // image of an integer in F_p

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return sub_[idx(a, b)]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;  // throws DivisionByZero

  FqElem add(FqElem a, FqElem b) const { return {add(a.v, b.v)}; }
  FqElem sub(FqElem a, FqElem b) const { return {sub(a.v, b.v)}; }
  FqElem mul(FqElem a, FqElem b) const { return {mul(a.v, b.v)}; }
  FqElem neg(FqElem a) const { return {neg(a.v)}; }
  FqElem inv(FqElem a) const { return {inv(a.v)}; }
  FqElem pow(FqElem a, std::uint64_t e) const;

  /// Coordinates of a code over F_p (length nu).
  std::vector<std::uint8_t> digits(std::uint8_t code) const;
  std::uint8_t from_digits(const std::vector<std::uint32_t>& digits) const;

  std::string describe() const;

 private:
  explicit Field(FieldConfig cfg);
  std::size_t idx(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  FieldConfig cfg_;
  std::uint32_t q_;
  std::vector<std::uint8_t> modulus_;
  std::vector<std::uint8_t> add_, sub_, mul_, neg_, inv_;
};

bool is_prime(std::uint64_t n);

/// Fixed monic irreducible of degree nu over F_p used to build F_q.
std::vector<std::uint8_t> fixed_modulus(std::uint32_t p, std::uint32_t nu);

}  // namespace carlitz
