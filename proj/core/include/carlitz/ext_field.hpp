#pragma once

#include <cstdint>
#include <vector>

#include "carlitz/fq_poly.hpp"

namespace carlitz {

/// F_{q^s} with s the least degree giving at least 2^20 elements, stored in
/// Zech-logarithm form: a nonzero element is its discrete log to a fixed
/// primitive root, so products and sums are single table lookups.
class ExtField {
 public:
  using Elem = std::uint32_t;
  static constexpr Elem kZero = 0xffffffffu;

  static const ExtField& over(const Field& base);

  const Field& base() const { return *base_; }
  std::uint32_t degree() const { return s_; }
  /// q^s.
  std::uint64_t size() const { return order_ + 1; }
  /// Multiplicative order q^s - 1.
  std::uint32_t order() const { return order_; }

  Elem one() const { return 0; }
  Elem from_base(FqElem c) const { return base_log_[c.v]; }
  Elem mul(Elem a, Elem b) const {
    if (a == kZero || b == kZero) return kZero;
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Elem>(s >= order_ ? s - order_ : s);
  }
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem neg(Elem a) const {
    if (a == kZero) return kZero;
    return mul(a, minus_one_);
  }
  Elem add(Elem a, Elem b) const {
    if (a == kZero) return b;
    if (b == kZero) return a;
    // a + b = a (1 + b/a).
    const Elem ratio = b >= a ? b - a : b + order_ - a;
    const Elem z = zech_[ratio];
    return z == kZero ? kZero : mul(a, z);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// g^e for the primitive root g.
  Elem power_of_generator(std::uint64_t e) const { return static_cast<Elem>(e % order_); }
  /// a^e for e >= 0.
  Elem pow(Elem a, std::uint64_t e) const;

  /// p(point) for point given in log form.
  Elem eval(const FqPoly& p, Elem point) const;

 private:
  explicit ExtField(const Field& base);

  const Field* base_;
  std::uint32_t s_ = 0;
  std::uint32_t order_ = 0;
  Elem minus_one_ = 0;
  std::vector<Elem> zech_;
  std::vector<Elem> base_log_;
};

/// Rank of a dense matrix over the extension field (rows are consumed).
std::size_t ext_rank(const ExtField& F, std::vector<std::vector<ExtField::Elem>> rows);

}  // namespace carlitz
