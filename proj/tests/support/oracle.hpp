#pragma once

// Independent reference arithmetic for prime fields: sparse polynomials with
// rational exponents, schoolbook products, integers reduced mod p.

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "carlitz/perfect.hpp"

namespace carlitz::testing {

struct Frac {
  std::int64_t n = 0, d = 1;

  static Frac make(std::int64_t n, std::int64_t d) {
    const std::int64_t g = std::gcd(n, d);
    return g == 0 ? Frac{0, 1} : Frac{n / g, d / g};
  }
  friend Frac operator+(Frac a, Frac b) { return make(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend bool operator<(Frac a, Frac b) { return a.n * b.d < b.n * a.d; }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
};

class RefPoly {
 public:
  explicit RefPoly(std::int64_t p) : p_(p) {}

  static RefPoly term(std::int64_t p, Frac e, std::int64_t c) {
    RefPoly r(p);
    r.add(e, c);
    return r;
  }
  static RefPoly from(const PerfectPoly& a) {
    RefPoly r(a.field().p());
    for (const auto& [e, c] : a.terms())
      r.add(Frac::make(e.num(), static_cast<std::int64_t>(ipow_checked(e.q(), e.level()))), c.v);
    return r;
  }

  void add(Frac e, std::int64_t c) {
    auto& v = t_[e];
    v = ((v + c) % p_ + p_) % p_;
    if (v == 0) t_.erase(e);
  }
  friend RefPoly operator+(RefPoly a, const RefPoly& b) {
    for (const auto& [e, c] : b.t_) a.add(e, c);
    return a;
  }
  friend RefPoly operator-(RefPoly a, const RefPoly& b) {
    for (const auto& [e, c] : b.t_) a.add(e, -c);
    return a;
  }
  friend RefPoly operator*(const RefPoly& a, const RefPoly& b) {
    RefPoly r(a.p_);
    for (const auto& [e1, c1] : a.t_)
      for (const auto& [e2, c2] : b.t_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  RefPoly pow(std::uint64_t e) const {
    RefPoly r = term(p_, Frac{0, 1}, 1);
    for (std::uint64_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  /// Exponents scaled by factor (a p-power map on prime-field coefficients).
  RefPoly exp_scaled(Frac factor) const {
    RefPoly r(p_);
    for (const auto& [e, c] : t_) r.add(Frac::make(e.n * factor.n, e.d * factor.d), c);
    return r;
  }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const RefPoly& o) const { return t_ == o.t_; }

 private:
  std::int64_t p_;
  std::map<Frac, std::int64_t> t_;
};

/// x^{q^i} - x by direct construction.
inline RefPoly ref_bracket(std::int64_t q, std::uint32_t i) {
  if (i == 0) return RefPoly(q);
  std::int64_t e = 1;
  for (std::uint32_t j = 0; j < i; ++j) e *= q;
  return RefPoly::term(q, Frac{e, 1}, 1) - RefPoly::term(q, Frac{1, 1}, 1);
}

/// D_i = [i][i-1]^q ... [1]^{q^{i-1}} by repeated schoolbook products.
inline RefPoly ref_dfac(std::int64_t q, std::uint32_t i) {
  RefPoly r = RefPoly::term(q, Frac{0, 1}, 1);
  for (std::uint32_t j = 1; j <= i; ++j) {
    std::int64_t qe = 1;
    for (std::uint32_t t = 0; t < i - j; ++t) qe *= q;
    r = r * ref_bracket(q, j).exp_scaled(Frac{qe, 1});
  }
  return r;
}

}  // namespace carlitz::testing
