#pragma once

// Hand-rolled random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "carlitz/linfun.hpp"
#include "carlitz/perfect.hpp"
#include "carlitz/ring.hpp"

namespace carlitz::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  FqElem elem(const Field& f) { return FqElem{static_cast<std::uint8_t>(below(f.q()))}; }
  FqElem nonzero_elem(const Field& f) { return FqElem{static_cast<std::uint8_t>(1 + below(f.q() - 1))}; }

  FqPoly fq_poly(const Field& f, std::size_t max_deg, double density = 0.6) {
    std::vector<std::uint8_t> c(max_deg + 1, 0);
    for (auto& v : c)
      if (coin(density)) v = elem(f).v;
    return FqPoly(f, std::move(c));
  }

  /// Polynomial at level <= max_level with a handful of terms.
  PerfectPoly perfect_poly(const Field& f, std::uint32_t max_level, std::size_t max_terms, std::int64_t max_num) {
    const auto level = static_cast<std::uint32_t>(below(max_level + 1));
    PerfectPoly p(f);
    const std::size_t terms = 1 + below(max_terms);
    for (std::size_t i = 0; i < terms; ++i)
      p = p + PerfectPoly::monomial(f, QExp(range(0, max_num), level, f.q()), nonzero_elem(f));
    return p;
  }

  PerfectRational perfect_rational(const Field& f, std::uint32_t max_level = 2, bool allow_zero = true) {
    while (true) {
      PerfectPoly num = perfect_poly(f, max_level, 3, 6);
      if (!allow_zero && num.is_zero()) continue;
      if (coin(0.4)) return PerfectRational(num);
      PerfectPoly den = perfect_poly(f, max_level, 3, 6);
      if (den.is_zero()) continue;
      return PerfectRational(num, den);
    }
  }

  /// Level-0 polynomial of degree <= max_deg, as an element.
  PerfectRational fq_x_poly(const Field& f, std::size_t max_deg) {
    return PerfectRational(PerfectPoly(fq_poly(f, max_deg), 0));
  }

  /// Random F-shaped function with k-degrees <= max_k.
  LinFun linfun(const Field& f, std::uint32_t n, std::uint32_t max_k, std::size_t max_terms) {
    LinFun g(f, n);
    const std::size_t terms = 1 + below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
      LinMonomial mono;
      std::uint32_t min_k = max_k;
      for (std::uint32_t j = 0; j < n; ++j) {
        mono.ks.push_back(static_cast<std::uint32_t>(below(max_k + 1)));
        min_k = std::min(min_k, mono.ks.back());
      }
      mono.m = static_cast<std::uint32_t>(below(min_k + 1));
      g.add_term(mono, perfect_rational(f, 1, false));
    }
    return g;
  }

  /// Random ring element with terms of degree <= max_deg.
  RingElem ring_elem(const Field& f, std::uint32_t n, std::uint32_t max_deg, std::size_t max_terms) {
    RingElem a(f, n);
    const std::size_t terms = 1 + below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<std::uint32_t> e(n + 2, 0);
      for (std::uint32_t budget = static_cast<std::uint32_t>(below(max_deg + 1)); budget > 0; --budget)
        ++e[below(n + 2)];
      OpMonomial mono{e[0], e[1], std::vector<std::uint32_t>(e.begin() + 2, e.end())};
      a.add_term(mono, coin(0.7) ? fq_x_poly(f, 2) : perfect_rational(f, 1, false));
    }
    return a;
  }

  RingElem nonzero_ring_elem(const Field& f, std::uint32_t n, std::uint32_t max_deg, std::size_t max_terms) {
    while (true) {
      RingElem a = ring_elem(f, n, max_deg, max_terms);
      if (!a.is_zero()) return a;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace carlitz::testing
