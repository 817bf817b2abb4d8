#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "carlitz/perfect.hpp"

namespace carlitz {

/// s^{q^m} t_1^{q^{k_1}} ... t_n^{q^{k_n}}.
struct LinMonomial {
  std::uint32_t m = 0;
  std::vector<std::uint32_t> ks;

  /// min(k_1..k_n), or no bound when n = 0.
  std::optional<std::uint32_t> min_k() const;
  std::uint32_t max_k() const;
  bool in_F_shape() const;
  /// Every k_j <= window (always true when n = 0).
  bool within(std::uint32_t window) const;

  auto operator<=>(const LinMonomial&) const = default;
  bool operator==(const LinMonomial&) const = default;
};

std::string to_string(const LinMonomial& mono);

/// An F_q-linear polynomial in s, t_1..t_n with coefficients in the perfect
/// closure of F_q(x). Terms are kept in a sorted map with no zero entries.
class LinFun {
 public:
  using Terms = std::map<LinMonomial, PerfectRational>;

  LinFun(const Field& f, std::uint32_t n) : f_(&f), n_(n) {}

  /// s^{q^m} (n = 0) with coefficient c.
  static LinFun s_power(const Field& f, std::uint32_t m, const PerfectRational& c);

  const Field& field() const { return *f_; }
  std::uint32_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of mono.
  void add_term(const LinMonomial& mono, const PerfectRational& c);
  PerfectRational coeff(const LinMonomial& mono) const;

  bool in_F_shape() const;
  /// Largest k_j over all terms (0 for n = 0 or empty).
  std::uint32_t max_k() const;
  /// Terms with every k_j <= window.
  LinFun restricted(std::uint32_t window) const;

  LinFun& operator+=(const LinFun& o);
  LinFun& operator-=(const LinFun& o);
  friend LinFun operator+(LinFun a, const LinFun& b) { return a += b; }
  friend LinFun operator-(LinFun a, const LinFun& b) { return a -= b; }
  LinFun operator-() const;
  /// Scalar action c * f.
  friend LinFun operator*(const PerfectRational& c, const LinFun& f);

  bool operator==(const LinFun& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check_compatible(const LinFun& o) const;

  const Field* f_;
  std::uint32_t n_;
  Terms terms_;
};

/// A finite window onto an infinite series. body carries no monomial with a
/// k_j above `order`, and agrees with the true series on every monomial with
/// all k_j <= `validity`.
struct TruncatedSeries {
  /// Validity of a body that is the whole function (a polynomial).
  static constexpr std::uint32_t kUnbounded = 1u << 30;

  LinFun body;
  std::uint32_t order = 0;
  std::uint32_t validity = 0;

  /// A polynomial viewed as its own series: order max_k, unbounded validity.
  static TruncatedSeries exact(LinFun body);
  bool is_exact() const { return validity > kUnbounded / 2; }
};

/// Frobenius: (a; m, ks) -> (a^q; m+1, ks+1).
LinFun apply_tau(const LinFun& f);
/// Carlitz derivative in s: (a; m, ks) -> ((a [m])^{1/q}; m-1, ks-1); terms
/// with m = 0 vanish. Throws MonomialEscape when m >= 1 and some k_j = 0.
LinFun apply_ds(const LinFun& f);
/// Delta_j for 1 <= j <= n: (a; m, ks) -> (a [k_j]; m, ks).
LinFun apply_delta(const LinFun& f, std::uint32_t j);

/// Order grows by one, validity is kept.
TruncatedSeries apply_tau(const TruncatedSeries& f);
/// Order and validity both drop by one; throws InvalidArgument when the
/// validity window is already empty.
TruncatedSeries apply_ds(const TruncatedSeries& f);
TruncatedSeries apply_delta(const TruncatedSeries& f, std::uint32_t j);

/// sum_m a_m value^{q^m} for n = 0.
PerfectRational evaluate(const LinFun& f, const PerfectRational& value);

struct SeriesComparison {
  bool equal = false;
  std::uint32_t window = 0;
  std::optional<LinMonomial> witness;  // first differing monomial
};

/// Coefficientwise comparison on monomials with all k_j <= min(V_f, V_g).
SeriesComparison series_compare(const TruncatedSeries& f, const TruncatedSeries& g);

nlohmann::json to_json(const LinFun& f);
LinFun linfun_from_json(const Field& fld, const nlohmann::json& j);
/// Human-readable sum "c * s^(q^m) * t1^(q^k1) ...".
std::string to_text(const LinFun& f);

}  // namespace carlitz
