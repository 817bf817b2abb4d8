#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "carlitz/linfun.hpp"

namespace carlitz {

/// tau^l d_s^mu Delta_1^{i_1} ... Delta_n^{i_n}.
struct OpMonomial {
  std::uint32_t l = 0;
  std::uint32_t mu = 0;
  std::vector<std::uint32_t> is;

  std::uint32_t degree() const;
  auto operator<=>(const OpMonomial&) const = default;
  bool operator==(const OpMonomial&) const = default;
};

/// Element of the Carlitz ring in normal form: sum of c * tau^l d_s^mu Delta^i
/// with scalars on the left and no zero coefficients, so that structural
/// equality is ring equality.
class RingElem {
 public:
  using Terms = std::map<OpMonomial, PerfectRational>;

  RingElem(const Field& f, std::uint32_t n) : f_(&f), n_(n) {}

  static RingElem scalar(const Field& f, std::uint32_t n, const PerfectRational& c);
  static RingElem monomial(const Field& f, std::uint32_t n, OpMonomial mono, const PerfectRational& c);
  static RingElem tau(const Field& f, std::uint32_t n);
  static RingElem ds(const Field& f, std::uint32_t n);
  /// Delta_j, 1 <= j <= n.
  static RingElem delta(const Field& f, std::uint32_t n, std::uint32_t j);

  const Field& field() const { return *f_; }
  std::uint32_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest l + mu + sum(i) over the terms; -1 for zero.
  std::int64_t degree() const;

  void add_term(const OpMonomial& mono, const PerfectRational& c);

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  RingElem operator-() const;
  /// Left multiplication by a scalar.
  friend RingElem operator*(const PerfectRational& c, const RingElem& a);
  friend RingElem operator*(const RingElem& a, const RingElem& b);

  bool operator==(const RingElem& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check_compatible(const RingElem& o) const;

  const Field* f_;
  std::uint32_t n_;
  Terms terms_;
};

/// Normal-form product.
RingElem ring_mul(const RingElem& a, const RingElem& b);

/// Applies each term right to left: the Delta's, then d_s^mu, then tau^l,
/// then the scalar.
LinFun ring_apply(const RingElem& a, const LinFun& f);
TruncatedSeries ring_apply(const RingElem& a, const TruncatedSeries& f);

struct GammaCount {
  std::uint64_t enumerated = 0;
  std::uint64_t closed_form = 0;
};

/// Number of operator monomials of degree <= nu, by enumeration and as
/// binom(nu + n + 2, n + 2).
GammaCount dim_gamma(std::uint32_t n, std::uint32_t nu);
/// All operator monomials of degree <= nu, in lexicographic order.
std::vector<OpMonomial> op_monomials(std::uint32_t n, std::uint32_t nu);

/// Applies a (nonzero) to the probes s^{q^mu'} t_1^{q^k_1} ... t_n^{q^k_n}
/// with 0 <= mu' <= bound and max(mu', 1) <= k_j <= bound, returning the
/// first probe with a nonzero image.
std::optional<LinMonomial> probe_independence(const RingElem& a, std::uint32_t bound);

/// "c * T^l * D^mu * G1^i1 * ... * Gn^in" terms joined by " + ".
std::string to_text(const RingElem& a);
nlohmann::json to_json(const RingElem& a);
RingElem ringelem_from_json(const Field& f, const nlohmann::json& j);

/// binom(n, r) reduced mod p.
std::uint32_t binom_mod(std::uint32_t n, std::uint32_t r, std::uint32_t p);

}  // namespace carlitz
