#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "carlitz/linfun.hpp"
#include "carlitz/place.hpp"

namespace carlitz {

/// Memo tables for Carlitz factorials D_i, the products L_i, the polynomials
/// e_i and K-binomial coefficients over one field. Append-only; lookups take
/// a shared lock and insertions a unique one, so references stay valid.
class CarlitzCache {
 public:
  static CarlitzCache& of(const Field& f);

  const Field& field() const { return *f_; }
  const PerfectRational& dfac(std::uint32_t i);
  const PerfectRational& lfac(std::uint32_t i);
  /// D_i^{q-1}.
  const PerfectRational& dfac_qm1(std::uint32_t i);
  const LinFun& e(std::uint32_t k);
  const PerfectRational& binom(std::uint32_t k, std::uint32_t m);

  explicit CarlitzCache(const Field& f) : f_(&f) {}

 private:
  template <class Key, class Value, class Make>
  const Value& memo(std::map<Key, Value>& table, const Key& key, Make&& make);

  const Field* f_;
  std::shared_mutex mu_;
  std::map<std::uint32_t, PerfectRational> dfac_, lfac_, dfac_qm1_;
  std::map<std::uint32_t, LinFun> e_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, PerfectRational> binom_;
};

/// D_i = [i][i-1]^q ... [1]^{q^{i-1}}, D_0 = 1.
PerfectRational dfac(const Field& f, std::uint32_t i);
/// L_i = [i][i-1] ... [1], L_0 = 1.
PerfectRational lfac(const Field& f, std::uint32_t i);

/// e_k by e_k = e_{k-1}^q - D_{k-1}^{q-1} e_{k-1}, e_0 = s.
LinFun carlitz_e(const Field& f, std::uint32_t k);
/// f_k = sum_i (-1)^{k-i} / (D_i L_{k-i}^{q^i}) s^{q^i}.
LinFun carlitz_f(const Field& f, std::uint32_t k);

/// D_k / (D_m D_{k-m}^{q^m}); zero when m < 0 or m > k.
PerfectRational binomK(const Field& f, std::int64_t k, std::int64_t m);
/// The same value through generic rational arithmetic on factorials.
PerfectRational binomK_from_factorials(const Field& f, std::uint32_t k, std::uint32_t m);

/// binom(k,m) = binom(k-1,m-1)^q + binom(k-1,m)^q D_m^{q-1}. With `perturb`
/// the right side is shifted by 1 (negative control).
bool pascal_check(const Field& f, std::uint32_t k, std::uint32_t m, bool perturb = false);

/// c_{l,i} for 0 <= i <= l <= m, c_{0,0} = 1.
struct VandermondeTable {
  std::uint32_t m = 0;
  std::vector<std::vector<PerfectRational>> c;  // c[l][i], i <= l

  /// Zero outside 0 <= i <= l.
  PerfectRational at(const Field& f, std::int64_t l, std::int64_t i) const;
};

enum class VandermondeRule {
  /// c_{l+1,i} = c_{l,i-1} + c_{l,i} D_{m-i}^{q^l (q-1)}: the factor produced
  /// by applying Pascal to binom(k-l, m-i)^{q^l}. The default.
  kInduction,
  /// c_{l+1,i} = c_{l,i-1} + c_{l,i} D_{m-i}^{q-1} as usually printed; agrees
  /// with kInduction for l <= 1 only.
  kPrinted,
};

VandermondeTable vandermonde_table(const Field& f, std::uint32_t m,
                                   VandermondeRule rule = VandermondeRule::kInduction);
/// binom(k,m) = sum_{i<=l} c_{l,i} binom(k-l, m-i)^{q^l}.
bool vandermonde_check(const Field& f, std::uint32_t k, std::uint32_t m, std::uint32_t l, bool perturb = false);

/// e_k(st) = sum_m binom(k,m) e_m(s) e_{k-m}(t)^{q^m}, evaluated exactly.
bool kbinom_identity_check(const Field& f, std::uint32_t k, const PerfectRational& s_val,
                           const PerfectRational& t_val, bool perturb = false);

/// binom(k-1,i)^q D_i^{q-1} D_{k-i-1}^{q^i(q-1)} = D_{k-1}^{q-1} binom(k-1,i).
bool dfac_binom_identity_check(const Field& f, std::uint32_t k, std::uint32_t i);

/// (-a)_m = (-1)^{a-m} L_{a-m}^{-q^m} for m <= a, else 0.
PerfectRational pochhammer_neg(const Field& f, std::uint32_t a, std::uint32_t m);

/// Polynomial hypergeometric function in z (n = 0):
/// sum_m prod(-a_i)_m / (prod(-b_i)_m D_m) z^{q^m}, m <= min(a, b, cap).
/// With no parameters at all, `cap` is the only bound and is required.
LinFun thakur_hyp(const Field& f, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                  std::optional<std::uint32_t> cap = std::nullopt);

/// d_s F(-a; -b; s) equals F(-a+1; -b+1; s) when all parameters are
/// positive, and 0 otherwise.
bool contiguous_check(const Field& f, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                      bool perturb = false);

/// sum_{k<=T} f_k(s) t^{q^k}.
TruncatedSeries carlitz_module_trunc(const Field& f, std::uint32_t T);
/// sum_{k<=T} sum_{m<=k} binom(k,m) s^{q^m} t^{q^k}.
TruncatedSeries genfun_binom(const Field& f, std::uint32_t T);
/// sum over k_1..k_l, v_1..v_lambda <= T of F(-k; -v; s) t^{q^k} u^{q^v}.
TruncatedSeries genfun_hyp(const Field& f, std::uint32_t l, std::uint32_t lambda, std::uint32_t T);

struct PdeReport {
  bool holds = false;
  std::uint32_t window = 0;
  std::optional<LinMonomial> witness;
  /// [k]^{1/q} = [k-1] + [1]^{1/q} for 1 <= k <= order.
  bool splitting_holds = false;
};

/// d_s f = Delta_1 f + [1]^{1/q} f coefficientwise on the validity window of
/// d_s f.
PdeReport pde_check(const TruncatedSeries& f);
PdeReport pde_check_binom(const Field& f, std::uint32_t T, bool perturb = false);

struct IntegralityViolation {
  std::string place;
  std::uint32_t k = 0, m = 0;
  std::string detail;
};

struct IntegralityReport {
  std::uint32_t places = 0;
  std::uint64_t binom_checks = 0;
  std::uint64_t closed_form_checks = 0;
  std::vector<IntegralityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// v_pi(D_m) = q^i (q^{j delta} - 1)/(q^delta - 1) with m = j delta + i.
std::uint64_t dfac_valuation_closed_form(std::uint32_t q, std::uint32_t m, std::uint32_t delta);

/// v_pi(binom(k,m)) >= 0 for every place of degree <= delta_max and all
/// m <= k <= k_max, plus the closed form for v_pi(D_m), m <= k_max.
IntegralityReport place_integrality_sweep(const Field& f, std::uint32_t k_max, std::uint32_t delta_max,
                                          bool perturb = false, unsigned jobs = 1);

}  // namespace carlitz
