#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "carlitz/rank.hpp"
#include "carlitz/ring.hpp"

namespace carlitz {

/// One level of the filtration M_j = span{w f : deg w <= j}.
struct FiltrationLevel {
  std::uint32_t j = 0;
  std::uint64_t dim = 0;
  /// Number of operator monomials, and of coordinates in the window.
  std::uint64_t generators = 0;
  std::uint64_t coordinates = 0;
  std::uint32_t window = 0;
  /// The rank fills every coordinate while generators exceed them, so dim
  /// is only a lower bound for the untruncated module.
  bool saturated = false;
  RankReport rank;
};

struct FiltrationReport {
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::uint32_t truncation = 0;
  std::vector<FiltrationLevel> levels;
  std::optional<std::uint32_t> degree;
  std::optional<std::int64_t> multiplicity;
  std::pair<std::uint32_t, std::uint32_t> window{0, 0};
  /// "quasi-holonomic", "degenerate", "over-bound" or "unstable".
  std::string classification = "unstable";
  std::vector<std::string> warnings;

  std::vector<std::uint64_t> dims() const;
};

struct GkOptions {
  RankOptions rank;
  unsigned jobs = 1;
  /// Known annihilators of f. Each is checked on the validity window, then
  /// its left multiples supply relations that bound the ranks from above.
  std::vector<RingElem> annihilators;
};

/// Exact dims of M_j for 0 <= j <= j_max. Coefficients are restricted to
/// monomials with every k_j <= V - j, so truncation never enters a rank.
FiltrationReport filtration_dims(const TruncatedSeries& f, std::uint32_t j_max, const GkOptions& opts = {});

struct HilbertFit {
  std::uint32_t degree = 0;
  std::int64_t multiplicity = 0;
  /// First and last j whose values enter the constant differences.
  std::pair<std::uint32_t, std::uint32_t> window{0, 0};
};

/// Degree d is the least order whose differences are constant and nonzero
/// over the last three (or more) values; multiplicity is that constant.
/// dims[i] is the value at j = i. Throws NoStabilization.
HilbertFit hilbert_fit(const std::vector<std::uint64_t>& dims);

/// filtration_dims followed by hilbert_fit on the leading run of levels that
/// are neither saturated nor decreasing, then classification against n + 1.
/// Throws NoStabilization.
FiltrationReport gk_dimension(const TruncatedSeries& f, std::uint32_t j_max, const GkOptions& opts = {});
/// As gk_dimension, but a failed fit leaves classification "unstable" and
/// records the reason as a warning instead of throwing.
FiltrationReport gk_report(const TruncatedSeries& f, std::uint32_t j_max, const GkOptions& opts = {});

nlohmann::json to_json(const FiltrationReport& r);

/// (j+1)^n + S_n(j+1) with S_n(N) = 1^n + ... + (N-1)^n.
std::uint64_t module_F_dims(std::uint32_t n, std::uint32_t j);
/// Count of (m, k_1..k_n) with m <= min(k) and every k_i <= j.
std::uint64_t module_F_dims_enumerated(std::uint32_t n, std::uint32_t j);

/// A k-dimensional A_1-module: tau(c e_j) = c^q e_j and
/// d_s(c e_j) = c^{1/q} sum_i lambda_ij e_i.
struct MatrixModuleA1 {
  std::uint32_t k = 0;
  std::vector<std::vector<PerfectRational>> lambda;

  /// Diagonal -x^{1/q}; off-diagonal entries given row-major (k*k values,
  /// diagonal positions ignored).
  static MatrixModuleA1 make(const Field& f, std::uint32_t k, const std::vector<FqElem>& off_diagonal);
  static MatrixModuleA1 random(const Field& f, std::uint32_t k, std::uint64_t seed);

  const Field& field() const { return lambda.at(0).at(0).num().field(); }
  /// Off-diagonal entries lie in F_q and each diagonal entry satisfies
  /// lambda^q - lambda + [1]^{1/q} = 0.
  bool invariants_hold() const;
  std::vector<PerfectRational> tau(const std::vector<PerfectRational>& v) const;
  std::vector<PerfectRational> ds(const std::vector<PerfectRational>& v) const;
};

/// d_s tau v - tau d_s v == [1]^{1/q} v on `trials` random vectors.
bool matrix_module_check(const MatrixModuleA1& mod, std::uint32_t trials, std::uint64_t seed = 1);

struct VacuumReport {
  /// d_s f = 0 and tau^m f != 0 for m <= m_max.
  bool precondition = false;
  std::string precondition_detail;
  /// d_s tau^m f = [m]^{1/q} tau^{m-1} f for 1 <= m <= m_max.
  bool relation_holds = false;
  /// Rank of {tau^{m-1} f : 1 <= m <= m_max}.
  std::size_t rank = 0;
  bool ok() const { return precondition && relation_holds; }
};

VacuumReport vacuum_eigencheck(const LinFun& f, std::uint32_t m_max, const RankOptions& opts = {});

/// Support of a series by s-exponent. A heuristic witness only: the
/// non-sparseness condition is asymptotic.
struct SupportProfile {
  std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> by_m;
  /// Every monomial has all k_j == m, the pattern of g(s t).
  bool diagonal_only = false;
  /// Every monomial with m <= min(k) and max(k) <= validity window is present.
  bool triangular = false;
  std::size_t size = 0;
};

SupportProfile support_profile(const TruncatedSeries& f);

struct Lemma2Report {
  std::size_t family = 0;
  std::size_t rank = 0;
  bool full_rank() const { return family == rank; }
  SupportProfile profile;
};

/// Rank of {(tau d_s)^lambda Delta^j f : lambda <= Lambda, j <= J
/// componentwise}. Requires Lambda + J <= V - 1.
Lemma2Report lemma2_rank_check(const TruncatedSeries& f, std::uint32_t Lambda, std::uint32_t J,
                               const RankOptions& opts = {});

/// g(s t_1), n = 1, for g an F_q-linear polynomial in s (n = 0).
TruncatedSeries diagonal_compose(const LinFun& g);

/// A function for the GK experiments together with known annihilators.
struct GkFunction {
  std::string name;
  TruncatedSeries series;
  std::vector<RingElem> annihilators;
};

/// carlitz, binom, hyp, diag (g = e_2), sum (carlitz + binom) at truncation
/// T; poly parses `spec` as an F_q-linear polynomial in s.
GkFunction gk_function(const Field& f, const std::string& name, std::uint32_t T, const std::string& spec = "");

/// Parses "s", "s^q", "s^q^m", "s^(q^m)" terms with optional "c*" element
/// coefficients, joined by " + ".
LinFun parse_s_polynomial(const Field& f, const std::string& text);

}  // namespace carlitz
