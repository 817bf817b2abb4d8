#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/linfun.hpp"

namespace carlitz {

enum class RankMode { kExact, kProbabilistic };

struct RankOptions {
  RankMode mode = RankMode::kExact;
  std::uint64_t seed = 1;
  /// Independent evaluation points; the largest rank seen is kept.
  unsigned trials = 3;
  /// Exact mode may fall back to fraction-free elimination over F_q[y].
  bool allow_elimination = true;
};

struct RankReport {
  std::size_t rank = 0;
  /// Lower bound from evaluation, upper bound from size and relations.
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool certified = false;
  /// "full-rank", "relations", "elimination" or "evaluation".
  std::string method;
  /// Probability that evaluation undercounted (1 when uninformative).
  double failure_bound = 1.0;
};

using ScalarMatrix = std::vector<std::vector<PerfectRational>>;

/// Rank over the perfect closure of F_q(x). Entries are evaluated at random
/// points of ExtField to get a lower bound. Exact mode then certifies it:
/// by reaching min(rows, cols), by `relations` (rows of coefficients with
/// sum_i c_i row_i = 0, supplied by the caller) bounding the rank from
/// above, or by fraction-free elimination after lifting every entry to the
/// common level.
RankReport matrix_rank(const ScalarMatrix& rows, const RankOptions& opts = {},
                       const ScalarMatrix* relations = nullptr);

/// Coefficient vectors on monomials with all k_j <= window.
ScalarMatrix coefficient_matrix(const std::vector<LinFun>& vectors, std::uint32_t window);

RankReport rank_report(const std::vector<LinFun>& vectors, std::uint32_t window, const RankOptions& opts = {},
                       const ScalarMatrix* relations = nullptr);
std::size_t exact_rank(const std::vector<LinFun>& vectors, std::uint32_t window, const RankOptions& opts = {});

/// Rank by fraction-free (Bareiss) elimination over F_q[y], y = x^{1/q^E}.
std::size_t elimination_rank(const ScalarMatrix& rows);

}  // namespace carlitz
