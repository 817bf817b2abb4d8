#pragma once

// Identity-verification sweeps shared by `carlitz verify` and the acceptance
// runner. Results depend on the seed only, never on the job count.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "carlitz/field.hpp"

namespace carlitz::cli {

struct SweepResult {
  std::string name;
  std::uint32_t q = 0;
  std::uint64_t checks = 0;
  /// One human-readable counterexample per failed check.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void merge(const SweepResult& o);
};

nlohmann::json to_json(const SweepResult& r);

/// binom(k,m) Pascal rule for 0 <= m <= k <= k_max.
SweepResult sweep_pascal(const Field& f, std::uint32_t k_max, bool perturb = false, unsigned jobs = 1);

/// Vandermonde expansion for 0 <= l <= m <= k <= k_max.
SweepResult sweep_vandermonde(const Field& f, std::uint32_t k_max, bool perturb = false, unsigned jobs = 1);

/// e_k(st) expansion for k <= k_max on `pairs` random s, t in F_q[x] of
/// degree <= max_deg.
SweepResult sweep_kbinom(const Field& f, std::uint32_t k_max, std::uint32_t pairs, std::uint32_t max_deg,
                         std::uint64_t seed, bool perturb = false, unsigned jobs = 1);

/// The binomial generating series PDE at truncation T, d_s C = C for the
/// Carlitz truncation T, and d_s f_i = f_{i-1} for 1 <= i <= T.
SweepResult sweep_pde(const Field& f, std::uint32_t T, bool perturb = false);

/// Contiguous relation for all parameter tuples with entries <= p_max and
/// (l, lambda) in {(1,0), (0,1), (1,1)}.
SweepResult sweep_contiguous(const Field& f, std::uint32_t p_max, bool perturb = false, unsigned jobs = 1);

/// Integrality of binom(k,m) at every place of degree <= delta_max and the
/// closed form for v_pi(D_m).
SweepResult sweep_places(const Field& f, std::uint32_t k_max, std::uint32_t delta_max, bool perturb = false,
                         unsigned jobs = 1);

struct RingSweepOptions {
  std::uint32_t elements = 1000;
  std::uint32_t probes = 100;
  std::uint32_t max_degree = 3;
  std::uint32_t max_n = 1;
  std::uint32_t probe_bound = 4;
  std::uint64_t seed = 1;
};

/// Associativity (ab)c = a(bc) and compatibility (ab)g = a(bg) on random
/// elements and functions, and probe_independence witnesses for random
/// nonzero elements.
SweepResult sweep_ring(const Field& f, const RingSweepOptions& opts, bool perturb = false, unsigned jobs = 1);

}  // namespace carlitz::cli
