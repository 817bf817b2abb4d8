#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carlitz/perfect.hpp"

namespace carlitz {

/// A finite place of F_q(x): a monic irreducible pi in F_q[x] of degree delta.
struct Place {
  FqPoly pi;
  std::uint32_t delta = 0;

  /// Certifies pi (monic, irreducible); throws InvalidArgument otherwise.
  static Place make(FqPoly pi);
  std::string to_string() const;
};

/// Irreducibility over F_q: pi divides y^{q^d} - y exactly for d = deg pi and
/// for no proper divisor d of deg pi.
bool is_irreducible(const FqPoly& pi);

/// All monic irreducibles of degree delta, in increasing coefficient-code
/// order (lowest coefficient varies fastest).
std::vector<Place> irreducibles(const Field& f, std::uint32_t delta);

/// Order of vanishing of a polynomial in F_q[x].
std::uint64_t poly_valuation(const FqPoly& a, const Place& place);

/// v_pi(r) as an exact rational; std::nullopt stands for +infinity (r = 0).
std::optional<QExp> valuation(const PerfectRational& r, const Place& place);

}  // namespace carlitz
