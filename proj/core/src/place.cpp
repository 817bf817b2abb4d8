#include "carlitz/place.hpp"

#include "carlitz/element_io.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

// y^(q^d) mod pi by repeated q-th powering.
FqPoly frobenius_power_mod(const FqPoly& pi, std::uint32_t d) {
  const Field& f = pi.field();
  FqPoly r = mod(FqPoly::monomial(f, 1, f.one()), pi);
  for (std::uint32_t i = 0; i < d; ++i) r = mod(r.pow(f.q()), pi);
  return r;
}

// pi(x)^{p^j}: coefficients raised to p^j, exponents scaled by p^j.
FqPoly frobenius_lift(const FqPoly& pi, std::uint64_t pj) {
  const Field& f = pi.field();
  std::vector<std::uint8_t> c(pi.coeffs().size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.pow(pi.coeff(i), pj).v;
  return FqPoly(f, std::move(c)).spread(pj);
}

}  // namespace

bool is_irreducible(const FqPoly& pi) {
  const auto deg = pi.degree();
  if (deg < 1) return false;
  const Field& f = pi.field();
  const FqPoly y = FqPoly::monomial(f, 1, f.one());
  const auto n = static_cast<std::uint32_t>(deg);
  if (!(frobenius_power_mod(pi, n) - mod(y, pi)).is_zero()) return false;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const FqPoly g = gcd(pi, frobenius_power_mod(pi, d) - y);
    if (!g.is_one()) return false;
  }
  return true;
}

Place Place::make(FqPoly pi) {
  if (pi.is_zero() || pi.lead().v != 1) throw InvalidArgument("place: polynomial must be monic");
  if (!is_irreducible(pi)) throw InvalidArgument("place: polynomial is reducible");
  const auto d = static_cast<std::uint32_t>(pi.degree());
  return Place{std::move(pi), d};
}

std::string Place::to_string() const { return to_text(PerfectPoly(pi, 0)); }

std::vector<Place> irreducibles(const Field& f, std::uint32_t delta) {
  if (delta == 0) throw InvalidArgument("irreducibles: delta must be >= 1");
  const std::uint64_t q = f.q();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < delta; ++i) {
    count *= q;
    if (count > (1ULL << 24)) throw InvalidArgument("irreducibles: too many candidates");
  }
  std::vector<Place> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint8_t> c(delta + 1, 0);
    std::uint64_t v = code;
    for (std::uint32_t i = 0; i < delta; ++i) {
      c[i] = static_cast<std::uint8_t>(v % q);
      v /= q;
    }
    c[delta] = 1;
    FqPoly pi(f, std::move(c));
    if (is_irreducible(pi)) out.push_back(Place{std::move(pi), delta});
  }
  return out;
}

std::uint64_t poly_valuation(const FqPoly& a, const Place& place) {
  if (a.is_zero()) throw Error("poly_valuation: zero has infinite valuation");
  const Field& f = a.field();
  if (place.delta == 1 && place.pi.coeff(0).is_zero()) return a.low_degree();
  // A q-th power in y is M(y)^q with M obtained by compression.
  const std::size_t s = a.stride();
  if (s != 0 && s % f.q() == 0) return f.q() * poly_valuation(a.compress(f.q()), place);

  // Greedy descent over pi^{p^j}, which are as sparse as pi.
  std::uint64_t pj = 1;
  while (pj * f.p() * place.delta <= static_cast<std::uint64_t>(a.degree())) pj *= f.p();
  std::uint64_t v = 0;
  FqPoly cur = a;
  while (true) {
    const FqPoly d = frobenius_lift(place.pi, pj);
    while (cur.degree() >= d.degree()) {
      auto [quo, rem] = divmod(cur, d);
      if (!rem.is_zero()) break;
      cur = std::move(quo);
      v += pj;
    }
    if (pj == 1) break;
    pj /= f.p();
  }
  return v;
}

std::optional<QExp> valuation(const PerfectRational& r, const Place& place) {
  if (r.is_zero()) return std::nullopt;
  const std::uint32_t q = r.field().q();
  // The level-e array read at level 0 is N^{q^e}.
  const auto vn = static_cast<std::int64_t>(poly_valuation(r.num().poly(), place));
  const auto vd = static_cast<std::int64_t>(poly_valuation(r.den().poly(), place));
  return QExp(vn, r.num().level(), q) - QExp(vd, r.den().level(), q);
}

}  // namespace carlitz
