#include <doctest.h>

#include "carlitz/errors.hpp"
#include "carlitz/special.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace carlitz;
using carlitz::testing::Frac;
using carlitz::testing::Gen;
using carlitz::testing::RefPoly;

namespace {

PerfectRational one(const Field& f) { return PerfectRational::one(f); }

Place place_x(const Field& f) { return Place::make(FqPoly::monomial(f, 1, f.one())); }

// All polynomials of degree < k over F_q, as elements.
std::vector<PerfectRational> small_polys(const Field& f, std::uint32_t k) {
  std::vector<PerfectRational> out;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= f.q();
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint8_t> c(k, 0);
    std::uint64_t v = code;
    for (auto& d : c) {
      d = static_cast<std::uint8_t>(v % f.q());
      v /= f.q();
    }
    out.emplace_back(PerfectPoly(FqPoly(f, c), 0));
  }
  return out;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("factorials") {
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    CHECK(dfac(f, 0) == one(f));
    CHECK(lfac(f, 0) == one(f));
    CHECK(dfac(f, 2) == bracket(f, 2) * bracket(f, 1).frobenius());
    for (std::uint32_t i = 0; i <= 5; ++i) {
      CHECK(RefPoly::from(dfac(f, i).num()) == carlitz::testing::ref_dfac(p, i));
      CHECK(valuation(lfac(f, i), place_x(f)) == QExp(i, 0, p));
      const std::int64_t qi = ipow_checked(p, i);
      CHECK(valuation(dfac(f, i), place_x(f)) == QExp((qi - 1) / (p - 1), 0, p));
    }
    for (std::uint32_t i = 6; i <= 8; ++i)
      CHECK(valuation(lfac(f, i), place_x(f)) == QExp(i, 0, p));
  }
  const Field& f4 = Field::get(2, 2);
  PerfectRational d = one(f4);
  for (std::uint32_t j = 1; j <= 4; ++j) d *= bracket(f4, j).q_power(4 - j);
  CHECK(dfac(f4, 4) == d);
}

TEST_CASE("K-binomial coefficients") {
  for (const auto& cfg : std::vector<FieldConfig>{{2, 1}, {3, 1}, {2, 2}}) {
    const Field& f = Field::get(cfg);
    CAPTURE(f.describe());
    for (std::int64_t k = 0; k <= 8; ++k) {
      CHECK(binomK(f, k, 0) == one(f));
      CHECK(binomK(f, k, k) == one(f));
      CHECK(binomK(f, k, -1).is_zero());
      CHECK(binomK(f, k, k + 1).is_zero());
    }
    CHECK(binomK(f, 2, 1) == one(f) + bracket(f, 1).pow(f.q() - 1));
    for (std::uint32_t k = 0; k <= 5; ++k)
      for (std::uint32_t m = 0; m <= k; ++m) CHECK(binomK(f, k, m) == binomK_from_factorials(f, k, m));
  }
  // Cross-multiplied reference check: binom * D_m * D_{k-m}^{q^m} = D_k.
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    for (std::uint32_t k = 0; k <= 4; ++k)
      for (std::uint32_t m = 0; m <= k; ++m) {
        const RefPoly b = RefPoly::from(binomK(f, k, m).num());
        const RefPoly rhs = b * carlitz::testing::ref_dfac(p, m) *
                            carlitz::testing::ref_dfac(p, k - m).exp_scaled(Frac{ipow_checked(p, m), 1});
        CHECK(rhs == carlitz::testing::ref_dfac(p, k));
      }
    for (std::uint32_t k = 0; k <= 8; ++k)
      for (std::uint32_t m = 0; m <= k; ++m) CHECK(valuation(binomK(f, k, m), place_x(f)) == QExp(0, 0, p));
  }
}

TEST_CASE("Carlitz polynomials") {
  for (const auto& cfg : std::vector<FieldConfig>{{2, 1}, {3, 1}, {2, 2}}) {
    const Field& f = Field::get(cfg);
    CAPTURE(f.describe());
    CHECK(carlitz_e(f, 0) == LinFun::s_power(f, 0, one(f)));
    LinFun e1 = LinFun::s_power(f, 1, one(f));
    e1.add_term(LinMonomial{0, {}}, -one(f));
    CHECK(carlitz_e(f, 1) == e1);
    CHECK(carlitz_f(f, 0) == LinFun::s_power(f, 0, one(f)));
    for (std::uint32_t k = 0; k <= 8; ++k) {
      if (f.q() == 4 && k > 6) break;
      CHECK(carlitz_e(f, k) == dfac(f, k) * carlitz_f(f, k));
    }
    for (std::uint32_t i = 1; i <= 8; ++i) {
      if (f.q() == 4 && i > 6) break;
      CHECK(apply_ds(carlitz_f(f, i)) == carlitz_f(f, i - 1));
    }
    CHECK(apply_ds(carlitz_f(f, 0)).is_zero());
  }
}

TEST_CASE("e_k vanishes on polynomials of degree < k and matches the product") {
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    Gen g(p);
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const auto pts = small_polys(f, k);
      for (const auto& m : pts) CHECK(evaluate(carlitz_e(f, k), m).is_zero());
      if (pts.size() > 27) continue;
      for (int trial = 0; trial < 3; ++trial) {
        const PerfectRational s = g.fq_x_poly(f, 4);
        PerfectRational prod = one(f);
        for (const auto& m : pts) prod *= s - m;
        CHECK(evaluate(carlitz_e(f, k), s) == prod);
      }
    }
  }
}

TEST_CASE("Pascal and Vandermonde identities") {
  for (const auto& cfg : std::vector<FieldConfig>{{2, 1}, {3, 1}}) {
    const Field& f = Field::get(cfg);
    CHECK(pascal_check(f, 1, 0));
    CHECK(!pascal_check(f, 3, 1, true));
    for (std::uint32_t k = 0; k <= 6; ++k)
      for (std::uint32_t m = 0; m <= k; ++m) CHECK(pascal_check(f, k, m));
    const VandermondeTable t = vandermonde_table(f, 4);
    CHECK(t.at(f, 0, 0) == one(f));
    CHECK(t.at(f, 2, 3).is_zero());
    CHECK(t.at(f, 2, -1).is_zero());
    for (std::uint32_t l = 0; l < 4; ++l)
      for (std::int64_t i = 0; i <= l + 1; ++i)
        CHECK(t.at(f, l + 1, i) ==
              t.at(f, l, i - 1) + t.at(f, l, i) * dfac(f, 4 - i).pow(f.q() - 1).q_power(l));
    for (std::uint32_t k = 0; k <= 5; ++k)
      for (std::uint32_t m = 0; m <= k; ++m)
        for (std::uint32_t l = 0; l <= m; ++l) CHECK(vandermonde_check(f, k, m, l));
    CHECK(!vandermonde_check(f, 4, 2, 1, true));
    // l = 1 is Pascal: c_{1,0} = D_m^{q-1}, c_{1,1} = 1.
    const VandermondeTable t3 = vandermonde_table(f, 3);
    CHECK(t3.at(f, 1, 0) == dfac(f, 3).pow(f.q() - 1));
    CHECK(t3.at(f, 1, 1) == one(f));
    // The recurrence without the q^l exponent matches only up to l = 1.
    const VandermondeTable printed = vandermonde_table(f, 3, VandermondeRule::kPrinted);
    for (std::int64_t i = 0; i <= 1; ++i) CHECK(printed.at(f, 1, i) == t3.at(f, 1, i));
    CHECK(printed.at(f, 2, 0) != t3.at(f, 2, 0));
    PerfectRational rhs(f);
    for (std::uint32_t i = 0; i <= 2; ++i) rhs += printed.at(f, 2, i) * binomK(f, 3, 3 - i).q_power(2);
    CHECK(rhs != binomK(f, 5, 3));
  }
}

TEST_CASE("main K-binomial identity and the factorial identity") {
  Gen g(3);
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    CHECK(kbinom_identity_check(f, 0, PerfectRational::x(f), PerfectRational::x(f) + one(f)));
    for (std::uint32_t k = 0; k <= 4; ++k) {
      CHECK(kbinom_identity_check(f, k, PerfectRational::zero(f), g.fq_x_poly(f, 3)));
      for (int trial = 0; trial < 3; ++trial) CHECK(kbinom_identity_check(f, k, g.fq_x_poly(f, 3), g.fq_x_poly(f, 3)));
    }
    CHECK(!kbinom_identity_check(f, 2, g.fq_x_poly(f, 3), g.fq_x_poly(f, 3), true));
    for (std::uint32_t k = 1; k <= 6; ++k)
      for (std::uint32_t i = 0; i < k; ++i) CHECK(dfac_binom_identity_check(f, k, i));
  }
}

TEST_CASE("Pochhammer symbols and hypergeometric polynomials") {
  const Field& f2 = Field::get(2);
  CHECK(pochhammer_neg(f2, 2, 3).is_zero());
  CHECK(pochhammer_neg(f2, 4, 4) == one(f2));
  CHECK(pochhammer_neg(f2, 2, 1) == one(f2) / (PerfectRational::x(f2).pow(2) + PerfectRational::x(f2)).pow(2));
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    // b = 0 keeps only the m = 0 term, (-3)_0 / (-0)_0 = (-1)^3 / L_3.
    CHECK(thakur_hyp(f, {3}, {0}) == LinFun::s_power(f, 0, -one(f) / lfac(f, 3)));
    // a = b: Pochhammer ratios cancel.
    for (std::uint32_t a = 0; a <= 4; ++a) {
      LinFun expect(f, 0);
      for (std::uint32_t m = 0; m <= a; ++m) expect.add_term(LinMonomial{m, {}}, one(f) / dfac(f, m));
      CHECK(thakur_hyp(f, {a}, {a}) == expect);
    }
    CHECK_THROWS_AS(thakur_hyp(f, {}, {}), InvalidArgument);
    CHECK(thakur_hyp(f, {}, {}, 2).size() == 3);
    for (std::uint32_t k = 0; k <= 4; ++k) {
      CHECK(contiguous_check(f, {k}, {}));
      CHECK(contiguous_check(f, {}, {k}));
      for (std::uint32_t v = 0; v <= 4; ++v) CHECK(contiguous_check(f, {k}, {v}));
    }
    CHECK(!contiguous_check(f, {2}, {3}, true));
  }
}

TEST_CASE("generating series") {
  const Field& f = Field::get(2);
  const TruncatedSeries b1 = genfun_binom(f, 1);
  CHECK(b1.body.size() == 3);
  CHECK(b1.body.coeff(LinMonomial{0, {0}}) == one(f));
  CHECK(b1.body.coeff(LinMonomial{0, {1}}) == one(f));
  CHECK(b1.body.coeff(LinMonomial{1, {1}}) == one(f));
  CHECK(genfun_binom(f, 6).body.in_F_shape());
  for (std::uint32_t p : {2u, 3u}) {
    const Field& fp = Field::get(p);
    const TruncatedSeries c = carlitz_module_trunc(fp, 8);
    const SeriesComparison cmp = series_compare(apply_ds(c), c);
    CHECK(cmp.equal);
    CHECK(cmp.window == 7);
    // Against the derivative of a longer truncation.
    const SeriesComparison cmp2 = series_compare(carlitz_module_trunc(fp, 6), apply_ds(carlitz_module_trunc(fp, 7)));
    CHECK(cmp2.equal);
    CHECK(cmp2.window == 6);
    for (auto [l, lam] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}) {
      const TruncatedSeries h = genfun_hyp(fp, l, lam, 4);
      CHECK(h.body.n() == static_cast<std::uint32_t>(l + lam));
      CHECK(series_compare(apply_ds(h), h).equal);
    }
  }
  TruncatedSeries c = carlitz_module_trunc(f, 4);
  TruncatedSeries d = c;
  d.body.add_term(LinMonomial{1, {2}}, one(f));
  const SeriesComparison bad = series_compare(c, d);
  CHECK(!bad.equal);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == LinMonomial{1, {2}});
}

TEST_CASE("binomial generating series satisfies its equation") {
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    const PdeReport r = pde_check_binom(f, 8);
    CHECK(r.holds);
    CHECK(r.splitting_holds);
    CHECK(r.window == 7);
    const PdeReport bad = pde_check_binom(f, 8, true);
    CHECK(!bad.holds);
    CHECK(bad.witness.has_value());
  }
  CHECK_THROWS_AS(pde_check_binom(Field::get(2), 1), InvalidArgument);
}

TEST_CASE("integrality at every place") {
  const Field& f2 = Field::get(2);
  const Place quad = Place::make(FqPoly(f2, {1, 1, 1}));
  CHECK(valuation(bracket(f2, 2), quad) == QExp(1, 0, 2));
  CHECK(valuation(dfac(f2, 2), quad) == QExp(static_cast<std::int64_t>(dfac_valuation_closed_form(2, 2, 2)), 0, 2));
  CHECK(dfac_valuation_closed_form(2, 2, 2) == 1);
  const IntegralityReport rep = place_integrality_sweep(f2, 6, 2);
  CHECK(rep.ok());
  CHECK(rep.places == 3);
  CHECK(!place_integrality_sweep(f2, 3, 1, true).ok());
  const IntegralityReport rep3 = place_integrality_sweep(Field::get(3), 4, 2, false, 2);
  CHECK(rep3.ok());
}

}  // TEST_SUITE
