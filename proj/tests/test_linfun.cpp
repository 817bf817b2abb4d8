#include <doctest.h>

#include "carlitz/errors.hpp"
#include "carlitz/linfun.hpp"
#include "carlitz/special.hpp"
#include "support/gen.hpp"

using namespace carlitz;
using carlitz::testing::Gen;

namespace {

PerfectRational one(const Field& f) { return PerfectRational::one(f); }

LinFun term(const Field& f, std::uint32_t m, std::vector<std::uint32_t> ks, const PerfectRational& c) {
  LinFun g(f, static_cast<std::uint32_t>(ks.size()));
  g.add_term(LinMonomial{m, std::move(ks)}, c);
  return g;
}

}  // namespace

TEST_SUITE("linfun") {

TEST_CASE("operator examples") {
  const Field& f = Field::get(3);
  const PerfectRational a = PerfectRational::x(f) + one(f);
  CHECK(apply_tau(term(f, 0, {0}, a)) == term(f, 1, {1}, a.frobenius()));
  CHECK(apply_tau(LinFun(f, 1)).is_zero());

  CHECK(apply_ds(term(f, 2, {3}, one(f))) == term(f, 1, {2}, bracket(f, 2).qth_root()));
  CHECK(apply_ds(term(f, 0, {4}, one(f))).is_zero());
  CHECK(apply_ds(LinFun::s_power(f, 1, one(f))) == LinFun::s_power(f, 0, bracket(f, 1).qth_root()));
  CHECK_THROWS_AS(apply_ds(term(f, 1, {0}, one(f))), MonomialEscape);

  CHECK(apply_delta(term(f, 0, {2}, one(f)), 1) == term(f, 0, {2}, bracket(f, 2)));
  CHECK(apply_delta(term(f, 0, {0}, one(f)), 1).is_zero());
  CHECK_THROWS_AS(apply_delta(term(f, 0, {0}, one(f)), 2), InvalidArgument);
  CHECK_THROWS_AS(apply_delta(term(f, 0, {0}, one(f)), 0), InvalidArgument);
}

TEST_CASE("commutation on functions") {
  Gen gen(2024);
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    const PerfectRational b1 = bracket(f, 1), b1r = b1.qth_root();
    for (int trial = 0; trial < 30; ++trial) {
      const std::uint32_t n = 1 + trial % 2;
      const LinFun g = gen.linfun(f, n, 6, 5);
      REQUIRE(g.in_F_shape());
      for (std::uint32_t j = 1; j <= n; ++j) {
        CHECK(apply_ds(apply_delta(g, j)) - apply_delta(apply_ds(g), j) == b1r * apply_ds(g));
        CHECK(apply_delta(apply_tau(g), j) - apply_tau(apply_delta(g, j)) == b1 * apply_tau(g));
        CHECK(apply_delta(apply_delta(g, j), n) == apply_delta(apply_delta(g, n), j));
        CHECK(apply_delta(g, j).in_F_shape());
      }
      CHECK(apply_ds(apply_tau(g)) - apply_tau(apply_ds(g)) == b1r * g);
      CHECK(apply_tau(g).in_F_shape());
      CHECK(apply_ds(g).in_F_shape());

      const LinFun h = gen.linfun(f, n, 6, 5);
      const PerfectRational lam = gen.perfect_rational(f, 1, true);
      CHECK(apply_tau(g + h) == apply_tau(g) + apply_tau(h));
      CHECK(apply_ds(g + h) == apply_ds(g) + apply_ds(h));
      CHECK(apply_delta(g + h, 1) == apply_delta(g, 1) + apply_delta(h, 1));
      CHECK(apply_tau(lam * g) == lam.frobenius() * apply_tau(g));
      CHECK(apply_ds(lam * g) == lam.qth_root() * apply_ds(g));
      CHECK(apply_delta(lam * g, 1) == lam * apply_delta(g, 1));
    }
  }
}

TEST_CASE("evaluation") {
  Gen gen(9);
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    const LinFun g = LinFun::s_power(f, 1, one(f)) - LinFun::s_power(f, 0, one(f));
    CHECK(evaluate(g, PerfectRational::x(f)) == bracket(f, 1));
    for (int trial = 0; trial < 10; ++trial) {
      LinFun r(f, 0);
      for (std::uint32_t m = 0; m < 4; ++m) r.add_term(LinMonomial{m, {}}, gen.fq_x_poly(f, 2));
      CHECK(evaluate(r, PerfectRational(f)).is_zero());
      const PerfectRational a = gen.fq_x_poly(f, 3), b = gen.fq_x_poly(f, 3);
      CHECK(evaluate(r, a + b) == evaluate(r, a) + evaluate(r, b));
    }
  }
}

TEST_CASE("truncated series") {
  const Field& f = Field::get(2);
  const TruncatedSeries c6 = carlitz_module_trunc(f, 6);
  const TruncatedSeries c7 = carlitz_module_trunc(f, 7);
  const TruncatedSeries d7 = apply_ds(c7);
  CHECK(d7.validity == 6);
  const SeriesComparison cmp = series_compare(c6, d7);
  CHECK(cmp.equal);
  CHECK(cmp.window == 6);
  CHECK(series_compare(c6, c6).window == c6.validity);

  TruncatedSeries bad = c6;
  bad.body.add_term(LinMonomial{1, {2}}, one(f));
  const SeriesComparison diff = series_compare(c6, bad);
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.witness.has_value());
  CHECK(*diff.witness == LinMonomial{1, {2}});

  CHECK(apply_tau(c6).validity == c6.validity);
  CHECK(apply_delta(c6, 1).validity == c6.validity);
  TruncatedSeries exhausted = c6;
  exhausted.validity = 0;
  CHECK_THROWS_AS(apply_ds(exhausted), InvalidArgument);
}

TEST_CASE("serialization") {
  Gen gen(31);
  const Field& f = Field::get(2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const LinFun g = gen.linfun(f, 2, 4, 5);
    const nlohmann::json j = to_json(g);
    CHECK(linfun_from_json(f, j) == g);
    CHECK(j.at("n") == 2);
  }
  const LinFun g = term(Field::get(3), 1, {2}, one(Field::get(3)));
  CHECK(to_json(g).at("terms").at(0).at(0) == nlohmann::json::array({1, 2}));
  CHECK_FALSE(to_text(g).empty());
}

}  // TEST_SUITE
