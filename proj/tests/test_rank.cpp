#include <doctest.h>

#include "carlitz/errors.hpp"
#include "carlitz/ext_field.hpp"
#include "carlitz/rank.hpp"
#include "carlitz/special.hpp"
#include "support/gen.hpp"

using namespace carlitz;
using carlitz::testing::Gen;

namespace {

// Gauss-Jordan over the perfect closure with field arithmetic only.
std::size_t reference_rank(ScalarMatrix rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const PerfectRational inv = rows[rank][c].inv();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const PerfectRational factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// `count` vectors spanning a space of dimension <= basis.
std::vector<LinFun> dependent_family(Gen& gen, const Field& f, std::size_t basis, std::size_t count) {
  std::vector<LinFun> base;
  for (std::size_t i = 0; i < basis; ++i) base.push_back(gen.linfun(f, 1, 3, 3));
  std::vector<LinFun> out;
  for (std::size_t i = 0; i < count; ++i) {
    LinFun v(f, 1);
    for (const auto& b : base)
      if (gen.coin(0.6)) v += gen.perfect_rational(f, 1, true) * b;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("rank") {

TEST_CASE("extension field arithmetic") {
  for (auto cfg : {FieldConfig{2, 1}, FieldConfig{3, 1}, FieldConfig{2, 2}, FieldConfig{5, 1}}) {
    const Field& f = Field::get(cfg);
    const ExtField& F = ExtField::over(f);
    CHECK(F.size() >= (1u << 20));
    CHECK(F.degree() >= 2);
    Gen gen(cfg.p * 10 + cfg.nu);
    auto elem = [&] { return gen.coin(0.1) ? ExtField::kZero : static_cast<ExtField::Elem>(gen.below(F.order())); };
    for (int t = 0; t < 200; ++t) {
      const auto a = elem(), b = elem(), c = elem();
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.sub(a, a) == ExtField::kZero);
      if (a != ExtField::kZero) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
    // Base field embeds as a subfield.
    for (std::uint32_t x = 0; x < f.q(); ++x)
      for (std::uint32_t y = 0; y < f.q(); ++y) {
        const FqElem a{static_cast<std::uint8_t>(x)}, b{static_cast<std::uint8_t>(y)};
        CHECK(F.add(F.from_base(a), F.from_base(b)) == F.from_base(FqElem{f.add(a.v, b.v)}));
        CHECK(F.mul(F.from_base(a), F.from_base(b)) == F.from_base(FqElem{f.mul(a.v, b.v)}));
      }
    // Sparse evaluation against Horner's rule.
    const FqPoly p = gen.fq_poly(f, 30);
    const auto pt = static_cast<ExtField::Elem>(gen.below(F.order()));
    ExtField::Elem h = ExtField::kZero;
    for (std::size_t i = p.size(); i-- > 0;) h = F.add(F.mul(h, pt), F.from_base(p.coeff(i)));
    CHECK(F.eval(p, pt) == h);
  }
}

TEST_CASE("small examples") {
  const Field& f = Field::get(3);
  Gen gen(1);
  const LinFun v = gen.linfun(f, 1, 3, 4);
  CHECK(exact_rank({v, v}, 3) == 1);
  CHECK(exact_rank({v, PerfectRational::x(f) * v}, 3) == 1);
  CHECK(exact_rank({}, 3) == 0);
  CHECK(exact_rank({LinFun(f, 1)}, 3) == 0);

  for (std::uint32_t p : {2u, 3u}) {
    const Field& fp = Field::get(p);
    std::vector<LinFun> fs;
    for (std::uint32_t k = 0; k <= 2; ++k) fs.push_back(carlitz_f(fp, k));
    CHECK(exact_rank(fs, 3) == 3);
  }
  // Coordinates outside the window are ignored.
  LinFun a(f, 1), b(f, 1);
  a.add_term(LinMonomial{0, {1}}, PerfectRational::one(f));
  b.add_term(LinMonomial{0, {1}}, PerfectRational::one(f));
  b.add_term(LinMonomial{0, {4}}, PerfectRational::one(f));
  CHECK(exact_rank({a, b}, 3) == 1);
  CHECK(exact_rank({a, b}, 4) == 2);
}

TEST_CASE("exact and probabilistic modes agree with field elimination") {
  Gen gen(99);
  RankOptions prob;
  prob.mode = RankMode::kProbabilistic;
  for (int trial = 0; trial < 100; ++trial) {
    const Field& f = Field::get(trial % 2 ? 3 : 2);
    const std::size_t basis = 1 + gen.below(4), count = 1 + gen.below(6);
    const auto vecs = dependent_family(gen, f, basis, count);
    const ScalarMatrix m = coefficient_matrix(vecs, 3);
    const std::size_t ref = reference_rank(m);
    const RankReport ex = rank_report(vecs, 3);
    CHECK(ex.certified);
    CHECK(ex.rank == ref);
    CHECK(rank_report(vecs, 3, prob).rank == ref);
    CHECK(elimination_rank(m) == ref);
  }
}

TEST_CASE("relations certify an upper bound") {
  const Field& f = Field::get(2);
  Gen gen(4);
  const LinFun a = gen.linfun(f, 1, 3, 4), b = gen.linfun(f, 1, 3, 4);
  const PerfectRational c = PerfectRational::x(f) + PerfectRational::one(f);
  const std::vector<LinFun> vecs{a, b, a + c * b};
  const PerfectRational one = PerfectRational::one(f);
  const ScalarMatrix rel{{one, c, -one}};
  RankOptions no_elim;
  no_elim.allow_elimination = false;
  const RankReport r = rank_report(vecs, 3, no_elim, &rel);
  CHECK(r.rank == reference_rank(coefficient_matrix(vecs, 3)));
  if (r.rank == 2) {
    CHECK(r.certified);
    CHECK(r.method == "relations");
  }
  const ScalarMatrix wrong_length{{one, c}};
  CHECK_THROWS_AS(rank_report(vecs, 3, no_elim, &wrong_length), InvalidArgument);

  // Without relations or elimination the result stays uncertified.
  const RankReport u = rank_report(vecs, 3, no_elim);
  if (u.rank < 3) {
    CHECK_FALSE(u.certified);
    CHECK(u.method == "evaluation");
    CHECK(u.failure_bound >= 0.0);
    CHECK(u.failure_bound <= 1.0);
  }
}

}  // TEST_SUITE
