#include "carlitz/rank.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "carlitz/errors.hpp"
#include "carlitz/ext_field.hpp"

namespace carlitz {

namespace {

std::uint32_t common_level(const ScalarMatrix& rows) {
  std::uint32_t e = 0;
  for (const auto& row : rows)
    for (const auto& c : row) e = std::max(e, c.level());
  return e;
}

const Field* field_of(const ScalarMatrix& rows) {
  for (const auto& row : rows)
    for (const auto& c : row)
      if (c.num().field_ptr()) return c.num().field_ptr();
  return nullptr;
}

// alpha^{q^k} in log form.
ExtField::Elem frobenius_point(const ExtField& F, ExtField::Elem alpha, std::uint32_t k) {
  for (std::uint32_t i = 0; i < k; ++i) alpha = F.pow(alpha, F.base().q());
  return alpha;
}

struct Evaluation {
  std::size_t rank = 0;
  bool ok = false;  // false when a denominator vanished
};

Evaluation evaluate_rank(const ExtField& F, const ScalarMatrix& rows, std::uint32_t level, ExtField::Elem alpha) {
  std::vector<ExtField::Elem> pts(level + 1);
  for (std::uint32_t e = 0; e <= level; ++e) pts[e] = frobenius_point(F, alpha, level - e);
  std::vector<std::vector<ExtField::Elem>> vals(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    vals[r].resize(rows[r].size(), ExtField::kZero);
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const PerfectRational& v = rows[r][c];
      if (v.is_zero()) continue;
      const ExtField::Elem den = F.eval(v.den().poly(), pts[v.den().level()]);
      if (den == ExtField::kZero) return {};
      vals[r][c] = F.div(F.eval(v.num().poly(), pts[v.num().level()]), den);
    }
  }
  return {ext_rank(F, std::move(vals)), true};
}

struct LowerBound {
  std::size_t rank = 0;
  double failure_bound = 1.0;
};

// Degree in y_E of a row after clearing its denominators, bounded above.
double row_degree_bound(const std::vector<PerfectRational>& row, std::uint32_t level, std::uint32_t q) {
  double num = 0, den = 0;
  std::set<std::pair<std::uint32_t, std::vector<std::uint8_t>>> seen;
  for (const auto& c : row) {
    if (c.is_zero()) continue;
    const double scale = std::pow(static_cast<double>(q), level - c.num().level());
    num = std::max(num, static_cast<double>(c.num().poly().degree()) * scale);
    if (!c.den().is_one() && seen.insert({c.den().level(), c.den().poly().coeffs()}).second)
      den += static_cast<double>(c.den().poly().degree()) * std::pow(static_cast<double>(q), level - c.den().level());
  }
  return num + den;
}

LowerBound evaluation_lower_bound(const ScalarMatrix& rows, const RankOptions& opts) {
  LowerBound lb;
  const Field* f = field_of(rows);
  if (!f) return lb;  // all zero
  const ExtField& F = ExtField::over(*f);
  const std::uint32_t level = common_level(rows);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
  unsigned done = 0, attempts = 0;
  while (done < std::max(1u, opts.trials)) {
    if (++attempts > 64 * std::max(1u, opts.trials)) throw Error("rank: no evaluation point avoids the denominators");
    const Evaluation ev = evaluate_rank(F, rows, level, pick(rng));
    if (!ev.ok) continue;
    lb.rank = std::max(lb.rank, ev.rank);
    ++done;
  }
  // Schwartz-Zippel on one nonzero minor of size rank + 1, per trial.
  std::vector<double> degs;
  for (const auto& row : rows) degs.push_back(row_degree_bound(row, level, f->q()));
  std::sort(degs.rbegin(), degs.rend());
  double d = 0;
  for (std::size_t i = 0; i < std::min(degs.size(), lb.rank + 1); ++i) d += degs[i];
  const double per_trial = std::min(1.0, d / static_cast<double>(F.order()));
  lb.failure_bound = std::pow(per_trial, static_cast<double>(done));
  return lb;
}

}  // namespace

std::size_t elimination_rank(const ScalarMatrix& rows) {
  const Field* f = field_of(rows);
  if (!f) return 0;
  const std::uint32_t level = common_level(rows);
  std::vector<std::vector<FqPoly>> a;
  for (const auto& row : rows) {
    FqPoly l = FqPoly::constant(*f, f->one());
    for (const auto& c : row)
      if (!c.is_zero() && !c.den().is_one()) {
        const FqPoly d = c.den().lifted(level);
        l = exact_div(l * d, gcd(l, d));
      }
    std::vector<FqPoly> out;
    out.reserve(row.size());
    for (const auto& c : row) {
      if (c.is_zero()) {
        out.emplace_back(*f);
        continue;
      }
      out.push_back(c.num().lifted(level) * exact_div(l, c.den().lifted(level)));
    }
    a.push_back(std::move(out));
  }
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t rank = 0;
  FqPoly prev = FqPoly::constant(*f, f->one());
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const FqPoly& p = a[rank][c];
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = exact_div(p * a[r][k] - a[r][c] * a[rank][k], prev);
      a[r][c] = FqPoly(*f);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RankReport matrix_rank(const ScalarMatrix& rows, const RankOptions& opts, const ScalarMatrix* relations) {
  RankReport rep;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  rep.upper = std::min(rows.size(), cols);
  const LowerBound lb = evaluation_lower_bound(rows, opts);
  rep.lower = lb.rank;
  rep.failure_bound = lb.failure_bound;
  if (relations && !relations->empty()) {
    for (const auto& r : *relations)
      if (r.size() != rows.size()) throw InvalidArgument("matrix_rank: relation length differs from row count");
    const std::size_t rel = evaluation_lower_bound(*relations, opts).rank;
    rep.upper = std::min(rep.upper, rows.size() - rel);
  }
  if (rep.lower > rep.upper) throw Error("matrix_rank: evaluation exceeds the certified upper bound");
  rep.rank = rep.lower;
  if (rep.lower == rep.upper) {
    rep.certified = true;
    rep.failure_bound = 0.0;
    rep.method = (rep.upper == std::min(rows.size(), cols)) ? "full-rank" : "relations";
    return rep;
  }
  if (opts.mode == RankMode::kExact && opts.allow_elimination) {
    rep.rank = elimination_rank(rows);
    rep.lower = rep.upper = rep.rank;
    rep.certified = true;
    rep.failure_bound = 0.0;
    rep.method = "elimination";
    return rep;
  }
  rep.method = "evaluation";
  return rep;
}

ScalarMatrix coefficient_matrix(const std::vector<LinFun>& vectors, std::uint32_t window) {
  std::map<LinMonomial, std::size_t> cols;
  for (const auto& v : vectors)
    for (const auto& [mono, c] : v.terms())
      if (mono.within(window)) cols.emplace(mono, 0);
  std::size_t idx = 0;
  for (auto& [mono, i] : cols) i = idx++;
  ScalarMatrix rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<PerfectRational> row(cols.size(), PerfectRational(v.field()));
    for (const auto& [mono, c] : v.terms())
      if (mono.within(window)) row[cols.at(mono)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

RankReport rank_report(const std::vector<LinFun>& vectors, std::uint32_t window, const RankOptions& opts,
                       const ScalarMatrix* relations) {
  return matrix_rank(coefficient_matrix(vectors, window), opts, relations);
}

std::size_t exact_rank(const std::vector<LinFun>& vectors, std::uint32_t window, const RankOptions& opts) {
  return rank_report(vectors, window, opts).rank;
}

}  // namespace carlitz
