#include "carlitz/gkdim.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "carlitz/element_io.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/special.hpp"

namespace carlitz {

namespace {

RingElem unit_monomial(const Field& f, std::uint32_t n, const OpMonomial& m) {
  return RingElem::monomial(f, n, m, PerfectRational::one(f));
}

std::uint64_t ipow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Checks a f == 0 on the validity window of a f.
void check_annihilator(const RingElem& a, const TruncatedSeries& f) {
  if (a.n() != f.body.n()) throw InvalidArgument("annihilator: variable counts differ");
  const TruncatedSeries r = ring_apply(a, f);
  if (!r.body.restricted(r.validity).is_zero())
    throw InvalidArgument("annihilator: " + to_text(a) + " does not annihilate the function");
}

void classify(FiltrationReport& r) {
  if (!r.degree) {
    r.classification = "unstable";
    return;
  }
  if (*r.degree == r.n + 1) {
    r.classification = "quasi-holonomic";
  } else if (*r.degree < r.n + 1) {
    r.classification = "degenerate";
  } else {
    r.classification = "over-bound";
    r.warnings.push_back("fitted degree " + std::to_string(*r.degree) + " exceeds n + 1 = " +
                         std::to_string(r.n + 1) + "; truncation artifact");
  }
}

// Fits the leading run of levels that are neither saturated nor decreasing.
void fit(FiltrationReport& r) {
  std::vector<std::uint64_t> usable;
  for (const auto& lv : r.levels) {
    if (lv.saturated) {
      r.warnings.push_back("level " + std::to_string(lv.j) +
                           " saturates its coordinate window; it and later levels are left out of the fit");
      break;
    }
    if (!usable.empty() && lv.dim < usable.back()) {
      r.warnings.push_back("level " + std::to_string(lv.j) +
                           " decreases; it and later levels are left out of the fit");
      break;
    }
    usable.push_back(lv.dim);
  }
  const HilbertFit h = hilbert_fit(usable);
  r.degree = h.degree;
  r.multiplicity = h.multiplicity;
  r.window = h.window;
  classify(r);
}

}  // namespace

std::vector<std::uint64_t> FiltrationReport::dims() const {
  std::vector<std::uint64_t> out;
  for (const auto& lv : levels) out.push_back(lv.dim);
  return out;
}

FiltrationReport filtration_dims(const TruncatedSeries& f, std::uint32_t j_max, const GkOptions& opts) {
  if (f.body.is_zero()) throw InvalidArgument("filtration_dims: function is zero");
  if (!f.is_exact() && j_max + 1 > f.validity)
    throw InvalidArgument("filtration_dims: j_max must be at most validity - 1");
  const Field& fld = f.body.field();
  const std::uint32_t n = f.body.n();
  for (const auto& a : opts.annihilators) check_annihilator(a, f);

  const std::vector<OpMonomial> monos = op_monomials(n, j_max);
  std::vector<LinFun> images(monos.size(), LinFun(fld, n));
  parallel_for(monos.size(), opts.jobs,
               [&](std::size_t i) { images[i] = ring_apply(unit_monomial(fld, n, monos[i]), f.body); });

  FiltrationReport rep;
  rep.n = n;
  rep.q = fld.q();
  rep.truncation = f.order;
  rep.levels.resize(j_max + 1);
  parallel_for(j_max + 1, opts.jobs, [&](std::size_t jj) {
    const auto j = static_cast<std::uint32_t>(jj);
    FiltrationLevel& lv = rep.levels[j];
    lv.j = j;
    lv.window = f.validity - j;
    std::vector<LinFun> vecs;
    std::map<OpMonomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (monos[i].degree() <= j) {
        index.emplace(monos[i], vecs.size());
        vecs.push_back(images[i]);
      }
    ScalarMatrix relations;
    for (const auto& a : opts.annihilators) {
      if (a.degree() < 0 || a.degree() > j) continue;
      for (const auto& u : op_monomials(n, j - static_cast<std::uint32_t>(a.degree()))) {
        const RingElem r = unit_monomial(fld, n, u) * a;
        std::vector<PerfectRational> row(vecs.size(), PerfectRational(fld));
        for (const auto& [m, c] : r.terms()) row[index.at(m)] = c;
        relations.push_back(std::move(row));
      }
    }
    const ScalarMatrix rows = coefficient_matrix(vecs, lv.window);
    RankOptions ro = opts.rank;
    ro.seed = opts.rank.seed + j;
    lv.rank = matrix_rank(rows, ro, &relations);
    lv.dim = lv.rank.rank;
    lv.generators = vecs.size();
    lv.coordinates = rows.empty() ? 0 : rows[0].size();
    lv.saturated = !f.is_exact() && lv.dim == lv.coordinates && lv.generators > lv.coordinates;
  });
  for (const auto& lv : rep.levels)
    if (!lv.rank.certified)
      rep.warnings.push_back("level " + std::to_string(lv.j) + ": rank " + std::to_string(lv.dim) +
                             " from evaluation only, failure bound " + std::to_string(lv.rank.failure_bound));
  return rep;
}

HilbertFit hilbert_fit(const std::vector<std::uint64_t>& dims) {
  if (dims.size() < 3) throw NoStabilization("hilbert_fit: fewer than three values");
  std::vector<std::int64_t> diff(dims.begin(), dims.end());
  for (std::uint32_t d = 0; diff.size() >= 3; ++d) {
    const std::size_t len = diff.size();
    const std::int64_t last = diff.back();
    if (last != 0 && diff[len - 2] == last && diff[len - 3] == last) {
      std::size_t start = len - 3;
      while (start > 0 && diff[start - 1] == last) --start;
      HilbertFit h;
      h.degree = d;
      h.multiplicity = last;
      h.window = {static_cast<std::uint32_t>(start), static_cast<std::uint32_t>(dims.size() - 1)};
      return h;
    }
    std::vector<std::int64_t> next(len - 1);
    for (std::size_t i = 0; i + 1 < len; ++i) next[i] = diff[i + 1] - diff[i];
    diff = std::move(next);
  }
  throw NoStabilization("hilbert_fit: no order of differences is constant over the last three values");
}

FiltrationReport gk_dimension(const TruncatedSeries& f, std::uint32_t j_max, const GkOptions& opts) {
  FiltrationReport r = filtration_dims(f, j_max, opts);
  fit(r);
  return r;
}

FiltrationReport gk_report(const TruncatedSeries& f, std::uint32_t j_max, const GkOptions& opts) {
  FiltrationReport r = filtration_dims(f, j_max, opts);
  try {
    fit(r);
  } catch (const NoStabilization& e) {
    r.degree.reset();
    r.multiplicity.reset();
    r.classification = "unstable";
    r.warnings.push_back(e.what());
  }
  return r;
}

nlohmann::json to_json(const FiltrationReport& r) {
  nlohmann::json dims = nlohmann::json::array();
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lv : r.levels) {
    dims.push_back({lv.j, lv.dim});
    levels.push_back({{"j", lv.j},
                      {"dim", lv.dim},
                      {"generators", lv.generators},
                      {"coordinates", lv.coordinates},
                      {"coordinate_window", lv.window > TruncatedSeries::kUnbounded / 2 ? nlohmann::json(nullptr)
                                                                                         : nlohmann::json(lv.window)},
                      {"saturated", lv.saturated},
                      {"method", lv.rank.method},
                      {"certified", lv.rank.certified},
                      {"failure_bound", lv.rank.failure_bound}});
  }
  nlohmann::json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["dims"] = dims;
  j["degree"] = r.degree ? nlohmann::json(*r.degree) : nlohmann::json(nullptr);
  j["multiplicity"] = r.multiplicity ? nlohmann::json(*r.multiplicity) : nlohmann::json(nullptr);
  j["window"] = {r.window.first, r.window.second};
  j["truncation"] = r.truncation;
  j["classification"] = r.classification;
  j["warnings"] = r.warnings;
  j["levels"] = levels;
  return j;
}

std::uint64_t module_F_dims(std::uint32_t n, std::uint32_t j) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 1; i <= j; ++i) s += ipow_u64(i, n);
  return ipow_u64(j + 1, n) + s;
}

std::uint64_t module_F_dims_enumerated(std::uint32_t n, std::uint32_t j) {
  if (n == 0) return j + 1;
  std::vector<std::uint32_t> ks(n, 0);
  std::uint64_t count = 0;
  while (true) {
    count += *std::min_element(ks.begin(), ks.end()) + 1;  // choices of m
    std::size_t i = 0;
    while (i < n && ks[i] == j) ks[i++] = 0;
    if (i == n) return count;
    ++ks[i];
  }
}

MatrixModuleA1 MatrixModuleA1::make(const Field& f, std::uint32_t k, const std::vector<FqElem>& off_diagonal) {
  if (k == 0) throw InvalidArgument("MatrixModuleA1: k must be positive");
  if (off_diagonal.size() != static_cast<std::size_t>(k) * k)
    throw InvalidArgument("MatrixModuleA1: need k*k off-diagonal entries");
  MatrixModuleA1 m;
  m.k = k;
  const PerfectRational root = -PerfectRational::x(f).qth_root();
  m.lambda.assign(k, std::vector<PerfectRational>(k, PerfectRational(f)));
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      m.lambda[i][j] = i == j ? root : PerfectRational::constant(f, off_diagonal[i * k + j]);
  return m;
}

MatrixModuleA1 MatrixModuleA1::random(const Field& f, std::uint32_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  std::vector<FqElem> off(static_cast<std::size_t>(k) * k);
  for (auto& c : off) c = FqElem{static_cast<std::uint8_t>(pick(rng))};
  return make(f, k, off);
}

bool MatrixModuleA1::invariants_hold() const {
  const Field& f = field();
  const PerfectRational b1r = bracket(f, 1).qth_root();
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      const PerfectRational& c = lambda[i][j];
      if (i == j) {
        if (!(c.frobenius() - c + b1r).is_zero()) return false;
      } else if (!(c.is_constant() && c.is_polynomial())) {
        return false;
      }
    }
  return true;
}

std::vector<PerfectRational> MatrixModuleA1::tau(const std::vector<PerfectRational>& v) const {
  std::vector<PerfectRational> out;
  for (const auto& c : v) out.push_back(c.frobenius());
  return out;
}

std::vector<PerfectRational> MatrixModuleA1::ds(const std::vector<PerfectRational>& v) const {
  std::vector<PerfectRational> out(k, PerfectRational(field()));
  for (std::uint32_t j = 0; j < k; ++j) {
    if (v[j].is_zero()) continue;
    const PerfectRational r = v[j].qth_root();
    for (std::uint32_t i = 0; i < k; ++i) out[i] += r * lambda[i][j];
  }
  return out;
}

bool matrix_module_check(const MatrixModuleA1& mod, std::uint32_t trials, std::uint64_t seed) {
  const Field& f = mod.field();
  const PerfectRational b1r = bracket(f, 1).qth_root();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.q() - 1), small(0, 3);
  auto random_poly = [&] {
    const std::uint32_t level = small(rng) % 2;
    PerfectPoly p(f);
    for (std::uint32_t t = 0; t < 3; ++t)
      p = p + PerfectPoly::monomial(f, QExp(small(rng), level, f.q()), FqElem{static_cast<std::uint8_t>(coeff(rng))});
    return p;
  };
  for (std::uint32_t t = 0; t < trials; ++t) {
    std::vector<PerfectRational> v;
    for (std::uint32_t i = 0; i < mod.k; ++i) {
      PerfectPoly den = random_poly();
      if (den.is_zero() || small(rng) < 2) den = PerfectPoly::constant(f, f.one());
      v.emplace_back(random_poly(), den);
    }
    const auto lhs = mod.ds(mod.tau(v));
    const auto rhs = mod.tau(mod.ds(v));
    for (std::uint32_t i = 0; i < mod.k; ++i)
      if (lhs[i] - rhs[i] != b1r * v[i]) return false;
  }
  return true;
}

VacuumReport vacuum_eigencheck(const LinFun& f, std::uint32_t m_max, const RankOptions& opts) {
  VacuumReport r;
  const Field& fld = f.field();
  if (f.is_zero()) {
    r.precondition_detail = "function is zero";
    return r;
  }
  try {
    if (!apply_ds(f).is_zero()) {
      r.precondition_detail = "d_s f is nonzero";
      return r;
    }
  } catch (const MonomialEscape&) {
    r.precondition_detail = "d_s f leaves the function space";
    return r;
  }
  std::vector<LinFun> powers{f};  // tau^m f
  for (std::uint32_t m = 1; m <= m_max; ++m) powers.push_back(apply_tau(powers.back()));
  for (const auto& p : powers)
    if (p.is_zero()) {
      r.precondition_detail = "tau^m f vanishes";
      return r;
    }
  r.precondition = true;
  r.relation_holds = true;
  for (std::uint32_t m = 1; m <= m_max; ++m)
    if (apply_ds(powers[m]) != bracket(fld, m).qth_root() * powers[m - 1]) r.relation_holds = false;
  powers.pop_back();
  r.rank = exact_rank(powers, f.max_k() + m_max, opts);
  return r;
}

SupportProfile support_profile(const TruncatedSeries& f) {
  SupportProfile p;
  const std::uint32_t n = f.body.n();
  bool diagonal = true;
  std::uint32_t max_m = 0;
  for (const auto& [mono, c] : f.body.terms()) {
    p.by_m[mono.m].push_back(mono.ks);
    for (auto k : mono.ks) diagonal = diagonal && k == mono.m;
    max_m = std::max(max_m, mono.m);
  }
  p.size = f.body.size();
  if (p.size == 0) return p;
  p.diagonal_only = diagonal && n > 0;
  // Count in-shape monomials inside the window against the full triangle.
  const std::uint32_t w = n == 0 ? max_m : std::min(f.order, f.validity);
  std::uint64_t inside = 0;
  for (const auto& [mono, c] : f.body.terms())
    if (mono.in_F_shape() && mono.within(w) && (n > 0 || mono.m <= w)) ++inside;
  p.triangular = inside == module_F_dims_enumerated(n, w);
  return p;
}

Lemma2Report lemma2_rank_check(const TruncatedSeries& f, std::uint32_t Lambda, std::uint32_t J,
                               const RankOptions& opts) {
  if (!f.is_exact() && Lambda + J + 1 > f.validity)
    throw InvalidArgument("lemma2_rank_check: need Lambda + J <= validity - 1");
  const std::uint32_t n = f.body.n();
  std::vector<LinFun> family;
  std::vector<std::uint32_t> js(n, 0);
  while (true) {
    LinFun h = f.body;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t t = 0; t < js[i]; ++t) h = apply_delta(h, i + 1);
    for (std::uint32_t lam = 0; lam <= Lambda; ++lam) {
      family.push_back(h);
      h = apply_tau(apply_ds(h));
    }
    std::size_t i = 0;
    while (i < n && js[i] == J) js[i++] = 0;
    if (i == n) break;
    ++js[i];
  }
  Lemma2Report r;
  r.family = family.size();
  r.rank = exact_rank(family, f.validity - Lambda, opts);
  r.profile = support_profile(f);
  return r;
}

TruncatedSeries diagonal_compose(const LinFun& g) {
  if (g.n() != 0) throw InvalidArgument("diagonal_compose: g must be a polynomial in s alone");
  LinFun body(g.field(), 1);
  for (const auto& [mono, c] : g.terms()) body.add_term(LinMonomial{mono.m, {mono.m}}, c);
  return TruncatedSeries::exact(std::move(body));
}

LinFun parse_s_polynomial(const Field& f, const std::string& text) {
  // Split on '+' outside parentheses.
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
  };
  auto bad = [&](const std::string& why) { return InvalidArgument("polynomial '" + text + "': " + why); };
  LinFun out(f, 0);
  for (auto part : parts) {
    part = trim(part);
    if (part.empty()) throw bad("empty term");
    PerfectRational c = PerfectRational::one(f);
    depth = 0;
    std::size_t star = std::string::npos;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i] == '(') ++depth;
      if (part[i] == ')') --depth;
      if (part[i] == '*' && depth == 0) star = i;
    }
    std::string var = part;
    if (star != std::string::npos) {
      c = parse_element(f, trim(part.substr(0, star)));
      var = trim(part.substr(star + 1));
    }
    std::uint32_t m = 0;
    if (var == "s") {
      m = 0;
    } else if (var == "s^q") {
      m = 1;
    } else {
      std::string e;
      if (var.rfind("s^q^", 0) == 0) e = var.substr(4);
      else if (var.rfind("s^(q^", 0) == 0 && var.back() == ')') e = var.substr(5, var.size() - 6);
      else throw bad("unrecognized term '" + var + "'");
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw bad("exponent must be a non-negative integer");
      m = static_cast<std::uint32_t>(std::stoul(e));
    }
    out.add_term(LinMonomial{m, {}}, c);
  }
  return out;
}

GkFunction gk_function(const Field& f, const std::string& name, std::uint32_t T, const std::string& spec) {
  const PerfectRational one = PerfectRational::one(f);
  const PerfectRational b1r = bracket(f, 1).qth_root();
  auto ds_power = [&](std::uint32_t n, std::uint32_t e) {
    RingElem a = RingElem::scalar(f, n, one);
    for (std::uint32_t i = 0; i < e; ++i) a = a * RingElem::ds(f, n);
    return a;
  };
  auto max_m = [](const LinFun& g) {
    std::uint32_t m = 0;
    for (const auto& [mono, c] : g.terms()) m = std::max(m, mono.m);
    return m;
  };
  GkFunction g{name, TruncatedSeries{LinFun(f, 1), 0, 0}, {}};
  if (name == "carlitz") {
    g.series = carlitz_module_trunc(f, T);
    g.annihilators.push_back(RingElem::ds(f, 1) - RingElem::scalar(f, 1, one));
  } else if (name == "binom") {
    g.series = genfun_binom(f, T);
    g.annihilators.push_back(RingElem::ds(f, 1) - RingElem::delta(f, 1, 1) - RingElem::scalar(f, 1, b1r));
  } else if (name == "hyp") {
    g.series = genfun_hyp(f, 1, 0, T);
    g.annihilators.push_back(RingElem::ds(f, 1) - RingElem::scalar(f, 1, one));
  } else if (name == "diag") {
    const LinFun e2 = carlitz_e(f, 2);
    g.series = diagonal_compose(e2);
    g.annihilators.push_back(RingElem::delta(f, 1, 1) - RingElem::tau(f, 1) * RingElem::ds(f, 1));
    g.annihilators.push_back(ds_power(1, max_m(e2) + 1));
  } else if (name == "sum") {
    g.series = carlitz_module_trunc(f, T);
    g.series.body += genfun_binom(f, T).body;
  } else if (name == "poly") {
    const LinFun p = parse_s_polynomial(f, spec.empty() ? "s^q" : spec);
    if (p.is_zero()) throw InvalidArgument("poly: polynomial is zero");
    g.series = TruncatedSeries::exact(p);
    g.series.order = T;
    g.annihilators.push_back(ds_power(0, max_m(p) + 1));
  } else {
    throw InvalidArgument("unknown function '" + name + "'");
  }
  return g;
}

}  // namespace carlitz
