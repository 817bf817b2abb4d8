#include "carlitz/special.hpp"

#include <mutex>

#include "carlitz/errors.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

namespace {

std::size_t qpow(std::uint32_t q, std::uint32_t e) { return static_cast<std::size_t>(ipow_checked(q, e)); }

// p * (y^a - y^b), a > b.
FqPoly times_binomial(const Field& f, const FqPoly& p, std::size_t a, std::size_t b) {
  const auto& c = p.coeffs();
  std::vector<std::uint8_t> out(c.size() + a, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out[i + a] = f.add(out[i + a], c[i]);
    out[i + b] = f.sub(out[i + b], c[i]);
  }
  return FqPoly(f, std::move(out));
}

// p / (y^a - y^b), a > b; throws if the division is not exact.
FqPoly div_binomial(const Field& f, const FqPoly& p, std::size_t a, std::size_t b) {
  const auto& c = p.coeffs();
  if (p.is_zero()) return p;
  if (p.low_degree() < b || c.size() <= a) throw Error("div_binomial: not divisible");
  // p = y^b * Q * (y^d - 1).
  const std::size_t d = a - b;
  const std::size_t nr = c.size() - b;
  std::vector<std::uint8_t> q(nr - d, 0);
  for (std::size_t i = nr - d; i-- > 0;) {
    std::uint8_t v = c[b + i + d];
    if (i + d < q.size()) v = f.add(v, q[i + d]);
    q[i] = v;
  }
  for (std::size_t i = 0; i < d; ++i) {
    const std::uint8_t qi = i < q.size() ? q[i] : 0;
    if (f.add(c[b + i], qi) != 0) throw Error("div_binomial: not divisible");
  }
  return FqPoly(f, std::move(q));
}

FqPoly one_poly(const Field& f) { return FqPoly::constant(f, f.one()); }

// prod_{j<count} (y^{q^top} - y^{q^j}).
FqPoly binomial_product(const Field& f, std::uint32_t top, std::uint32_t count) {
  FqPoly p = one_poly(f);
  const std::size_t a = qpow(f.q(), top);
  for (std::uint32_t j = 0; j < count; ++j) p = times_binomial(f, p, a, qpow(f.q(), j));
  return p;
}

PerfectRational sign(const Field& f, std::int64_t e) {
  return PerfectRational::from_int(f, (e % 2 == 0) ? 1 : -1);
}

}  // namespace

// ---- CarlitzCache ----------------------------------------------------------

CarlitzCache& CarlitzCache::of(const Field& f) {
  static std::mutex mu;
  static std::map<FieldConfig, std::unique_ptr<CarlitzCache>> caches;
  std::lock_guard lock(mu);
  auto& slot = caches[f.config()];
  if (!slot) slot = std::make_unique<CarlitzCache>(f);
  return *slot;
}

template <class Key, class Value, class Make>
const Value& CarlitzCache::memo(std::map<Key, Value>& table, const Key& key, Make&& make) {
  {
    std::shared_lock lock(mu_);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  Value v = make();
  std::unique_lock lock(mu_);
  return table.emplace(key, std::move(v)).first->second;
}

const PerfectRational& CarlitzCache::dfac(std::uint32_t i) {
  // D_i = prod_{j<i} (x^{q^i} - x^{q^j}).
  return memo(dfac_, i, [&] { return PerfectRational(PerfectPoly(binomial_product(*f_, i, i), 0)); });
}

const PerfectRational& CarlitzCache::lfac(std::uint32_t i) {
  return memo(lfac_, i, [&] {
    if (i == 0) return PerfectRational::one(*f_);
    return lfac(i - 1) * bracket(*f_, i);
  });
}

const PerfectRational& CarlitzCache::dfac_qm1(std::uint32_t i) {
  return memo(dfac_qm1_, i, [&] { return dfac(i).pow(f_->q() - 1); });
}

const LinFun& CarlitzCache::e(std::uint32_t k) {
  return memo(e_, k, [&] {
    if (k == 0) return LinFun::s_power(*f_, 0, PerfectRational::one(*f_));
    const LinFun& prev = e(k - 1);
    return apply_tau(prev) - dfac_qm1(k - 1) * prev;
  });
}

const PerfectRational& CarlitzCache::binom(std::uint32_t k, std::uint32_t m) {
  return memo(binom_, std::pair{k, m}, [&] {
    // D_k / D_{k-m}^{q^m} and D_m are both m-fold products of binomials.
    FqPoly p = binomial_product(*f_, k, m);
    const std::size_t a = qpow(f_->q(), m);
    for (std::uint32_t j = 0; j < m; ++j) p = div_binomial(*f_, p, a, qpow(f_->q(), j));
    return PerfectRational(PerfectPoly(std::move(p), 0));
  });
}

// ---- factorials and Carlitz polynomials ----------------------------------

PerfectRational dfac(const Field& f, std::uint32_t i) { return CarlitzCache::of(f).dfac(i); }

PerfectRational lfac(const Field& f, std::uint32_t i) { return CarlitzCache::of(f).lfac(i); }

LinFun carlitz_e(const Field& f, std::uint32_t k) { return CarlitzCache::of(f).e(k); }

LinFun carlitz_f(const Field& f, std::uint32_t k) {
  auto& cache = CarlitzCache::of(f);
  LinFun out(f, 0);
  for (std::uint32_t i = 0; i <= k; ++i) {
    const PerfectRational den = cache.dfac(i) * cache.lfac(k - i).q_power(i);
    out.add_term(LinMonomial{i, {}}, sign(f, k - i) / den);
  }
  return out;
}

PerfectRational binomK(const Field& f, std::int64_t k, std::int64_t m) {
  if (m < 0 || k < 0 || m > k) return PerfectRational(f);
  return CarlitzCache::of(f).binom(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m));
}

PerfectRational binomK_from_factorials(const Field& f, std::uint32_t k, std::uint32_t m) {
  if (m > k) return PerfectRational(f);
  auto& cache = CarlitzCache::of(f);
  return cache.dfac(k) / (cache.dfac(m) * cache.dfac(k - m).q_power(m));
}

// ---- identities -----------------------------------------------------------

bool pascal_check(const Field& f, std::uint32_t k, std::uint32_t m, bool perturb) {
  if (m > k) throw InvalidArgument("pascal_check: need m <= k");
  if (k == 0) return !perturb;  // only binom(0,0) = 1; no k-1 row
  const std::int64_t K = k, M = m;
  PerfectRational rhs = binomK(f, K - 1, M - 1).frobenius() +
                        binomK(f, K - 1, M).frobenius() * CarlitzCache::of(f).dfac_qm1(m);
  if (perturb) rhs += PerfectRational::one(f);
  return binomK(f, K, M) == rhs;
}

PerfectRational VandermondeTable::at(const Field& f, std::int64_t l, std::int64_t i) const {
  if (l < 0 || i < 0 || i > l || static_cast<std::size_t>(l) >= c.size()) return PerfectRational(f);
  return c[l][i];
}

VandermondeTable vandermonde_table(const Field& f, std::uint32_t m, VandermondeRule rule) {
  auto& cache = CarlitzCache::of(f);
  VandermondeTable t;
  t.m = m;
  t.c.push_back({PerfectRational::one(f)});
  for (std::uint32_t l = 0; l < m; ++l) {
    std::vector<PerfectRational> row;
    for (std::int64_t i = 0; i <= l + 1; ++i) {
      PerfectRational v = t.at(f, l, i - 1);
      if (i <= l) {
        PerfectRational d = cache.dfac_qm1(m - static_cast<std::uint32_t>(i));
        if (rule == VandermondeRule::kInduction) d = d.q_power(l);
        v += t.at(f, l, i) * d;
      }
      row.push_back(std::move(v));
    }
    t.c.push_back(std::move(row));
  }
  return t;
}

bool vandermonde_check(const Field& f, std::uint32_t k, std::uint32_t m, std::uint32_t l, bool perturb) {
  if (!(l <= m && m <= k)) throw InvalidArgument("vandermonde_check: need l <= m <= k");
  const VandermondeTable t = vandermonde_table(f, m);
  PerfectRational rhs(f);
  for (std::uint32_t i = 0; i <= l; ++i)
    rhs += t.at(f, l, i) * binomK(f, static_cast<std::int64_t>(k) - l, static_cast<std::int64_t>(m) - i).q_power(l);
  if (perturb) rhs += PerfectRational::one(f);
  return binomK(f, k, m) == rhs;
}

bool kbinom_identity_check(const Field& f, std::uint32_t k, const PerfectRational& s_val,
                           const PerfectRational& t_val, bool perturb) {
  auto& cache = CarlitzCache::of(f);
  const PerfectRational lhs = evaluate(cache.e(k), s_val * t_val);
  PerfectRational rhs(f);
  for (std::uint32_t m = 0; m <= k; ++m)
    rhs += cache.binom(k, m) * evaluate(cache.e(m), s_val) * evaluate(cache.e(k - m), t_val).q_power(m);
  if (perturb) rhs += PerfectRational::one(f);
  return lhs == rhs;
}

bool dfac_binom_identity_check(const Field& f, std::uint32_t k, std::uint32_t i) {
  if (!(i < k)) throw InvalidArgument("dfac_binom_identity_check: need i < k");
  auto& cache = CarlitzCache::of(f);
  const PerfectRational& b = cache.binom(k - 1, i);
  const PerfectRational lhs = b.frobenius() * cache.dfac_qm1(i) * cache.dfac_qm1(k - i - 1).q_power(i);
  return lhs == cache.dfac_qm1(k - 1) * b;
}

// ---- hypergeometric polynomials ------------------------------------------

PerfectRational pochhammer_neg(const Field& f, std::uint32_t a, std::uint32_t m) {
  if (m > a) return PerfectRational(f);
  return sign(f, a - m) / CarlitzCache::of(f).lfac(a - m).q_power(m);
}

LinFun thakur_hyp(const Field& f, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                  std::optional<std::uint32_t> cap) {
  std::optional<std::uint32_t> top = cap;
  for (auto v : a) top = top ? std::min(*top, v) : v;
  for (auto v : b) top = top ? std::min(*top, v) : v;
  if (!top) throw InvalidArgument("thakur_hyp: no parameters and no truncation bound");
  auto& cache = CarlitzCache::of(f);
  LinFun out(f, 0);
  for (std::uint32_t m = 0; m <= *top; ++m) {
    PerfectRational num = PerfectRational::one(f);
    PerfectRational den = cache.dfac(m);
    for (auto v : a) num *= pochhammer_neg(f, v, m);
    for (auto v : b) den *= pochhammer_neg(f, v, m);
    out.add_term(LinMonomial{m, {}}, num / den);
  }
  return out;
}

bool contiguous_check(const Field& f, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                      bool perturb) {
  std::optional<std::uint32_t> cap;
  if (a.empty() && b.empty()) throw InvalidArgument("contiguous_check: need at least one parameter");
  const LinFun lhs = apply_ds(thakur_hyp(f, a, b, cap));
  bool any_zero = false;
  for (auto v : a) any_zero = any_zero || v == 0;
  for (auto v : b) any_zero = any_zero || v == 0;
  LinFun rhs(f, 0);
  if (!any_zero) {
    std::vector<std::uint32_t> a1 = a, b1 = b;
    for (auto& v : a1) --v;
    for (auto& v : b1) --v;
    rhs = thakur_hyp(f, a1, b1, cap);
  }
  if (perturb) rhs.add_term(LinMonomial{0, {}}, PerfectRational::one(f));
  return lhs == rhs;
}

// ---- generating series ----------------------------------------------------

TruncatedSeries carlitz_module_trunc(const Field& f, std::uint32_t T) {
  LinFun body(f, 1);
  for (std::uint32_t k = 0; k <= T; ++k) {
    const LinFun fk = carlitz_f(f, k);
    for (const auto& [mono, c] : fk.terms()) body.add_term(LinMonomial{mono.m, {k}}, c);
  }
  return TruncatedSeries{std::move(body), T, T};
}

TruncatedSeries genfun_binom(const Field& f, std::uint32_t T) {
  LinFun body(f, 1);
  for (std::uint32_t k = 0; k <= T; ++k)
    for (std::uint32_t m = 0; m <= k; ++m) body.add_term(LinMonomial{m, {k}}, binomK(f, k, m));
  return TruncatedSeries{std::move(body), T, T};
}

TruncatedSeries genfun_hyp(const Field& f, std::uint32_t l, std::uint32_t lambda, std::uint32_t T) {
  const std::uint32_t n = l + lambda;
  if (n == 0) throw InvalidArgument("genfun_hyp: need l + lambda >= 1");
  LinFun body(f, n);
  std::vector<std::uint32_t> idx(n, 0);
  while (true) {
    const std::vector<std::uint32_t> a(idx.begin(), idx.begin() + l);
    const std::vector<std::uint32_t> b(idx.begin() + l, idx.end());
    const LinFun h = thakur_hyp(f, a, b);
    for (const auto& [mono, c] : h.terms()) body.add_term(LinMonomial{mono.m, idx}, c);
    std::size_t j = 0;
    while (j < n && idx[j] == T) idx[j++] = 0;
    if (j == n) break;
    ++idx[j];
  }
  return TruncatedSeries{std::move(body), T, T};
}

PdeReport pde_check(const TruncatedSeries& f) {
  const Field& fld = f.body.field();
  PdeReport r;
  const TruncatedSeries lhs = apply_ds(f);
  TruncatedSeries rhs = apply_delta(f, 1);
  rhs.body += bracket(fld, 1).qth_root() * f.body;
  const SeriesComparison cmp = series_compare(lhs, rhs);
  r.holds = cmp.equal;
  r.window = cmp.window;
  r.witness = cmp.witness;
  r.splitting_holds = true;
  const PerfectRational b1r = bracket(fld, 1).qth_root();
  for (std::uint32_t k = 1; k <= f.order; ++k)
    r.splitting_holds = r.splitting_holds && bracket(fld, k).qth_root() == bracket(fld, k - 1) + b1r;
  return r;
}

PdeReport pde_check_binom(const Field& f, std::uint32_t T, bool perturb) {
  if (T < 2) throw InvalidArgument("pde_check_binom: need T >= 2");
  TruncatedSeries g = genfun_binom(f, T);
  if (perturb) g.body.add_term(LinMonomial{1, {2}}, PerfectRational::one(f));
  return pde_check(g);
}

// ---- integrality at every place ------------------------------------------

std::uint64_t dfac_valuation_closed_form(std::uint32_t q, std::uint32_t m, std::uint32_t delta) {
  const std::uint32_t j = m / delta, i = m % delta;
  const auto qd = static_cast<std::uint64_t>(ipow_checked(q, delta));
  const auto qjd = static_cast<std::uint64_t>(ipow_checked(q, j * delta));
  return static_cast<std::uint64_t>(ipow_checked(q, i)) * ((qjd - 1) / (qd - 1));
}

IntegralityReport place_integrality_sweep(const Field& f, std::uint32_t k_max, std::uint32_t delta_max,
                                          bool perturb, unsigned jobs) {
  IntegralityReport rep;
  std::vector<Place> places;
  for (std::uint32_t d = 1; d <= delta_max; ++d)
    for (auto& p : irreducibles(f, d)) places.push_back(std::move(p));
  rep.places = static_cast<std::uint32_t>(places.size());

  // Warm the cache sequentially so workers only read.
  auto& cache = CarlitzCache::of(f);
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    cache.dfac(k);
    for (std::uint32_t m = 0; m <= k; ++m) cache.binom(k, m);
  }

  std::vector<IntegralityReport> parts(places.size());
  parallel_for(places.size(), jobs, [&](std::size_t pi) {
    const Place& place = places[pi];
    IntegralityReport& out = parts[pi];
    const std::string name = place.to_string();
    const PerfectRational shift =
        perturb ? PerfectRational(PerfectPoly::constant(f, f.one()), PerfectPoly(place.pi, 0)) : PerfectRational::one(f);
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      for (std::uint32_t m = 0; m <= k; ++m) {
        ++out.binom_checks;
        const auto v = valuation(cache.binom(k, m) * shift, place);
        if (v && *v < QExp(0, 0, f.q()))
          out.violations.push_back({name, k, m, "v(binomK) = " + v->to_string()});
      }
      ++out.closed_form_checks;
      const auto v = valuation(cache.dfac(k), place);
      const auto expect = dfac_valuation_closed_form(f.q(), k, place.delta);
      if (!v || *v != QExp(static_cast<std::int64_t>(expect), 0, f.q()))
        out.violations.push_back({name, k, k,
                                  "v(D_m) = " + (v ? v->to_string() : std::string("inf")) +
                                      ", closed form " + std::to_string(expect)});
    }
  });
  for (auto& p : parts) {
    rep.binom_checks += p.binom_checks;
    rep.closed_form_checks += p.closed_form_checks;
    for (auto& v : p.violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

}  // namespace carlitz
