#include "carlitz_cli/sweeps.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <sstream>

#include "carlitz/element_io.hpp"
#include "carlitz/linfun.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/ring.hpp"
#include "carlitz/special.hpp"

namespace carlitz::cli {

namespace {

// Raw engine output reduced by modulus, so draws do not depend on the
// standard library's distribution algorithms.
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  std::uint8_t elem(const Field& f) { return static_cast<std::uint8_t>(below(f.q())); }
  std::uint8_t nonzero_elem(const Field& f) { return static_cast<std::uint8_t>(1 + below(f.q() - 1)); }

  PerfectRational x_poly(const Field& f, std::uint32_t max_deg) {
    std::vector<std::uint8_t> c(max_deg + 1);
    for (auto& v : c) v = elem(f);
    return PerfectRational(PerfectPoly(FqPoly(f, std::move(c)), 0));
  }

  /// Nonzero sparse polynomial in x^{1/q^e}, e <= 1, sometimes divided by
  /// another.
  PerfectRational coefficient(const Field& f) {
    auto poly = [&] {
      const auto level = static_cast<std::uint32_t>(below(2));
      PerfectPoly p(f);
      while (p.is_zero()) {
        for (std::uint64_t t = 0, terms = 1 + below(3); t < terms; ++t)
          p = p + PerfectPoly::monomial(f, QExp(static_cast<std::int64_t>(below(5)), level, f.q()),
                                        FqElem{nonzero_elem(f)});
      }
      return p;
    };
    if (coin(2, 3)) return PerfectRational(poly());
    return PerfectRational(poly(), poly());
  }

  RingElem ring_elem(const Field& f, std::uint32_t n, std::uint32_t max_deg, bool nonzero) {
    while (true) {
      RingElem a(f, n);
      for (std::uint64_t t = 0, terms = 1 + below(3); t < terms; ++t) {
        std::vector<std::uint32_t> e(n + 2, 0);
        for (auto budget = below(max_deg + 1); budget > 0; --budget) ++e[below(n + 2)];
        a.add_term(OpMonomial{e[0], e[1], std::vector<std::uint32_t>(e.begin() + 2, e.end())}, coefficient(f));
      }
      if (!nonzero || !a.is_zero()) return a;
    }
  }

  /// F-shaped function (m <= min k) with k-degrees <= max_k.
  LinFun linfun(const Field& f, std::uint32_t n, std::uint32_t max_k) {
    LinFun g(f, n);
    for (std::uint64_t t = 0, terms = 1 + below(4); t < terms; ++t) {
      LinMonomial mono;
      std::uint32_t min_k = max_k;
      for (std::uint32_t j = 0; j < n; ++j) {
        mono.ks.push_back(static_cast<std::uint32_t>(below(max_k + 1)));
        min_k = std::min(min_k, mono.ks.back());
      }
      mono.m = static_cast<std::uint32_t>(below(min_k + 1));
      g.add_term(mono, coefficient(f));
    }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

SweepResult start(const char* name, const Field& f) {
  SweepResult r;
  r.name = name;
  r.q = f.q();
  return r;
}

// Runs `count` checks in parallel; check(i) returns a failure description or
// nothing. Failures are collected in index order.
template <class Check>
void run_checks(SweepResult& r, std::size_t count, unsigned jobs, Check&& check) {
  std::vector<std::optional<std::string>> slots(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    try {
      slots[i] = check(i);
    } catch (const std::exception& e) {
      slots[i] = std::string("error: ") + e.what();
    }
  });
  r.checks += count;
  for (auto& s : slots)
    if (s) r.failures.push_back(std::move(*s));
}

std::string describe_witness(const std::optional<LinMonomial>& w) {
  return w ? " at " + to_string(*w) : std::string();
}

}  // namespace

void SweepResult::merge(const SweepResult& o) {
  checks += o.checks;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

nlohmann::json to_json(const SweepResult& r) {
  return {{"check", r.name}, {"q", r.q}, {"checks", r.checks}, {"pass", r.ok()}, {"failures", r.failures}};
}

SweepResult sweep_pascal(const Field& f, std::uint32_t k_max, bool perturb, unsigned jobs) {
  SweepResult r = start("pascal", f);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cases;
  for (std::uint32_t k = 0; k <= k_max; ++k)
    for (std::uint32_t m = 0; m <= k; ++m) cases.emplace_back(k, m);
  run_checks(r, cases.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto [k, m] = cases[i];
    if (pascal_check(f, k, m, perturb)) return std::nullopt;
    return "pascal k=" + std::to_string(k) + " m=" + std::to_string(m);
  });
  return r;
}

SweepResult sweep_vandermonde(const Field& f, std::uint32_t k_max, bool perturb, unsigned jobs) {
  SweepResult r = start("vandermonde", f);
  std::vector<std::array<std::uint32_t, 3>> cases;
  for (std::uint32_t k = 0; k <= k_max; ++k)
    for (std::uint32_t m = 0; m <= k; ++m)
      for (std::uint32_t l = 0; l <= m; ++l) cases.push_back({k, m, l});
  run_checks(r, cases.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto [k, m, l] = cases[i];
    if (vandermonde_check(f, k, m, l, perturb)) return std::nullopt;
    return "vandermonde k=" + std::to_string(k) + " m=" + std::to_string(m) + " l=" + std::to_string(l);
  });
  return r;
}

SweepResult sweep_kbinom(const Field& f, std::uint32_t k_max, std::uint32_t pairs, std::uint32_t max_deg,
                         std::uint64_t seed, bool perturb, unsigned jobs) {
  SweepResult r = start("kbinom", f);
  Rand rand(seed);
  std::vector<std::pair<PerfectRational, PerfectRational>> args;
  for (std::uint32_t i = 0; i < pairs; ++i) {
    PerfectRational s = rand.x_poly(f, max_deg);
    PerfectRational t = rand.x_poly(f, max_deg);
    args.emplace_back(std::move(s), std::move(t));
  }
  const std::size_t per_pair = k_max + 1;
  run_checks(r, args.size() * per_pair, jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto& [s, t] = args[i / per_pair];
    const auto k = static_cast<std::uint32_t>(i % per_pair);
    if (kbinom_identity_check(f, k, s, t, perturb)) return std::nullopt;
    return "kbinom k=" + std::to_string(k) + " s=" + to_text(s) + " t=" + to_text(t);
  });
  return r;
}

SweepResult sweep_pde(const Field& f, std::uint32_t T, bool perturb) {
  SweepResult r = start("pde", f);
  const LinFun stray = LinFun::s_power(f, 0, PerfectRational::one(f));

  const PdeReport binom = pde_check_binom(f, T, perturb);
  ++r.checks;
  if (!binom.holds || !binom.splitting_holds)
    r.failures.push_back("binomial series PDE, T=" + std::to_string(T) + describe_witness(binom.witness));

  const TruncatedSeries c = carlitz_module_trunc(f, T);
  TruncatedSeries expect = c;
  if (perturb) {
    LinFun bump(f, 1);
    bump.add_term(LinMonomial{0, {0}}, PerfectRational::one(f));
    expect.body += bump;
  }
  const SeriesComparison cmp = series_compare(apply_ds(c), expect);
  ++r.checks;
  if (!cmp.equal) r.failures.push_back("d_s C != C, T=" + std::to_string(T) + describe_witness(cmp.witness));

  for (std::uint32_t i = 1; i <= T; ++i) {
    ++r.checks;
    const LinFun want = perturb ? carlitz_f(f, i - 1) + stray : carlitz_f(f, i - 1);
    if (apply_ds(carlitz_f(f, i)) != want) r.failures.push_back("d_s f_i != f_{i-1}, i=" + std::to_string(i));
  }
  return r;
}

SweepResult sweep_contiguous(const Field& f, std::uint32_t p_max, bool perturb, unsigned jobs) {
  SweepResult r = start("contiguous", f);
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> cases;
  for (std::uint32_t a = 0; a <= p_max; ++a) {
    cases.push_back({{a}, {}});
    cases.push_back({{}, {a}});
    for (std::uint32_t b = 0; b <= p_max; ++b) cases.push_back({{a}, {b}});
  }
  auto list = [](const std::vector<std::uint32_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  run_checks(r, cases.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto& [a, b] = cases[i];
    if (contiguous_check(f, a, b, perturb)) return std::nullopt;
    return "contiguous a=" + list(a) + " b=" + list(b);
  });
  return r;
}

SweepResult sweep_places(const Field& f, std::uint32_t k_max, std::uint32_t delta_max, bool perturb,
                         unsigned jobs) {
  SweepResult r = start("places", f);
  const IntegralityReport rep = place_integrality_sweep(f, k_max, delta_max, perturb, jobs);
  r.checks = rep.binom_checks + rep.closed_form_checks;
  for (const auto& v : rep.violations) {
    std::ostringstream os;
    os << "place " << v.place << " k=" << v.k << " m=" << v.m << ": " << v.detail;
    r.failures.push_back(os.str());
  }
  return r;
}

SweepResult sweep_ring(const Field& f, const RingSweepOptions& opts, bool perturb, unsigned jobs) {
  SweepResult r = start("ring", f);
  Rand rand(opts.seed);

  struct Case {
    RingElem a, b, c;
    LinFun g;
  };
  std::vector<Case> cases;
  for (std::uint32_t i = 0; i < opts.elements; ++i) {
    const std::uint32_t n = i % (opts.max_n + 1);
    RingElem a = rand.ring_elem(f, n, opts.max_degree, false);
    RingElem b = rand.ring_elem(f, n, opts.max_degree, false);
    RingElem c = rand.ring_elem(f, n, opts.max_degree, false);
    LinFun g = rand.linfun(f, n, opts.max_degree + 1);
    cases.push_back({std::move(a), std::move(b), std::move(c), std::move(g)});
  }
  run_checks(r, cases.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const Case& cs = cases[i];
    RingElem right = cs.a * (cs.b * cs.c);
    if (perturb) right += RingElem::scalar(f, cs.a.n(), PerfectRational::one(f));
    if ((cs.a * cs.b) * cs.c != right) return "associativity, case " + std::to_string(i) + ": a=" + to_text(cs.a);
    if (ring_apply(cs.a * cs.b, cs.g) != ring_apply(cs.a, ring_apply(cs.b, cs.g)))
      return "apply-compatibility, case " + std::to_string(i) + ": a=" + to_text(cs.a);
    return std::nullopt;
  });

  std::vector<RingElem> probes;
  for (std::uint32_t i = 0; i < opts.probes; ++i)
    probes.push_back(rand.ring_elem(f, i % (opts.max_n + 1), opts.max_degree, true));
  run_checks(r, probes.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    if (probe_independence(probes[i], opts.probe_bound)) return std::nullopt;
    return "no probe witness for " + to_text(probes[i]);
  });
  return r;
}

}  // namespace carlitz::cli
