#include "carlitz/ring.hpp"

#include <numeric>

#include "carlitz/element_io.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

// All r with 0 <= r_j <= i_j.
template <class Fn>
void for_each_below(const std::vector<std::uint32_t>& is, Fn&& fn) {
  std::vector<std::uint32_t> r(is.size(), 0);
  while (true) {
    fn(r);
    std::size_t j = 0;
    while (j < r.size() && r[j] == is[j]) r[j++] = 0;
    if (j == r.size()) return;
    ++r[j];
  }
}

// prod_j binom(i_j, r_j) * (sign * base)^{sum(i_j - r_j)}.
PerfectRational expansion_coeff(const Field& f, const std::vector<std::uint32_t>& is,
                                const std::vector<std::uint32_t>& r, const PerfectRational& base, bool negate) {
  std::uint32_t c = 1;
  std::uint32_t excess = 0;
  for (std::size_t j = 0; j < is.size(); ++j) {
    c = c * binom_mod(is[j], r[j], f.p()) % f.p();
    excess += is[j] - r[j];
  }
  if (c == 0) return PerfectRational(f);
  PerfectRational s = PerfectRational::from_int(f, c) * base.pow(excess);
  if (negate && excess % 2 == 1) s = -s;
  return s;
}

// this * Delta_j.
RingElem right_delta(const RingElem& a, std::uint32_t j) {
  RingElem out(a.field(), a.n());
  for (const auto& [mono, c] : a.terms()) {
    OpMonomial m2 = mono;
    ++m2.is[j];
    out.add_term(m2, c);
  }
  return out;
}

// this * d_s, from Delta_j d_s = d_s (Delta_j - [1]).
RingElem right_ds(const RingElem& a) {
  const Field& f = a.field();
  const PerfectRational b1 = bracket(f, 1);
  RingElem out(f, a.n());
  for (const auto& [mono, c] : a.terms()) {
    const std::int64_t shift = static_cast<std::int64_t>(mono.l) - mono.mu - 1;
    for_each_below(mono.is, [&](const std::vector<std::uint32_t>& r) {
      const PerfectRational s = expansion_coeff(f, mono.is, r, b1, true);
      if (s.is_zero()) return;
      out.add_term(OpMonomial{mono.l, mono.mu + 1, r}, c * s.q_power(shift));
    });
  }
  return out;
}

// this * tau, from Delta_j tau = tau (Delta_j + [1]^{1/q}) and
// d_s^mu tau = tau d_s^mu + [mu]^{1/q^mu} d_s^{mu-1}.
RingElem right_tau(const RingElem& a) {
  const Field& f = a.field();
  const PerfectRational b1r = bracket(f, 1).qth_root();
  RingElem out(f, a.n());
  for (const auto& [mono, c] : a.terms()) {
    const std::int64_t l = mono.l, mu = mono.mu;
    for_each_below(mono.is, [&](const std::vector<std::uint32_t>& r) {
      const PerfectRational s = expansion_coeff(f, mono.is, r, b1r, false);
      if (s.is_zero()) return;
      out.add_term(OpMonomial{mono.l + 1, mono.mu, r}, c * s.q_power(l + 1 - mu));
      if (mu >= 1) {
        const PerfectRational lower = bracket(f, mono.mu).q_power(l - mu) * s.q_power(l - mu + 1);
        out.add_term(OpMonomial{mono.l, mono.mu - 1, r}, c * lower);
      }
    });
  }
  return out;
}

// Monomial product m1 * m2 with unit coefficients.
RingElem monomial_product(const Field& f, std::uint32_t n, const OpMonomial& m1, const OpMonomial& m2) {
  RingElem acc = RingElem::monomial(f, n, m1, PerfectRational::one(f));
  for (std::uint32_t i = 0; i < m2.l; ++i) acc = right_tau(acc);
  for (std::uint32_t i = 0; i < m2.mu; ++i) acc = right_ds(acc);
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t i = 0; i < m2.is[j]; ++i) acc = right_delta(acc, j);
  return acc;
}

}  // namespace

std::uint32_t binom_mod(std::uint32_t n, std::uint32_t r, std::uint32_t p) {
  // Lucas' theorem digit by digit.
  std::uint32_t result = 1;
  while (n || r) {
    const std::uint32_t nd = n % p, rd = r % p;
    if (rd > nd) return 0;
    std::uint64_t c = 1;
    for (std::uint32_t i = 0; i < rd; ++i) c = c * (nd - i) / (i + 1);
    result = static_cast<std::uint32_t>(result * (c % p) % p);
    n /= p;
    r /= p;
  }
  return result;
}

std::uint32_t OpMonomial::degree() const { return std::accumulate(is.begin(), is.end(), l + mu); }

RingElem RingElem::scalar(const Field& f, std::uint32_t n, const PerfectRational& c) {
  return monomial(f, n, OpMonomial{0, 0, std::vector<std::uint32_t>(n, 0)}, c);
}

RingElem RingElem::monomial(const Field& f, std::uint32_t n, OpMonomial mono, const PerfectRational& c) {
  RingElem r(f, n);
  r.add_term(mono, c);
  return r;
}

RingElem RingElem::tau(const Field& f, std::uint32_t n) {
  return monomial(f, n, OpMonomial{1, 0, std::vector<std::uint32_t>(n, 0)}, PerfectRational::one(f));
}

RingElem RingElem::ds(const Field& f, std::uint32_t n) {
  return monomial(f, n, OpMonomial{0, 1, std::vector<std::uint32_t>(n, 0)}, PerfectRational::one(f));
}

RingElem RingElem::delta(const Field& f, std::uint32_t n, std::uint32_t j) {
  if (j < 1 || j > n) throw InvalidArgument("RingElem::delta: index out of range");
  std::vector<std::uint32_t> is(n, 0);
  is[j - 1] = 1;
  return monomial(f, n, OpMonomial{0, 0, is}, PerfectRational::one(f));
}

std::int64_t RingElem::degree() const {
  std::int64_t d = -1;
  for (const auto& [mono, c] : terms_) d = std::max<std::int64_t>(d, mono.degree());
  return d;
}

void RingElem::add_term(const OpMonomial& mono, const PerfectRational& c) {
  if (mono.is.size() != n_) throw InvalidArgument("RingElem: monomial arity does not match n");
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void RingElem::check_compatible(const RingElem& o) const {
  if (o.n_ != n_) throw InvalidArgument("RingElem: variable counts differ");
  if (o.f_->config() != f_->config()) throw InvalidArgument("RingElem: fields differ");
}

RingElem& RingElem::operator+=(const RingElem& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem r(*f_, n_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono, -c);
  return r;
}

RingElem operator*(const PerfectRational& c, const RingElem& a) {
  RingElem r(a.field(), a.n());
  if (c.is_zero()) return r;
  for (const auto& [mono, v] : a.terms()) r.add_term(mono, c * v);
  return r;
}

RingElem operator*(const RingElem& a, const RingElem& b) { return ring_mul(a, b); }

RingElem ring_mul(const RingElem& a, const RingElem& b) {
  if (a.n() != b.n()) throw InvalidArgument("ring_mul: variable counts differ");
  const Field& f = a.field();
  RingElem out(f, a.n());
  for (const auto& [m1, c1] : a.terms()) {
    // c1 m1 c2 m2 = c1 c2^{q^{l1 - mu1}} (m1 m2).
    const std::int64_t shift = static_cast<std::int64_t>(m1.l) - m1.mu;
    for (const auto& [m2, c2] : b.terms()) {
      const PerfectRational c = c1 * c2.q_power(shift);
      const RingElem prod = monomial_product(f, a.n(), m1, m2);
      for (const auto& [m, v] : prod.terms()) out.add_term(m, c * v);
    }
  }
  return out;
}

LinFun ring_apply(const RingElem& a, const LinFun& g) {
  if (a.n() != g.n()) throw InvalidArgument("ring_apply: variable counts differ");
  LinFun out(g.field(), g.n());
  for (const auto& [mono, c] : a.terms()) {
    LinFun h = g;
    for (std::uint32_t j = 0; j < a.n(); ++j)
      for (std::uint32_t i = 0; i < mono.is[j]; ++i) h = apply_delta(h, j + 1);
    for (std::uint32_t i = 0; i < mono.mu; ++i) h = apply_ds(h);
    for (std::uint32_t i = 0; i < mono.l; ++i) h = apply_tau(h);
    out += c * h;
  }
  return out;
}

TruncatedSeries ring_apply(const RingElem& a, const TruncatedSeries& g) {
  std::uint32_t max_mu = 0, max_l = 0;
  for (const auto& [mono, c] : a.terms()) {
    max_mu = std::max(max_mu, mono.mu);
    max_l = std::max(max_l, mono.l);
  }
  if (max_mu > g.validity) throw InvalidArgument("ring_apply: validity window exhausted");
  // Each term keeps validity V - mu >= V - max_mu.
  return TruncatedSeries{ring_apply(a, g.body), g.order + max_l, g.validity - max_mu};
}

std::vector<OpMonomial> op_monomials(std::uint32_t n, std::uint32_t nu) {
  std::vector<OpMonomial> out;
  std::vector<std::uint32_t> e(n + 2, 0);  // l, mu, i_1..i_n
  while (true) {
    out.push_back(OpMonomial{e[0], e[1], std::vector<std::uint32_t>(e.begin() + 2, e.end())});
    // Odometer over tuples with sum <= nu, last coordinate fastest.
    std::size_t j = e.size();
    while (j-- > 0) {
      std::uint32_t total = std::accumulate(e.begin(), e.end(), 0u);
      if (total < nu) {
        ++e[j];
        break;
      }
      e[j] = 0;
      if (j == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

GammaCount dim_gamma(std::uint32_t n, std::uint32_t nu) {
  GammaCount g;
  g.enumerated = op_monomials(n, nu).size();
  // binom(nu + n + 2, n + 2) by the multiplicative formula.
  std::uint64_t c = 1;
  for (std::uint32_t i = 1; i <= n + 2; ++i) c = c * (nu + i) / i;
  g.closed_form = c;
  return g;
}

std::optional<LinMonomial> probe_independence(const RingElem& a, std::uint32_t bound) {
  if (a.is_zero()) throw InvalidArgument("probe_independence: element is zero");
  const Field& f = a.field();
  const std::uint32_t n = a.n();
  for (std::uint32_t mu = 0; mu <= bound; ++mu) {
    const std::uint32_t lo = std::max<std::uint32_t>(mu, 1);
    if (n > 0 && lo > bound) break;
    std::vector<std::uint32_t> ks(n, lo);
    while (true) {
      LinFun probe(f, n);
      const LinMonomial mono{mu, ks};
      probe.add_term(mono, PerfectRational::one(f));
      if (!ring_apply(a, probe).is_zero()) return mono;
      std::size_t j = 0;
      while (j < n && ks[j] == bound) ks[j++] = lo;
      if (j == n) break;
      ++ks[j];
    }
  }
  return std::nullopt;
}

std::string to_text(const RingElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    std::string ct = to_text(c);
    if (c.is_polynomial() && ct.find(" + ") != std::string::npos) ct = "(" + ct + ")";
    out += ct + " * T^" + std::to_string(mono.l) + " * D^" + std::to_string(mono.mu);
    for (std::size_t j = 0; j < mono.is.size(); ++j)
      out += " * G" + std::to_string(j + 1) + "^" + std::to_string(mono.is[j]);
  }
  return out;
}

nlohmann::json to_json(const RingElem& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, c] : a.terms()) {
    nlohmann::json key = nlohmann::json::array({mono.l, mono.mu});
    for (auto i : mono.is) key.push_back(i);
    terms.push_back({key, to_json(c)});
  }
  return {{"n", a.n()}, {"terms", terms}};
}

RingElem ringelem_from_json(const Field& f, const nlohmann::json& j) {
  const auto n = j.at("n").get<std::uint32_t>();
  RingElem a(f, n);
  for (const auto& t : j.at("terms")) {
    const auto& key = t.at(0);
    if (key.size() != n + 2) throw InvalidArgument("ring json: key arity mismatch");
    OpMonomial mono{key[0].get<std::uint32_t>(), key[1].get<std::uint32_t>(), {}};
    for (std::size_t i = 2; i < key.size(); ++i) mono.is.push_back(key[i].get<std::uint32_t>());
    a.add_term(mono, element_from_json(f, t.at(1)));
  }
  return a;
}

}  // namespace carlitz
