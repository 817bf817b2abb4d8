#include "carlitz/linfun.hpp"

#include <algorithm>

#include "carlitz/element_io.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

std::optional<std::uint32_t> LinMonomial::min_k() const {
  if (ks.empty()) return std::nullopt;
  return *std::min_element(ks.begin(), ks.end());
}

std::uint32_t LinMonomial::max_k() const {
  return ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
}

bool LinMonomial::in_F_shape() const {
  const auto mk = min_k();
  return !mk || m <= *mk;
}

bool LinMonomial::within(std::uint32_t window) const { return max_k() <= window; }

std::string to_string(const LinMonomial& mono) {
  std::string s = "(" + std::to_string(mono.m);
  for (auto k : mono.ks) s += "," + std::to_string(k);
  return s + ")";
}

LinFun LinFun::s_power(const Field& f, std::uint32_t m, const PerfectRational& c) {
  LinFun r(f, 0);
  r.add_term(LinMonomial{m, {}}, c);
  return r;
}

void LinFun::add_term(const LinMonomial& mono, const PerfectRational& c) {
  if (mono.ks.size() != n_) throw InvalidArgument("LinFun: monomial arity does not match n");
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PerfectRational LinFun::coeff(const LinMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? PerfectRational(*f_) : it->second;
}

bool LinFun::in_F_shape() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_F_shape(); });
}

std::uint32_t LinFun::max_k() const {
  std::uint32_t k = 0;
  for (const auto& [mono, c] : terms_) k = std::max(k, mono.max_k());
  return k;
}

LinFun LinFun::restricted(std::uint32_t window) const {
  LinFun r(*f_, n_);
  for (const auto& [mono, c] : terms_)
    if (mono.within(window)) r.terms_.emplace_hint(r.terms_.end(), mono, c);
  return r;
}

void LinFun::check_compatible(const LinFun& o) const {
  if (o.n_ != n_) throw InvalidArgument("LinFun: variable counts differ");
  if (o.f_->config() != f_->config()) throw InvalidArgument("LinFun: fields differ");
}

LinFun& LinFun::operator+=(const LinFun& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

LinFun& LinFun::operator-=(const LinFun& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

LinFun LinFun::operator-() const {
  LinFun r(*f_, n_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono, -c);
  return r;
}

LinFun operator*(const PerfectRational& c, const LinFun& f) {
  LinFun r(f.field(), f.n());
  if (c.is_zero()) return r;
  for (const auto& [mono, a] : f.terms()) r.add_term(mono, c * a);
  return r;
}

LinFun apply_tau(const LinFun& f) {
  LinFun r(f.field(), f.n());
  for (const auto& [mono, a] : f.terms()) {
    LinMonomial m2 = mono;
    ++m2.m;
    for (auto& k : m2.ks) ++k;
    r.add_term(m2, a.frobenius());
  }
  return r;
}

LinFun apply_ds(const LinFun& f) {
  LinFun r(f.field(), f.n());
  for (const auto& [mono, a] : f.terms()) {
    if (mono.m == 0) continue;
    const auto mk = mono.min_k();
    if (mk && *mk == 0) throw MonomialEscape("d_s leaves the function space at monomial " + to_string(mono));
    LinMonomial m2 = mono;
    --m2.m;
    for (auto& k : m2.ks) --k;
    r.add_term(m2, (a * bracket(f.field(), mono.m)).qth_root());
  }
  return r;
}

LinFun apply_delta(const LinFun& f, std::uint32_t j) {
  if (j < 1 || j > f.n()) throw InvalidArgument("apply_delta: index " + std::to_string(j) + " out of range");
  LinFun r(f.field(), f.n());
  for (const auto& [mono, a] : f.terms()) {
    const std::uint32_t k = mono.ks[j - 1];
    if (k == 0) continue;
    r.add_term(mono, a * bracket(f.field(), k));
  }
  return r;
}

TruncatedSeries TruncatedSeries::exact(LinFun body) {
  const std::uint32_t order = body.max_k();
  return TruncatedSeries{std::move(body), order, kUnbounded};
}

TruncatedSeries apply_tau(const TruncatedSeries& f) {
  return TruncatedSeries{apply_tau(f.body), f.order + 1, f.validity};
}

TruncatedSeries apply_ds(const TruncatedSeries& f) {
  if (f.validity == 0 || f.order == 0) throw InvalidArgument("apply_ds: validity window exhausted");
  return TruncatedSeries{apply_ds(f.body), f.order - 1, f.validity - 1};
}

TruncatedSeries apply_delta(const TruncatedSeries& f, std::uint32_t j) {
  return TruncatedSeries{apply_delta(f.body, j), f.order, f.validity};
}

PerfectRational evaluate(const LinFun& f, const PerfectRational& value) {
  if (f.n() != 0) throw InvalidArgument("evaluate: only functions of s alone can be evaluated");
  PerfectRational sum(f.field());
  if (value.is_zero()) return sum;
  for (const auto& [mono, a] : f.terms()) sum += a * value.q_power(mono.m);
  return sum;
}

SeriesComparison series_compare(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.body.n() != g.body.n()) throw InvalidArgument("series_compare: variable counts differ");
  SeriesComparison out;
  out.window = std::min(f.validity, g.validity);
  const LinFun diff = f.body.restricted(out.window) - g.body.restricted(out.window);
  out.equal = diff.is_zero();
  if (!out.equal) out.witness = diff.terms().begin()->first;
  return out;
}

nlohmann::json to_json(const LinFun& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, c] : f.terms()) {
    nlohmann::json key = nlohmann::json::array({mono.m});
    for (auto k : mono.ks) key.push_back(k);
    terms.push_back({key, to_json(c)});
  }
  return {{"n", f.n()}, {"terms", terms}};
}

LinFun linfun_from_json(const Field& fld, const nlohmann::json& j) {
  const auto n = j.at("n").get<std::uint32_t>();
  LinFun f(fld, n);
  for (const auto& t : j.at("terms")) {
    const auto& key = t.at(0);
    if (key.size() != n + 1) throw InvalidArgument("linfun json: key arity mismatch");
    LinMonomial mono{key[0].get<std::uint32_t>(), {}};
    for (std::size_t i = 1; i < key.size(); ++i) mono.ks.push_back(key[i].get<std::uint32_t>());
    f.add_term(mono, element_from_json(fld, t.at(1)));
  }
  return f;
}

std::string to_text(const LinFun& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_text(c) + ") * s^(q^" + std::to_string(mono.m) + ")";
    for (std::size_t j = 0; j < mono.ks.size(); ++j)
      out += " * t" + std::to_string(j + 1) + "^(q^" + std::to_string(mono.ks[j]) + ")";
  }
  return out;
}

}  // namespace carlitz
