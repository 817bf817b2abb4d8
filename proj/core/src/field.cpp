#include "carlitz/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

using Digits = std::vector<std::uint32_t>;

// Conway polynomials, low-to-high coefficients.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint8_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint8_t>> t = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return t;
}

// Remainder of a by monic m over F_p.
Digits poly_mod(Digits a, const std::vector<std::uint8_t>& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
    }
  }
  a.resize(std::min(a.size(), dm));
  for (auto& d : a) d %= p;
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool small_irreducible(const std::vector<std::uint8_t>& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d * 2 <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint8_t> f(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint8_t>(c % p);
        c /= p;
      }
      f[d] = 1;
      Digits a(m.begin(), m.end());
      const Digits r = poly_mod(a, f, p);
      bool zero = true;
      for (auto v : r) zero = zero && v == 0;
      if (zero) return false;
    }
  }
  return deg >= 1;
}

}  // namespace

std::uint32_t FieldConfig::q() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < nu; ++i) r *= p;
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint8_t> fixed_modulus(std::uint32_t p, std::uint32_t nu) {
  if (nu == 1) return {0, 1};
  const auto& t = conway_table();
  if (auto it = t.find({p, nu}); it != t.end()) return it->second;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < nu; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint8_t> f(nu + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < nu; ++i) {
      f[i] = static_cast<std::uint8_t>(c % p);
      c /= p;
    }
    f[nu] = 1;
    if (small_irreducible(f, p)) return f;
  }
  throw InvalidArgument("no irreducible modulus found");
}

const Field& Field::get(FieldConfig cfg) {
  static std::mutex mu;
  static std::map<FieldConfig, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[cfg];
  if (!slot) slot.reset(new Field(cfg));
  return *slot;
}

Field::Field(FieldConfig cfg) : cfg_(cfg) {
  if (!is_prime(cfg.p)) throw InvalidArgument("p must be prime, got " + std::to_string(cfg.p));
  if (cfg.nu < 1) throw InvalidArgument("nu must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < cfg.nu; ++i) {
    q *= cfg.p;
    if (q > 256) throw InvalidArgument("q = p^nu must not exceed 256");
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = fixed_modulus(cfg.p, cfg.nu);
  if (cfg.nu > 1 && !small_irreducible(modulus_, cfg.p)) {
    throw InvalidArgument("tabulated modulus is reducible");
  }

  const std::size_t n = q_;
  add_.resize(n * n);
  sub_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  std::vector<Digits> dig(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto d = digits(static_cast<std::uint8_t>(a));
    dig[a] = Digits(d.begin(), d.end());
  }
  const std::uint32_t p = cfg.p;
  for (std::uint32_t a = 0; a < n; ++a) {
    Digits ng(cfg.nu);
    for (std::uint32_t i = 0; i < cfg.nu; ++i) ng[i] = (p - dig[a][i]) % p;
    neg_[a] = from_digits(ng);
    for (std::uint32_t b = 0; b < n; ++b) {
      Digits s(cfg.nu), d(cfg.nu);
      for (std::uint32_t i = 0; i < cfg.nu; ++i) {
        s[i] = (dig[a][i] + dig[b][i]) % p;
        d[i] = (dig[a][i] + p - dig[b][i]) % p;
      }
      add_[a * n + b] = from_digits(s);
      sub_[a * n + b] = from_digits(d);
      Digits prod(2 * cfg.nu - 1, 0);
      for (std::uint32_t i = 0; i < cfg.nu; ++i)
        for (std::uint32_t j = 0; j < cfg.nu; ++j) prod[i + j] += dig[a][i] * dig[b][j];
      Digits r = cfg.nu == 1 ? Digits{prod[0] % p} : poly_mod(prod, modulus_, p);
      r.resize(cfg.nu, 0);
      mul_[a * n + b] = from_digits(r);
    }
  }
  for (std::uint32_t a = 1; a < n; ++a)
    for (std::uint32_t b = 1; b < n; ++b)
      if (mul_[a * n + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

FqElem Field::from_int(std::int64_t n) const {
  const std::int64_t p = cfg_.p;
  return {static_cast<std::uint8_t>(((n % p) + p) % p)};
}

std::uint8_t Field::inv(std::uint8_t a) const {
  if (a == 0) throw DivisionByZero();
  return inv_[a];
}

FqElem Field::pow(FqElem a, std::uint64_t e) const {
  FqElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint8_t> Field::digits(std::uint8_t code) const {
  std::vector<std::uint8_t> d(cfg_.nu);
  std::uint32_t c = code;
  for (std::uint32_t i = 0; i < cfg_.nu; ++i) {
    d[i] = static_cast<std::uint8_t>(c % cfg_.p);
    c /= cfg_.p;
  }
  return d;
}

std::uint8_t Field::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * cfg_.p + d[i] % cfg_.p;
  return static_cast<std::uint8_t>(code);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " (p=" << cfg_.p << ", nu=" << cfg_.nu << ")";
  return os.str();
}

}  // namespace carlitz
