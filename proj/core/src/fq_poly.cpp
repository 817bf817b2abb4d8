#include "carlitz/fq_poly.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

constexpr std::size_t kSchoolbookNnz = 48;

void schoolbook(const Field& F, const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                std::vector<std::uint8_t>& out) {
  // a is the sparser operand.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint8_t ai = a[i];
    if (ai == 0) continue;
    std::uint8_t* dst = out.data() + i;
    if (ai == 1) {
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j]) dst[j] = F.add(dst[j], b[j]);
    } else {
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j]) dst[j] = F.add(dst[j], F.mul(ai, b[j]));
    }
  }
}

std::vector<std::uint64_t> pack(const Field& F, const std::vector<std::uint8_t>& a, std::size_t width,
                                unsigned bits) {
  const std::uint32_t nu = F.nu();
  const std::size_t slots = a.size() * width;
  std::vector<std::uint64_t> words((slots * bits + 63) / 64 + 1, 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    std::uint32_t code = a[j];
    for (std::uint32_t i = 0; i < nu; ++i) {
      const std::uint64_t v = code % F.p();
      code /= F.p();
      if (v == 0) continue;
      const std::size_t off = (j * width + i) * bits;
      const std::size_t w = off / 64, s = off % 64;
      words[w] |= v << s;
      if (s + bits > 64 && s != 0) words[w + 1] |= v >> (64 - s);
    }
  }
  return words;
}

std::vector<std::uint8_t> kronecker(const Field& F, const std::vector<std::uint8_t>& a,
                                    const std::vector<std::uint8_t>& b) {
  const std::uint32_t p = F.p(), nu = F.nu();
  const std::size_t width = 2 * nu - 1;
  const std::uint64_t bound =
      static_cast<std::uint64_t>(std::min(a.size(), b.size())) * nu * (p - 1) * (p - 1);
  const unsigned bits = static_cast<unsigned>(std::bit_width(bound));

  auto wa = pack(F, a, width, bits);
  auto wb = pack(F, b, width, bits);
  mpz_t za, zb, zc;
  mpz_init(za);
  mpz_init(zb);
  mpz_init(zc);
  mpz_import(za, wa.size(), -1, sizeof(std::uint64_t), 0, 0, wa.data());
  mpz_import(zb, wb.size(), -1, sizeof(std::uint64_t), 0, 0, wb.data());
  mpz_mul(zc, za, zb);
  const std::size_t n_out = a.size() + b.size() - 1;
  const std::size_t total_bits = n_out * width * bits;
  std::vector<std::uint64_t> wc(total_bits / 64 + 2, 0);
  std::size_t count = 0;
  if (mpz_sgn(zc) != 0) {
    const std::size_t need = (mpz_sizeinbase(zc, 2) + 63) / 64;
    if (need > wc.size()) wc.resize(need);
    mpz_export(wc.data(), &count, -1, sizeof(std::uint64_t), 0, 0, zc);
  }
  mpz_clear(za);
  mpz_clear(zb);
  mpz_clear(zc);

  const std::uint64_t mask = bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
  auto slot = [&](std::size_t k) -> std::uint64_t {
    const std::size_t off = k * bits;
    const std::size_t w = off / 64, s = off % 64;
    std::uint64_t v = wc[w] >> s;
    if (s != 0 && s + bits > 64) v |= wc[w + 1] << (64 - s);
    return v & mask;
  };

  std::vector<std::uint8_t> out(n_out, 0);
  const auto& m = F.modulus();
  std::vector<std::uint64_t> acc(width);
  for (std::size_t j = 0; j < n_out; ++j) {
    if (nu == 1) {
      out[j] = static_cast<std::uint8_t>(slot(j) % p);
      continue;
    }
    for (std::size_t i = 0; i < width; ++i) acc[i] = slot(j * width + i) % p;
    for (std::size_t i = width; i-- > nu;) {
      const std::uint64_t c = acc[i];
      if (c == 0) continue;
      for (std::uint32_t t = 0; t <= nu; ++t) acc[i - nu + t] = (acc[i - nu + t] + (p - c) * m[t]) % p;
    }
    std::uint32_t code = 0;
    for (std::uint32_t i = nu; i-- > 0;) code = code * p + static_cast<std::uint32_t>(acc[i]);
    out[j] = static_cast<std::uint8_t>(code);
  }
  return out;
}

}  // namespace

FqPoly::FqPoly(const Field& f, std::vector<std::uint8_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
  trim();
}

FqPoly FqPoly::constant(const Field& f, FqElem c) {
  return FqPoly(f, std::vector<std::uint8_t>{c.v});
}

FqPoly FqPoly::monomial(const Field& f, std::size_t deg, FqElem c) {
  if (c.is_zero()) return FqPoly(f);
  std::vector<std::uint8_t> v(deg + 1, 0);
  v[deg] = c.v;
  return FqPoly(f, std::move(v));
}

FqPoly FqPoly::from_terms(const Field& f, std::span<const std::pair<std::size_t, FqElem>> terms) {
  std::size_t top = 0;
  for (const auto& [e, c] : terms) top = std::max(top, e);
  std::vector<std::uint8_t> v(terms.empty() ? 0 : top + 1, 0);
  for (const auto& [e, c] : terms) v[e] = f.add(v[e], c.v);
  return FqPoly(f, std::move(v));
}

FqPoly& FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  return *this;
}

std::size_t FqPoly::nnz() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](auto v) { return v != 0; }));
}

std::size_t FqPoly::stride() const {
  std::size_t g = 0;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) {
      g = std::gcd(g, i);
      if (g == 1) return 1;
    }
  }
  return g;
}

std::size_t FqPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& v : r.c_) v = f_->neg(v);
  return r;
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  if (o.c_.empty()) return *this;
  if (!f_) f_ = o.f_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (o.c_[i]) c_[i] = f_->add(c_[i], o.c_[i]);
  return trim();
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  if (o.c_.empty()) return *this;
  if (!f_) f_ = o.f_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (o.c_[i]) c_[i] = f_->sub(c_[i], o.c_[i]);
  return trim();
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  const Field* F = a.f_ ? a.f_ : b.f_;
  if (a.is_zero() || b.is_zero()) return F ? FqPoly(*F) : FqPoly();
  if (a.is_constant()) return b.scaled(a.lead());
  if (b.is_constant()) return a.scaled(b.lead());

  const std::size_t na = a.nnz(), nb = b.nnz();
  if (std::min(na, nb) <= kSchoolbookNnz) {
    std::vector<std::uint8_t> out(a.c_.size() + b.c_.size() - 1, 0);
    if (na <= nb)
      schoolbook(*F, a.c_, b.c_, out);
    else
      schoolbook(*F, b.c_, a.c_, out);
    return FqPoly(*F, std::move(out));
  }

  // Operands that are polynomials in y^g (Frobenius images, lifted values)
  // are multiplied in compressed form.
  const std::size_t sa = a.stride(), sb = b.stride();
  const std::size_t g = std::gcd(sa, sb);
  if (g > 1) return (a.compress(g) * b.compress(g)).spread(g);
  if (sa > 1 || sb > 1) {
    const FqPoly& s = sa > 1 ? a : b;  // strided
    const FqPoly& o = sa > 1 ? b : a;
    const std::size_t st = sa > 1 ? sa : sb;
    const FqPoly sc = s.compress(st);
    FqPoly acc(*F);
    std::vector<std::uint8_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t r = 0; r < st; ++r) {
      std::vector<std::uint8_t> part;
      for (std::size_t i = r; i < o.c_.size(); i += st) part.push_back(o.c_[i]);
      FqPoly pr(*F, std::move(part));
      if (pr.is_zero()) continue;
      const FqPoly prod = sc * pr;
      for (std::size_t i = 0; i < prod.c_.size(); ++i)
        if (prod.c_[i]) out[i * st + r] = F->add(out[i * st + r], prod.c_[i]);
    }
    return FqPoly(*F, std::move(out));
  }
  return FqPoly(*F, kronecker(*F, a.c_, b.c_));
}

FqPoly FqPoly::scaled(FqElem c) const {
  if (c.is_zero()) return FqPoly(*f_);
  FqPoly r = *this;
  if (c.v == 1) return r;
  for (auto& v : r.c_) v = f_->mul(v, c.v);
  return r;
}

FqPoly FqPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  FqPoly r(*f_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

FqPoly FqPoly::spread(std::size_t g) const {
  if (g == 1 || is_constant()) return *this;
  FqPoly r(*f_);
  r.c_.assign((c_.size() - 1) * g + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * g] = c_[i];
  return r;
}

FqPoly FqPoly::compress(std::size_t g) const {
  if (g <= 1 || is_constant()) return *this;
  FqPoly r(*f_);
  r.c_.assign((c_.size() - 1) / g + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % g != 0) throw Error("compress: exponent not divisible by stride");
    r.c_[i / g] = c_[i];
  }
  return r;
}

FqPoly FqPoly::monic() const {
  if (is_zero() || lead().v == 1) return *this;
  return scaled(f_->inv(lead()));
}

FqPoly FqPoly::pow(std::uint64_t e) const {
  FqPoly r = constant(*f_, f_->one());
  FqPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FqElem FqPoly::eval(FqElem y) const {
  FqElem r{0};
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, y), FqElem{c_[i]});
  return r;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  const Field& F = b.field();
  if (a.degree() < b.degree()) return {FqPoly(F), a};
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint8_t inv_lc = F.inv(bc[db]);
  std::vector<std::pair<std::size_t, std::uint8_t>> tail;  // nonzero terms below the lead
  for (std::size_t i = 0; i < db; ++i)
    if (bc[i]) tail.emplace_back(i, bc[i]);

  std::vector<std::uint8_t> r = a.coeffs();
  std::vector<std::uint8_t> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const std::uint8_t c = r[i];
    if (c == 0) continue;
    const std::uint8_t qc = F.mul(c, inv_lc);
    q[i - db] = qc;
    r[i] = 0;
    const std::size_t base = i - db;
    for (const auto& [e, bv] : tail) r[base + e] = F.sub(r[base + e], F.mul(qc, bv));
  }
  r.resize(db);
  return {FqPoly(F, std::move(q)), FqPoly(F, std::move(r))};
}

FqPoly exact_div(const FqPoly& a, const FqPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("exact_div: divisor does not divide dividend");
  return q;
}

FqPoly mod(const FqPoly& a, const FqPoly& m) { return divmod(a, m).second; }

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return FqPoly::constant(a.field(), a.field().one());
  // Strip common powers of y, then work in y^g when possible.
  const std::size_t low = std::min(a.low_degree(), b.low_degree());
  if (low > 0) {
    FqPoly as(a.field(), std::vector<std::uint8_t>(a.coeffs().begin() + low, a.coeffs().end()));
    FqPoly bs(b.field(), std::vector<std::uint8_t>(b.coeffs().begin() + low, b.coeffs().end()));
    return gcd(as, bs).shifted(low);
  }
  const std::size_t g = std::gcd(a.stride(), b.stride());
  if (g > 1) return gcd(a.compress(g), b.compress(g)).spread(g);
  FqPoly x = a.degree() >= b.degree() ? a : b;
  FqPoly y = a.degree() >= b.degree() ? b : a;
  while (!y.is_zero()) {
    FqPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::uint64_t multiplicity(FqPoly a, const FqPoly& p) {
  if (a.is_zero()) throw Error("multiplicity of zero is infinite");
  std::uint64_t v = 0;
  while (true) {
    auto [q, r] = divmod(a, p);
    if (!r.is_zero()) return v;
    a = std::move(q);
    ++v;
  }
}

}  // namespace carlitz
