#include "carlitz/perfect.hpp"

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::size_t qpow(std::uint32_t q, std::uint32_t e) {
  return static_cast<std::size_t>(ipow_checked(q, e));
}

}  // namespace

// ---- PerfectPoly ----------------------------------------------------------

PerfectPoly::PerfectPoly(FqPoly poly, std::uint32_t level) : p_(std::move(poly)), level_(level) {
  normalize();
}

void PerfectPoly::normalize() {
  if (p_.is_constant()) {
    level_ = 0;
    return;
  }
  const std::uint32_t q = field().q();
  std::size_t g = p_.stride();
  std::size_t factor = 1;
  while (level_ > 0 && g % q == 0) {
    g /= q;
    factor *= q;
    --level_;
  }
  if (factor > 1) p_ = p_.compress(factor);
}

PerfectPoly PerfectPoly::constant(const Field& f, FqElem c) {
  return PerfectPoly(FqPoly::constant(f, c), 0);
}

PerfectPoly PerfectPoly::monomial(const Field& f, const QExp& e, FqElem c) {
  if (e.num() < 0) throw InvalidArgument("PerfectPoly::monomial: negative exponent");
  return PerfectPoly(FqPoly::monomial(f, static_cast<std::size_t>(e.num()), c), e.level());
}

FqPoly PerfectPoly::lifted(std::uint32_t level) const {
  if (level < level_) throw Error("PerfectPoly::lifted: target level below own level");
  if (level == level_) return p_;
  return p_.spread(qpow(field().q(), level - level_));
}

QExp PerfectPoly::degree() const {
  const std::uint32_t q = p_.field_ptr() ? field().q() : 2;
  return QExp(p_.degree(), level_, q);
}

std::vector<std::pair<QExp, FqElem>> PerfectPoly::terms() const {
  std::vector<std::pair<QExp, FqElem>> out;
  const auto& c = p_.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.emplace_back(QExp(static_cast<std::int64_t>(i), level_, field().q()), FqElem{c[i]});
  return out;
}

PerfectPoly PerfectPoly::frobenius() const { return q_power(1); }

PerfectPoly PerfectPoly::qth_root() const { return q_power(-1); }

PerfectPoly PerfectPoly::q_power(std::int64_t k) const {
  if (k == 0 || is_constant()) return *this;
  if (k < 0) return PerfectPoly(p_, level_ + static_cast<std::uint32_t>(-k));
  const auto uk = static_cast<std::uint32_t>(k);
  PerfectPoly r;
  if (uk <= level_) {
    r.p_ = p_;
    r.level_ = level_ - uk;
  } else {
    r.p_ = p_.spread(qpow(field().q(), uk - level_));
    r.level_ = 0;
  }
  return r;
}

PerfectPoly operator+(const PerfectPoly& a, const PerfectPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint32_t e = std::max(a.level_, b.level_);
  return PerfectPoly(a.lifted(e) + b.lifted(e), e);
}

PerfectPoly operator-(const PerfectPoly& a, const PerfectPoly& b) { return a + (-b); }

PerfectPoly operator*(const PerfectPoly& a, const PerfectPoly& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const std::uint32_t e = std::max(a.level_, b.level_);
  return PerfectPoly(a.lifted(e) * b.lifted(e), e);
}

// ---- PerfectRational ------------------------------------------------------

PerfectRational::PerfectRational(const Field& f)
    : num_(f), den_(PerfectPoly::constant(f, f.one())) {}

PerfectRational::PerfectRational(PerfectPoly num) : num_(std::move(num)) {
  den_ = PerfectPoly::constant(num_.field(), num_.field().one());
}

PerfectRational::PerfectRational(PerfectPoly num, PerfectPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  const Field& f = den.field();
  if (num.is_zero()) {
    *this = PerfectRational(f);
    return;
  }
  const std::uint32_t e = std::max(num.level(), den.level());
  FqPoly n = num.lifted(e);
  FqPoly d = den.lifted(e);
  if (!d.is_constant()) {
    const FqPoly g = gcd(n, d);
    if (!g.is_one()) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
  }
  const FqElem lc_inv = f.inv(d.lead());
  num_ = PerfectPoly(n.scaled(lc_inv), e);
  den_ = PerfectPoly(d.scaled(lc_inv), e);
}

PerfectRational PerfectRational::one(const Field& f) { return constant(f, f.one()); }

PerfectRational PerfectRational::constant(const Field& f, FqElem c) {
  return PerfectRational(PerfectPoly::constant(f, c));
}

PerfectRational PerfectRational::from_int(const Field& f, std::int64_t n) { return constant(f, f.from_int(n)); }

PerfectRational PerfectRational::x(const Field& f) { return monomial(f, QExp(1, 0, f.q()), f.one()); }

PerfectRational PerfectRational::monomial(const Field& f, const QExp& e, FqElem c) {
  if (c.is_zero()) return PerfectRational(f);
  if (e.num() >= 0) return PerfectRational(PerfectPoly::monomial(f, e, c));
  return make_raw(PerfectPoly::constant(f, c), PerfectPoly::monomial(f, -e, f.one()));
}

const Field& PerfectRational::field() const {
  if (!num_.field_ptr()) throw Error("element has no field attached");
  return num_.field();
}

PerfectRational PerfectRational::frobenius() const { return q_power(1); }

PerfectRational PerfectRational::qth_root() const { return q_power(-1); }

PerfectRational PerfectRational::q_power(std::int64_t k) const {
  if (is_zero()) return *this;
  return make_raw(num_.q_power(k), den_.q_power(k));
}

PerfectRational PerfectRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  const FqElem c = field().inv(num_.lead());
  return make_raw(den_.scaled(c), num_.scaled(c));
}

PerfectRational PerfectRational::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  if (e == 0) return one(field());
  if (is_zero()) return *this;
  const auto ue = static_cast<std::uint64_t>(e);
  // Powers of coprime parts stay coprime and monic.
  return make_raw(PerfectPoly(num_.poly().pow(ue), num_.level()),
                  PerfectPoly(den_.poly().pow(ue), den_.level()));
}

PerfectRational PerfectRational::operator-() const {
  if (is_zero()) return *this;
  return make_raw(-num_, den_);
}

PerfectRational PerfectRational::scaled(FqElem c) const {
  if (is_zero()) return *this;
  if (c.is_zero()) return PerfectRational(field());
  return make_raw(num_.scaled(c), den_);
}

PerfectRational operator+(const PerfectRational& a, const PerfectRational& b) {
  if (a.is_zero()) return b.field_ptr() || !a.field_ptr() ? b : a;
  if (b.is_zero()) return a;
  const Field& f = a.field();
  if (a.den_.is_one() && b.den_.is_one()) {
    PerfectPoly n = a.num_ + b.num_;
    if (n.is_zero()) return PerfectRational(f);
    return PerfectRational::make_raw(std::move(n), a.den_);
  }
  const std::uint32_t e = std::max(a.level(), b.level());
  const FqPoly A = a.num_.lifted(e), B = a.den_.lifted(e);
  const FqPoly C = b.num_.lifted(e), D = b.den_.lifted(e);
  const FqPoly g = gcd(B, D);
  if (g.is_one()) {
    FqPoly n = A * D + C * B;
    if (n.is_zero()) return PerfectRational(f);
    return PerfectRational::make_raw(PerfectPoly(std::move(n), e), PerfectPoly(B * D, e));
  }
  const FqPoly Bp = exact_div(B, g), Dp = exact_div(D, g);
  FqPoly t = A * Dp + C * Bp;
  if (t.is_zero()) return PerfectRational(f);
  const FqPoly h = gcd(t, g);
  FqPoly den = Bp * (h.is_one() ? D : exact_div(D, h));
  if (!h.is_one()) t = exact_div(t, h);
  return PerfectRational::make_raw(PerfectPoly(std::move(t), e), PerfectPoly(std::move(den), e));
}

PerfectRational operator-(const PerfectRational& a, const PerfectRational& b) { return a + (-b); }

PerfectRational operator*(const PerfectRational& a, const PerfectRational& b) {
  if (a.is_zero()) return a.field_ptr() || !b.field_ptr() ? a : PerfectRational(b.field());
  if (b.is_zero()) return b.field_ptr() ? b : PerfectRational(a.field());
  if (a.den_.is_one() && b.den_.is_one()) return PerfectRational::make_raw(a.num_ * b.num_, a.den_);
  const std::uint32_t e = std::max(a.level(), b.level());
  FqPoly A = a.num_.lifted(e), B = a.den_.lifted(e);
  FqPoly C = b.num_.lifted(e), D = b.den_.lifted(e);
  const FqPoly g1 = gcd(A, D);
  if (!g1.is_one()) {
    A = exact_div(A, g1);
    D = exact_div(D, g1);
  }
  const FqPoly g2 = gcd(C, B);
  if (!g2.is_one()) {
    C = exact_div(C, g2);
    B = exact_div(B, g2);
  }
  FqPoly n = A * C;
  FqPoly d = B * D;
  const FqElem lc_inv = a.field().inv(d.lead());
  return PerfectRational::make_raw(PerfectPoly(n.scaled(lc_inv), e), PerfectPoly(d.scaled(lc_inv), e));
}

PerfectRational operator/(const PerfectRational& a, const PerfectRational& b) { return a * b.inv(); }

bool PerfectRational::operator==(const PerfectRational& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return num_ == o.num_ && den_ == o.den_;
}

PerfectRational bracket(const Field& f, std::uint32_t i) {
  if (i == 0) return PerfectRational(f);
  const std::size_t top = static_cast<std::size_t>(ipow_checked(f.q(), i));
  std::vector<std::uint8_t> c(top + 1, 0);
  c[top] = 1;
  c[1] = f.neg(std::uint8_t{1});
  return PerfectRational(PerfectPoly(FqPoly(f, std::move(c)), 0));
}

}  // namespace carlitz
