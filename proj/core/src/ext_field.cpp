#include "carlitz/ext_field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

constexpr std::uint64_t kMinSize = 1u << 20;

}  // namespace

const ExtField& ExtField::over(const Field& base) {
  static std::mutex mu;
  static std::map<FieldConfig, std::unique_ptr<ExtField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[base.config()];
  if (!slot) slot.reset(new ExtField(base));
  return *slot;
}

ExtField::ExtField(const Field& base) : base_(&base) {
  const std::uint32_t q = base.q();
  std::uint64_t size = 1;
  while (size < kMinSize || s_ < 2) {
    size *= q;
    ++s_;
  }
  order_ = static_cast<std::uint32_t>(size - 1);

  // Elements are coded as base-q digit strings of length s (low digit first).
  std::uint64_t top = size / q;
  std::vector<std::uint32_t> log_of(size, kZero);
  std::vector<std::uint32_t> digits(s_);
  auto decode = [&](std::uint64_t code) {
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(code % q);
      code /= q;
    }
  };
  auto encode = [&]() {
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * q + digits[i];
    return code;
  };

  // Search monic P of degree s (lower coefficients enumerated by code) for
  // which w = y mod P has multiplicative order q^s - 1.
  std::vector<std::uint32_t> exp_of(order_);
  for (std::uint64_t pcode = 1; pcode < size; ++pcode) {
    std::vector<std::uint32_t> P(s_);
    {
      std::uint64_t c = pcode;
      for (auto& d : P) {
        d = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
    }
    if (P[0] == 0) continue;
    std::fill(log_of.begin(), log_of.end(), kZero);
    std::uint64_t cur = 1;
    bool primitive = true;
    for (std::uint32_t i = 0; i < order_; ++i) {
      if (log_of[cur] != kZero) {
        primitive = false;
        break;
      }
      log_of[cur] = i;
      exp_of[i] = static_cast<std::uint32_t>(cur);
      // cur *= w: shift up one digit and reduce by P.
      const auto t = static_cast<std::uint8_t>(cur / top);
      decode(cur % top);
      for (std::size_t k = s_ - 1; k > 0; --k) digits[k] = digits[k - 1];
      digits[0] = 0;
      for (std::size_t k = 0; k < s_; ++k)
        digits[k] = base.sub(static_cast<std::uint8_t>(digits[k]), base.mul(t, static_cast<std::uint8_t>(P[k])));
      cur = encode();
    }
    if (primitive && cur == 1) break;
    if (pcode + 1 == size) throw Error("ExtField: no primitive polynomial found");
  }

  zech_.assign(order_, kZero);
  for (std::uint32_t n = 0; n < order_; ++n) {
    decode(exp_of[n]);
    digits[0] = base.add(static_cast<std::uint8_t>(digits[0]), 1);
    zech_[n] = log_of[encode()];
  }
  base_log_.assign(q, kZero);
  for (std::uint32_t c = 1; c < q; ++c) base_log_[c] = log_of[c];
  minus_one_ = base_log_[base.neg(1)];
}

ExtField::Elem ExtField::inv(Elem a) const {
  if (a == kZero) throw DivisionByZero();
  return a == 0 ? 0 : order_ - a;
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a == kZero) return kZero;
  return static_cast<Elem>(static_cast<unsigned __int128>(a) * e % order_);
}

ExtField::Elem ExtField::eval(const FqPoly& p, Elem point) const {
  Elem acc = kZero;
  const auto& c = p.coeffs();
  if (point == kZero) return c.empty() ? kZero : from_base(FqElem{c[0]});
  std::uint64_t e = 0;  // i * point mod order
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) acc = add(acc, mul(base_log_[c[i]], static_cast<Elem>(e)));
    e += point;
    if (e >= order_) e -= order_;
  }
  return acc;
}

std::size_t ext_rank(const ExtField& F, std::vector<std::vector<ExtField::Elem>> rows) {
  using Elem = ExtField::Elem;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == ExtField::kZero) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Elem inv = F.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == ExtField::kZero) continue;
      const Elem factor = F.neg(F.mul(rows[r][c], inv));
      for (std::size_t k = c; k < cols; ++k)
        if (rows[rank][k] != ExtField::kZero) rows[r][k] = F.add(rows[r][k], F.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace carlitz
