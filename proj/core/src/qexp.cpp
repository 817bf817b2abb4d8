#include "carlitz/qexp.hpp"

#include "carlitz/errors.hpp"

namespace carlitz {

std::int64_t ipow_checked(std::uint64_t q, std::uint32_t e) {
  __int128 r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= q;
    if (r > INT64_MAX) throw Error("exponent overflow");
  }
  return static_cast<std::int64_t>(r);
}

QExp::QExp(std::int64_t num, std::uint32_t level, std::uint32_t q) : num_(num), level_(level), q_(q) {
  if (q < 2) throw InvalidArgument("QExp: q must be >= 2");
  if (num_ == 0) level_ = 0;
  while (level_ > 0 && num_ % static_cast<std::int64_t>(q_) == 0) {
    num_ /= q_;
    --level_;
  }
}

std::int64_t QExp::num_at(std::uint32_t level) const {
  if (level < level_) throw Error("QExp::num_at: level below own level");
  const __int128 r = static_cast<__int128>(num_) * ipow_checked(q_, level - level_);
  if (r > INT64_MAX || r < INT64_MIN) throw Error("exponent overflow");
  return static_cast<std::int64_t>(r);
}

QExp QExp::times_q() const {
  if (level_ > 0) return QExp(num_, level_ - 1, q_);
  return QExp(num_at(0) * static_cast<std::int64_t>(q_), 0, q_);
}

QExp QExp::div_q() const { return QExp(num_, level_ + 1, q_); }

QExp operator+(const QExp& a, const QExp& b) {
  const std::uint32_t l = std::max(a.level_, b.level_);
  return QExp(a.num_at(l) + b.num_at(l), l, a.q_);
}

QExp operator-(const QExp& a, const QExp& b) { return a + (-b); }

std::strong_ordering operator<=>(const QExp& a, const QExp& b) {
  const std::uint32_t l = std::max(a.level_, b.level_);
  return a.num_at(l) <=> b.num_at(l);
}

std::string QExp::to_string() const {
  if (level_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(ipow_checked(q_, level_));
}

double QExp::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(ipow_checked(q_, level_));
}

}  // namespace carlitz
