#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace carlitz {

/// The rational number num / q^level. Normalized so that level = 0 or q does
/// not divide num.
class QExp {
 public:
  QExp() = default;
  QExp(std::int64_t num, std::uint32_t level, std::uint32_t q);

  static QExp integer(std::int64_t n, std::uint32_t q) { return QExp(n, 0, q); }

  std::int64_t num() const { return num_; }
  std::uint32_t level() const { return level_; }
  std::uint32_t q() const { return q_; }
  bool is_integer() const { return level_ == 0; }
  bool is_zero() const { return num_ == 0; }

  /// Numerator at a level >= level().
  std::int64_t num_at(std::uint32_t level) const;

  QExp times_q() const;
  QExp div_q() const;

  friend QExp operator+(const QExp& a, const QExp& b);
  friend QExp operator-(const QExp& a, const QExp& b);
  QExp operator-() const { return QExp(-num_, level_, q_); }

  friend std::strong_ordering operator<=>(const QExp& a, const QExp& b);
  friend bool operator==(const QExp& a, const QExp& b) {
    return a.num_ == b.num_ && a.level_ == b.level_;
  }

  /// "n" or "n/q^level" written out as an integer denominator.
  std::string to_string() const;
  double to_double() const;

 private:
  std::int64_t num_ = 0;
  std::uint32_t level_ = 0;
  std::uint32_t q_ = 2;
};

/// q^e with overflow check.
std::int64_t ipow_checked(std::uint64_t q, std::uint32_t e);

}  // namespace carlitz
