#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace paut {

// An integer or the absorbing value -inf.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(std::int64_t v) : v_(v) {}  // NOLINT implicit
  static constexpr ExtendedInt neg_inf() {
    ExtendedInt r;
    r.v_ = kNegInf;
    return r;
  }

  constexpr bool is_neg_inf() const { return v_ == kNegInf; }
  std::int64_t value() const;

  friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return ExtendedInt(a.v_ + b.v_);
  }
  friend constexpr ExtendedInt operator*(ExtendedInt a, std::int64_t k) {
    if (a.is_neg_inf()) return neg_inf();
    return ExtendedInt(a.v_ * k);
  }
  friend constexpr bool operator==(ExtendedInt, ExtendedInt) = default;
  friend constexpr auto operator<=>(ExtendedInt a, ExtendedInt b) { return a.v_ <=> b.v_; }

  std::string to_string() const;

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  std::int64_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, ExtendedInt e) { return os << e.to_string(); }

using Degree = ExtendedInt;
using Valuation = ExtendedInt;

}  // namespace paut
