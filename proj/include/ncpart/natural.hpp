#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncpart {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Non-negative integer with 128 bits of range. Every operation is checked:
/// overflow, negative results and inexact division throw instead of
/// wrapping or truncating.
class Natural {
 public:
  using Rep = unsigned __int128;

  constexpr Natural() = default;
  constexpr Natural(std::uint64_t v) : value_(v) {}  // NOLINT: implicit

  static Natural from_string(std::string_view digits);

  constexpr Rep raw() const noexcept { return value_; }
  bool fits_u64() const noexcept { return value_ >> 64 == 0; }
  std::uint64_t to_u64() const;
  std::string to_string() const;

  bool is_odd() const noexcept { return (value_ & 1) != 0; }

  friend Natural operator+(Natural a, Natural b) {
    Rep r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) {
      throw OverflowError("integer overflow in addition");
    }
    return from_raw(r);
  }
  friend Natural operator-(Natural a, Natural b) {
    if (b.value_ > a.value_) {
      throw OverflowError("negative result in subtraction");
    }
    return from_raw(a.value_ - b.value_);
  }
  friend Natural operator*(Natural a, Natural b) {
    Rep r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) {
      throw OverflowError("integer overflow in multiplication");
    }
    return from_raw(r);
  }
  /// Exact division; a nonzero remainder is an error.
  friend Natural operator/(Natural a, Natural b) {
    if (b.value_ == 0) throw std::domain_error("division by zero");
    if (a.value_ % b.value_ != 0) {
      throw std::domain_error("inexact division: " + a.to_string() + " / " +
                              b.to_string());
    }
    return from_raw(a.value_ / b.value_);
  }
  friend Natural operator%(Natural a, Natural b) {
    if (b.value_ == 0) throw std::domain_error("division by zero");
    return from_raw(a.value_ % b.value_);
  }

  Natural& operator+=(Natural b) { return *this = *this + b; }
  Natural& operator-=(Natural b) { return *this = *this - b; }
  Natural& operator*=(Natural b) { return *this = *this * b; }
  Natural& operator/=(Natural b) { return *this = *this / b; }

  friend constexpr bool operator==(Natural, Natural) = default;
  friend constexpr auto operator<=>(Natural, Natural) = default;

 private:
  static constexpr Natural from_raw(Rep r) {
    Natural n;
    n.value_ = r;
    return n;
  }

  Rep value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Natural n) {
  return os << n.to_string();
}

}  // namespace ncpart
