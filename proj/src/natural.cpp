#include "ncpart/natural.hpp"

#include <algorithm>

namespace ncpart {

Natural Natural::from_string(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  Natural out;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid digit in \"" + std::string(digits) +
                                  "\"");
    }
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return out;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw OverflowError(to_string() + " exceeds 64 bits");
  return static_cast<std::uint64_t>(value_);
}

std::string Natural::to_string() const {
  if (value_ == 0) return "0";
  std::string out;
  for (Rep v = value_; v != 0; v /= 10) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace ncpart
