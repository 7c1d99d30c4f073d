#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repet/errors.hpp"

namespace repet {

// Arbitrary-precision nonnegative integer. Stored as base-10^8 limbs, least
// significant first, with no trailing zero limbs (zero is the empty vector).
// Decimal is the only text encoding; parse accepts exactly the canonical
// rendering (no signs, separators, or leading zeros).
class Natural {
 public:
  Natural() = default;
  explicit Natural(uint64_t value);

  static Natural from_decimal(std::string_view text);
  static Natural pow10(std::size_t zeros);

  std::string to_decimal() const;
  // Digits in groups of three from the right, separated by single spaces
  // ("394 394"). Display-only; never accepted on input.
  std::string to_decimal_grouped() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_even() const { return limbs_.empty() || limbs_[0] % 2 == 0; }
  std::size_t digit_count() const;  // digit_count(0) == 1

  bool fits_uint64() const;
  uint64_t to_uint64() const;  // pre: fits_uint64()

  // this * 10^zeros.
  Natural shifted_by_digits(std::size_t zeros) const;

  std::span<const uint32_t> limbs() const { return limbs_; }

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& x, const Natural& y);

  Natural& operator+=(const Natural& other);
  Natural& operator-=(const Natural& other);  // pre: *this >= other
  friend Natural operator+(Natural x, const Natural& y) { return x += y; }
  friend Natural operator-(Natural x, const Natural& y) { return x -= y; }
  friend Natural operator*(const Natural& x, const Natural& y);

 private:
  friend struct NaturalAccess;
  std::vector<uint32_t> limbs_;
};

struct DivModResult {
  Natural quotient;
  Natural remainder;
};

// The unique (q, r) with dividend = q * divisor + r, 0 <= r < divisor.
DivModResult divmod(const Natural& dividend, const Natural& divisor);

// True iff divisor | dividend. Throws DivisionByZero when divisor is zero.
bool divides(const Natural& divisor, const Natural& dividend);

// dividend / divisor when the division is exact; throws NotDivisible
// (carrying the remainder) otherwise.
Natural divide_exact(const Natural& dividend, const Natural& divisor);

}  // namespace repet
