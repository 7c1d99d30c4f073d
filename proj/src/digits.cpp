#include "repet/digits.hpp"

#include <string>
#include <utility>

#include "repet/errors.hpp"
#include "repet/kernels.hpp"

namespace repet {

namespace {

// Throws when a k-digit block replicated r times would exceed the guard.
void check_digit_guard(std::size_t length, std::size_t replication,
                       std::size_t digit_guard) {
  if (replication > digit_guard / length) {
    throw LimitExceeded("a block of " + std::to_string(length) +
                        " digits replicated " + std::to_string(replication) +
                        " times exceeds the digit limit of " +
                        std::to_string(digit_guard));
  }
}

}  // namespace

DigitString::DigitString(std::string digits) : digits_(std::move(digits)) {
  if (digits_.empty()) {
    throw ParseError("empty digit string");
  }
  if (!kernels::active().all_digits(digits_.data(), digits_.size())) {
    throw ParseError("digit string contains a non-digit character");
  }
  if (digits_.size() > 1 && digits_.front() == '0') {
    throw ParseError("digit string has a leading zero");
  }
}

DigitString DigitString::of(const Natural& value) {
  return DigitString(value.to_decimal());
}

Natural DigitString::value() const {
  return Natural::from_decimal(digits_);
}

Generator::Generator(DigitString block) : block_(std::move(block)) {
  if (block_.digits() == "0") {
    throw InvalidParameter("a generator must be nonzero");
  }
}

RepetitiveNumber replicate(const Generator& g, std::size_t replication,
                           std::size_t digit_guard) {
  if (replication == 0) {
    throw InvalidParameter("replication must be at least 1");
  }
  check_digit_guard(g.length(), replication, digit_guard);
  std::string digits;
  digits.reserve(g.length() * replication);
  for (std::size_t copy = 0; copy < replication; ++copy) {
    digits += g.block().digits();
  }
  Natural value = Natural::from_decimal(digits);
  return RepetitiveNumber{std::move(value), g, replication};
}

CoDivisor co_divisor(std::size_t length, std::size_t replication,
                     std::size_t digit_guard) {
  if (length == 0 || replication == 0) {
    throw InvalidParameter("block length and replication must be at least 1");
  }
  check_digit_guard(length, replication, digit_guard);
  std::string digits;
  digits.reserve(length * (replication - 1) + 1);
  digits += '1';
  for (std::size_t copy = 1; copy < replication; ++copy) {
    digits.append(length - 1, '0');
    digits += '1';
  }
  Natural value = Natural::from_decimal(digits);
  // Cross-check against the closed form: s * (10^k - 1) = 10^(k*r) - 1,
  // verified without multiplication as s*10^k - s = 10^(k*r) - 1.
  const Natural one{1};
  if (value.shifted_by_digits(length) - value !=
      Natural::pow10(length * replication) - one) {
    throw InternalError("co-divisor value fails its closed-form cross-check");
  }
  return CoDivisor{length, replication, std::move(value)};
}

std::pair<Generator, std::size_t> minimal_generator(const Natural& n) {
  if (n.is_zero()) {
    throw InvalidParameter("zero has no generator");
  }
  const std::string digits = n.to_decimal();
  const std::size_t total = digits.size();
  const auto& ops = kernels::active();
  for (std::size_t d = 1; d < total; ++d) {
    if (total % d != 0) continue;
    if (ops.ranges_equal(digits.data(), digits.data() + d, total - d)) {
      return {Generator(DigitString(digits.substr(0, d))), total / d};
    }
  }
  return {Generator(DigitString(digits)), 1};
}

std::vector<std::pair<Generator, std::size_t>> all_generators(const Natural& n) {
  if (n.is_zero()) {
    throw InvalidParameter("zero has no generator");
  }
  const std::string digits = n.to_decimal();
  const std::size_t total = digits.size();
  const auto& ops = kernels::active();
  std::vector<std::pair<Generator, std::size_t>> out;
  for (std::size_t d = 1; d <= total; ++d) {
    if (total % d != 0) continue;
    if (ops.ranges_equal(digits.data(), digits.data() + d, total - d)) {
      out.emplace_back(Generator(DigitString(digits.substr(0, d))), total / d);
    }
  }
  return out;
}

std::vector<Natural> decompose_as_shifted_sum(const RepetitiveNumber& n) {
  const Natural base = n.generator.value();
  const std::size_t k = n.generator.length();
  std::vector<Natural> addends;
  addends.reserve(n.replication);
  for (std::size_t i = 0; i < n.replication; ++i) {
    addends.push_back(base.shifted_by_digits(k * (n.replication - 1 - i)));
  }
  return addends;
}

}  // namespace repet
