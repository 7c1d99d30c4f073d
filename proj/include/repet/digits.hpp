#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "repet/natural.hpp"

namespace repet {

inline constexpr std::size_t kDefaultDigitGuard = 1'000'000;

// Canonical decimal rendering of a natural number: digits 0-9 only, no
// leading zero except for "0" itself.
class DigitString {
 public:
  explicit DigitString(std::string digits);
  static DigitString of(const Natural& value);

  const std::string& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }
  Natural value() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::string digits_;
};

// A nonzero digit block meant for replication; its length is the block size k.
class Generator {
 public:
  explicit Generator(DigitString block);

  const DigitString& block() const { return block_; }
  std::size_t length() const { return block_.length(); }
  Natural value() const { return block_.value(); }

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  DigitString block_;
};

// A block of k digits replicated r times, together with its value.
struct RepetitiveNumber {
  Natural value;
  Generator generator;
  std::size_t replication = 1;
};

// s(k, r): a 1 followed by r-1 copies of (k-1 zeros then a 1). Multiplying
// any k-digit block by this value replicates the block r times.
struct CoDivisor {
  std::size_t length = 1;
  std::size_t replication = 1;
  Natural value;
};

RepetitiveNumber replicate(const Generator& g, std::size_t replication,
                           std::size_t digit_guard = kDefaultDigitGuard);

CoDivisor co_divisor(std::size_t length, std::size_t replication,
                     std::size_t digit_guard = kDefaultDigitGuard);

// The shortest block that replicates to n, with its replication count.
std::pair<Generator, std::size_t> minimal_generator(const Natural& n);

// Every (generator, replication) pair reproducing n, including (n, 1),
// sorted by generator length ascending.
std::vector<std::pair<Generator, std::size_t>> all_generators(const Natural& n);

// The r addends g*10^(k*(r-1)), ..., g*10^0 that sum to n, largest first.
std::vector<Natural> decompose_as_shifted_sum(const RepetitiveNumber& n);

}  // namespace repet
