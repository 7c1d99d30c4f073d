#include "repet/natural.hpp"

#include <algorithm>
#include <cstddef>

#include "repet/kernels.hpp"

namespace repet {
namespace {

constexpr uint64_t kBase = kernels::kLimbBase;
constexpr int kLimbDigits = kernels::kLimbDigits;

// Column accumulators hold sums of limb products (< 10^16 each); flushing
// every 1700 rows keeps acc + carry below 2^64.
constexpr std::size_t kFlushInterval = 1700;

void trim(std::vector<uint32_t>& limbs) {
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
}

std::string_view shortened(std::string_view text, std::string& storage) {
  if (text.size() <= 48) return text;
  storage = std::string(text.substr(0, 24));
  storage += "...";
  storage += text.substr(text.size() - 8);
  return storage;
}

}  // namespace

struct NaturalAccess {
  static Natural make(std::vector<uint32_t> limbs) {
    trim(limbs);
    Natural out;
    out.limbs_ = std::move(limbs);
    return out;
  }
};

Natural::Natural(uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<uint32_t>(value % kBase));
    value /= kBase;
  }
}

Natural Natural::from_decimal(std::string_view text) {
  std::string storage;
  if (text.empty()) throw ParseError("empty decimal string");
  const kernels::Ops& ops = kernels::active();
  if (!ops.all_digits(text.data(), text.size())) {
    throw ParseError(std::string("not a decimal number: \"") +
                     std::string(shortened(text, storage)) + "\"");
  }
  if (text.size() > 1 && text.front() == '0') {
    throw ParseError(std::string("leading zero in decimal number: \"") +
                     std::string(shortened(text, storage)) + "\"");
  }
  if (text == "0") return {};
  Natural out;
  out.limbs_.resize((text.size() + kLimbDigits - 1) / kLimbDigits);
  ops.parse_limbs(text.data(), text.size(), out.limbs_.data());
  trim(out.limbs_);
  return out;
}

Natural Natural::pow10(std::size_t zeros) {
  std::vector<uint32_t> limbs(zeros / kLimbDigits, 0);
  uint32_t top = 1;
  for (std::size_t i = 0; i < zeros % kLimbDigits; ++i) top *= 10;
  limbs.push_back(top);
  return NaturalAccess::make(std::move(limbs));
}

std::string Natural::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::string out;
  out.reserve(limbs_.size() * kLimbDigits);
  out += std::to_string(limbs_.back());
  char block[kLimbDigits];
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    uint32_t value = limbs_[i];
    for (int d = kLimbDigits - 1; d >= 0; --d) {
      block[d] = static_cast<char>('0' + value % 10);
      value /= 10;
    }
    out.append(block, kLimbDigits);
  }
  return out;
}

std::string Natural::to_decimal_grouped() const {
  const std::string plain = to_decimal();
  std::string out;
  out.reserve(plain.size() + plain.size() / 3);
  std::size_t head = plain.size() % 3;
  if (head == 0) head = 3;
  out.append(plain, 0, head);
  for (std::size_t i = head; i < plain.size(); i += 3) {
    out += ' ';
    out.append(plain, i, 3);
  }
  return out;
}

std::size_t Natural::digit_count() const {
  if (limbs_.empty()) return 1;
  std::size_t count = (limbs_.size() - 1) * kLimbDigits;
  for (uint32_t top = limbs_.back(); top != 0; top /= 10) ++count;
  return count;
}

bool Natural::fits_uint64() const {
  if (limbs_.size() < 3) return true;
  if (limbs_.size() > 3) return false;
  // Three limbs reach 10^24 - 1; compare against 2^64 - 1 directly.
  static const Natural max64{UINT64_MAX};
  return *this <= max64;
}

uint64_t Natural::to_uint64() const {
  if (!fits_uint64()) throw InternalError("value does not fit in 64 bits");
  uint64_t value = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    value = value * kBase + limbs_[i];
  }
  return value;
}

Natural Natural::shifted_by_digits(std::size_t zeros) const {
  if (limbs_.empty()) return {};
  if (zeros == 0) return *this;
  std::vector<uint32_t> out(zeros / kLimbDigits, 0);
  const std::size_t partial = zeros % kLimbDigits;
  if (partial == 0) {
    out.insert(out.end(), limbs_.begin(), limbs_.end());
    return NaturalAccess::make(std::move(out));
  }
  uint32_t scale = 1;
  for (std::size_t i = 0; i < partial; ++i) scale *= 10;
  uint64_t carry = 0;
  out.reserve(out.size() + limbs_.size() + 1);
  for (uint32_t limb : limbs_) {
    const uint64_t cur = static_cast<uint64_t>(limb) * scale + carry;
    out.push_back(static_cast<uint32_t>(cur % kBase));
    carry = cur / kBase;
  }
  if (carry != 0) out.push_back(static_cast<uint32_t>(carry));
  return NaturalAccess::make(std::move(out));
}

std::strong_ordering operator<=>(const Natural& x, const Natural& y) {
  if (x.limbs_.size() != y.limbs_.size()) {
    return x.limbs_.size() <=> y.limbs_.size();
  }
  for (std::size_t i = x.limbs_.size(); i-- > 0;) {
    if (x.limbs_[i] != y.limbs_[i]) return x.limbs_[i] <=> y.limbs_[i];
  }
  return std::strong_ordering::equal;
}

Natural& Natural::operator+=(const Natural& other) {
  if (other.limbs_.size() > limbs_.size()) {
    limbs_.resize(other.limbs_.size(), 0);
  }
  uint32_t carry = 0;
  for (std::size_t i = 0; i < other.limbs_.size(); ++i) {
    const uint32_t sum = limbs_[i] + other.limbs_[i] + carry;
    carry = sum >= kBase ? 1 : 0;
    limbs_[i] = carry != 0 ? sum - static_cast<uint32_t>(kBase) : sum;
  }
  for (std::size_t i = other.limbs_.size(); carry != 0 && i < limbs_.size();
       ++i) {
    const uint32_t sum = limbs_[i] + carry;
    carry = sum >= kBase ? 1 : 0;
    limbs_[i] = carry != 0 ? sum - static_cast<uint32_t>(kBase) : sum;
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

Natural& Natural::operator-=(const Natural& other) {
  if (*this < other) throw InternalError("natural subtraction underflow");
  uint32_t borrow = 0;
  for (std::size_t i = 0; i < other.limbs_.size(); ++i) {
    const uint32_t sub = other.limbs_[i] + borrow;
    if (limbs_[i] >= sub) {
      limbs_[i] -= sub;
      borrow = 0;
    } else {
      limbs_[i] += static_cast<uint32_t>(kBase) - sub;
      borrow = 1;
    }
  }
  for (std::size_t i = other.limbs_.size(); borrow != 0; ++i) {
    if (limbs_[i] >= borrow) {
      limbs_[i] -= borrow;
      borrow = 0;
    } else {
      limbs_[i] += static_cast<uint32_t>(kBase) - borrow;
      borrow = 1;
    }
  }
  trim(limbs_);
  return *this;
}

Natural operator*(const Natural& x, const Natural& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const std::vector<uint32_t>& longer =
      x.limbs_.size() >= y.limbs_.size() ? x.limbs_ : y.limbs_;
  const std::vector<uint32_t>& shorter =
      x.limbs_.size() >= y.limbs_.size() ? y.limbs_ : x.limbs_;

  std::vector<uint64_t> acc(longer.size() + shorter.size(), 0);
  const kernels::Ops& ops = kernels::active();
  std::size_t rows_since_flush = 0;
  for (std::size_t j = 0; j < shorter.size(); ++j) {
    ops.addmul(acc.data() + j, longer.data(), longer.size(), shorter[j]);
    if (++rows_since_flush == kFlushInterval) {
      uint64_t carry = 0;
      for (uint64_t& column : acc) {
        const uint64_t cur = column + carry;
        column = cur % kBase;
        carry = cur / kBase;
      }
      rows_since_flush = 0;
    }
  }

  std::vector<uint32_t> limbs(acc.size());
  uint64_t carry = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const uint64_t cur = acc[i] + carry;
    limbs[i] = static_cast<uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  if (carry != 0) throw InternalError("multiplication accumulator overflow");
  return NaturalAccess::make(std::move(limbs));
}

namespace {

// Single-limb divisor fast path.
DivModResult divmod_small(const Natural& dividend, uint32_t divisor) {
  const std::span<const uint32_t> in = dividend.limbs();
  std::vector<uint32_t> quotient(in.size());
  uint64_t rem = 0;
  for (std::size_t i = in.size(); i-- > 0;) {
    const uint64_t cur = rem * kBase + in[i];
    quotient[i] = static_cast<uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  return {NaturalAccess::make(std::move(quotient)),
          Natural{static_cast<uint64_t>(rem)}};
}

// Multiply limbs in place by a single limb, returning via an appended limb
// when the product grows.
void scale_in_place(std::vector<uint32_t>& limbs, uint32_t factor) {
  uint64_t carry = 0;
  for (uint32_t& limb : limbs) {
    const uint64_t cur = static_cast<uint64_t>(limb) * factor + carry;
    limb = static_cast<uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  if (carry != 0) limbs.push_back(static_cast<uint32_t>(carry));
}

}  // namespace

DivModResult divmod(const Natural& dividend, const Natural& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  if (dividend < divisor) return {Natural{}, dividend};
  if (divisor.limbs().size() == 1) {
    return divmod_small(dividend, divisor.limbs()[0]);
  }

  // Knuth's Algorithm D in base 10^8.
  std::vector<uint32_t> u(dividend.limbs().begin(), dividend.limbs().end());
  std::vector<uint32_t> v(divisor.limbs().begin(), divisor.limbs().end());
  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;

  // Normalize so the divisor's top limb is at least base/2.
  const uint32_t d =
      static_cast<uint32_t>(kBase / (static_cast<uint64_t>(v.back()) + 1));
  u.push_back(0);
  if (d != 1) {
    scale_in_place(u, d);
    scale_in_place(v, d);
    if (u.size() != m + n + 1 || v.size() != n) {
      throw InternalError("divmod normalization overflow");
    }
  }

  const uint64_t v1 = v[n - 1];
  const uint64_t v2 = v[n - 2];
  std::vector<uint32_t> quotient(m + 1, 0);

  for (std::size_t j = m + 1; j-- > 0;) {
    const uint64_t top2 = static_cast<uint64_t>(u[j + n]) * kBase + u[j + n - 1];
    uint64_t qhat = top2 / v1;
    uint64_t rhat = top2 % v1;
    while (qhat >= kBase ||
           qhat * v2 > rhat * kBase + u[j + n - 2]) {
      --qhat;
      rhat += v1;
      if (rhat >= kBase) break;
    }

    // Multiply-subtract qhat * v from u[j .. j+n].
    uint64_t carry = 0;
    int64_t borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const uint64_t product = qhat * v[i] + carry;
      carry = product / kBase;
      int64_t diff = static_cast<int64_t>(u[i + j]) -
                     static_cast<int64_t>(product % kBase) - borrow;
      if (diff < 0) {
        diff += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(diff);
    }
    int64_t top = static_cast<int64_t>(u[j + n]) -
                  static_cast<int64_t>(carry) - borrow;

    if (top < 0) {
      // Estimate was one too high; add the divisor back.
      --qhat;
      uint64_t add_carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const uint64_t sum =
            static_cast<uint64_t>(u[i + j]) + v[i] + add_carry;
        u[i + j] = static_cast<uint32_t>(sum % kBase);
        add_carry = sum / kBase;
      }
      top += static_cast<int64_t>(add_carry);
    }
    u[j + n] = static_cast<uint32_t>(top);
    quotient[j] = static_cast<uint32_t>(qhat);
  }

  u.resize(n);
  Natural remainder = NaturalAccess::make(std::move(u));
  if (d != 1) {
    remainder = divmod_small(remainder, d).quotient;
  }
  return {NaturalAccess::make(std::move(quotient)), std::move(remainder)};
}

bool divides(const Natural& divisor, const Natural& dividend) {
  return divmod(dividend, divisor).remainder.is_zero();
}

Natural divide_exact(const Natural& dividend, const Natural& divisor) {
  DivModResult result = divmod(dividend, divisor);
  if (!result.remainder.is_zero()) {
    throw NotDivisible(dividend.to_decimal(), divisor.to_decimal(),
                       result.remainder.to_decimal());
  }
  return std::move(result.quotient);
}

}  // namespace repet
