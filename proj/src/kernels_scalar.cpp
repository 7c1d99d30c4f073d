#include "repet/kernels.hpp"

namespace repet::kernels {
namespace {

bool all_digits_scalar(const char* text, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

void parse_limbs_scalar(const char* text, std::size_t count, uint32_t* limbs) {
  // Least significant limb comes from the last kLimbDigits characters.
  std::size_t limb_index = 0;
  std::size_t pos = count;
  while (pos >= static_cast<std::size_t>(kLimbDigits)) {
    pos -= kLimbDigits;
    uint32_t value = 0;
    for (int i = 0; i < kLimbDigits; ++i) {
      value = value * 10u + static_cast<uint32_t>(text[pos + i] - '0');
    }
    limbs[limb_index++] = value;
  }
  if (pos > 0) {
    uint32_t value = 0;
    for (std::size_t i = 0; i < pos; ++i) {
      value = value * 10u + static_cast<uint32_t>(text[i] - '0');
    }
    limbs[limb_index] = value;
  }
}

void addmul_scalar(uint64_t* acc, const uint32_t* a, std::size_t count,
                   uint64_t multiplier) {
  for (std::size_t i = 0; i < count; ++i) {
    acc[i] += static_cast<uint64_t>(a[i]) * multiplier;
  }
}

bool ranges_equal_scalar(const char* a, const char* b, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

const Ops& scalar() {
  static constexpr Ops ops{
      "scalar",
      all_digits_scalar,
      parse_limbs_scalar,
      addmul_scalar,
      ranges_equal_scalar,
  };
  return ops;
}

}  // namespace repet::kernels
