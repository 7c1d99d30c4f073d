#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "repet/kernels.hpp"

namespace repet::kernels {
namespace {

bool all_digits_avx2(const char* text, std::size_t count) {
  const __m256i lo = _mm256_set1_epi8('0');
  const __m256i hi = _mm256_set1_epi8('9');
  std::size_t i = 0;
  for (; i + 32 <= count; i += 32) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(text + i));
    // Non-zero bytes mark out-of-range characters.
    const __m256i below = _mm256_subs_epu8(lo, v);
    const __m256i above = _mm256_subs_epu8(v, hi);
    const __m256i bad = _mm256_or_si256(below, above);
    if (!_mm256_testz_si256(bad, bad)) return false;
  }
  for (; i < count; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

uint32_t parse_one_limb(const char* text, std::size_t count) {
  uint32_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    value = value * 10u + static_cast<uint32_t>(text[i] - '0');
  }
  return value;
}

void parse_limbs_avx2(const char* text, std::size_t count, uint32_t* limbs) {
  // Reduce 32 characters to four limbs per iteration:
  //   bytes  -> 2-digit words   (x * [10,1]   pairs)
  //   words  -> 4-digit dwords  (x * [100,1]  pairs)
  //   dwords -> words           (pack, values <= 9999)
  //   words  -> 8-digit dwords  (x * [10000,1] pairs)
  const __m256i pair_mul = _mm256_set1_epi32(0x010A010A);
  const __m256i quad_mul = _mm256_set1_epi32(0x00010064);
  const __m256i limb_mul = _mm256_set1_epi32(0x00012710);

  std::size_t limb_index = 0;
  std::size_t pos = count;
  while (pos >= 32) {
    pos -= 32;
    const __m256i raw =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(text + pos));
    __m256i x = _mm256_sub_epi8(raw, _mm256_set1_epi8('0'));
    x = _mm256_maddubs_epi16(x, pair_mul);
    x = _mm256_madd_epi16(x, quad_mul);
    x = _mm256_packus_epi32(x, x);
    x = _mm256_madd_epi16(x, limb_mul);

    // Characters run most-significant first, so the four limbs are
    // lane0[0], lane0[1], lane1[0], lane1[1] in decreasing significance.
    alignas(32) uint32_t out[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), x);
    limbs[limb_index + 0] = out[5];
    limbs[limb_index + 1] = out[4];
    limbs[limb_index + 2] = out[1];
    limbs[limb_index + 3] = out[0];
    limb_index += 4;
  }

  // Leftover prefix: full limbs first, then the short head.
  while (pos >= static_cast<std::size_t>(kLimbDigits)) {
    pos -= kLimbDigits;
    limbs[limb_index++] = parse_one_limb(text + pos, kLimbDigits);
  }
  if (pos > 0) {
    limbs[limb_index] = parse_one_limb(text, pos);
  }
}

void addmul_avx2(uint64_t* acc, const uint32_t* a, std::size_t count,
                 uint64_t multiplier) {
  if (multiplier > 0xFFFFFFFFull) {
    // vpmuludq only sees the low 32 bits of each lane.
    for (std::size_t i = 0; i < count; ++i) {
      acc[i] += static_cast<uint64_t>(a[i]) * multiplier;
    }
    return;
  }
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(multiplier));
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m128i packed =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
    const __m256i wide = _mm256_cvtepu32_epi64(packed);
    const __m256i prod = _mm256_mul_epu32(wide, m);
    __m256i sum = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
    sum = _mm256_add_epi64(sum, prod);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), sum);
  }
  for (; i < count; ++i) {
    acc[i] += static_cast<uint64_t>(a[i]) * multiplier;
  }
}

bool ranges_equal_avx2(const char* a, const char* b, std::size_t count) {
  std::size_t i = 0;
  for (; i + 32 <= count; i += 32) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i eq = _mm256_cmpeq_epi8(va, vb);
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  for (; i < count; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

// Referenced from the dispatcher; constant-initialized so taking its address
// never executes code from this translation unit.
extern const Ops kAvx2Ops;
const Ops kAvx2Ops{
    "avx2",
    all_digits_avx2,
    parse_limbs_avx2,
    addmul_avx2,
    ranges_equal_avx2,
};

}  // namespace repet::kernels

#endif
