#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops of the bignum core. Every kernel exists as a
// scalar reference implementation and, on x86-64 with AVX2, as a vector
// variant selected once at runtime. The two are equivalence-tested against
// each other; everything above this layer is kernel-agnostic.

namespace repet::kernels {

// Limbs are base-10^8 digits stored in uint32_t, least significant first.
// Eight decimal digits per limb keeps string conversion a fixed-width
// operation and leaves u64 column accumulators ~1800 rows of headroom
// before a carry flush.
inline constexpr uint32_t kLimbBase = 100'000'000u;
inline constexpr int kLimbDigits = 8;

struct Ops {
  const char* name;

  // True iff text[0..count) consists only of ASCII '0'..'9'.
  bool (*all_digits)(const char* text, std::size_t count);

  // Convert a validated decimal string (most significant digit first) into
  // limbs, least significant limb first. limbs must hold ceil(count/8)
  // entries; count == 0 writes nothing.
  void (*parse_limbs)(const char* text, std::size_t count, uint32_t* limbs);

  // acc[i] += a[i] * multiplier for i in [0, count). No carry propagation;
  // the caller budgets accumulator headroom. multiplier < 2^32.
  void (*addmul)(uint64_t* acc, const uint32_t* a, std::size_t count,
                 uint64_t multiplier);

  // Byte equality of two ranges.
  bool (*ranges_equal)(const char* a, const char* b, std::size_t count);
};

// Always-available reference kernels.
const Ops& scalar();

// AVX2 kernels, or nullptr when unsupported by the build or the CPU.
const Ops* avx2();

// Best supported variant, chosen once per process.
const Ops& active();

}  // namespace repet::kernels
