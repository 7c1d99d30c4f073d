#include "repet/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "repet/errors.hpp"

namespace repet {

namespace {

constexpr uint32_t kTrialDivisionLimit = 1'000'000;

// Checking primality or running rho on larger inputs than this would take
// unbounded time; such cofactors are reported unresolved instead.
constexpr std::size_t kResolveDigitLimit = 2000;

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t p = 2; p <= kTrialDivisionLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (uint64_t m = uint64_t{p} * p; m <= kTrialDivisionLimit; m += p) {
        composite[m] = true;
      }
    }
    return out;
  }();
  return primes;
}

constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// ----- 64-bit modular arithmetic -----

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t addmod64(uint64_t a, uint64_t b, uint64_t m) {
  // pre: a < m, b < m
  return a >= m - b ? a - (m - b) : a + b;
}

uint64_t powmod64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One Miller-Rabin round; n - 1 = d * 2^s with d odd.
bool mr_pass64(uint64_t n, uint64_t base, uint64_t d, int s) {
  base %= n;
  if (base == 0) return true;
  uint64_t x = powmod64(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The twelve fixed witnesses decide primality for every 64-bit integer.
  for (uint64_t base : kWitnesses) {
    if (!mr_pass64(n, base, d, s)) return false;
  }
  return true;
}

// ----- Natural modular arithmetic -----

Natural half(const Natural& n) { return divmod(n, Natural{2}).quotient; }

Natural mod_mul(const Natural& a, const Natural& b, const Natural& m) {
  return divmod(a * b, m).remainder;
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& m) {
  std::vector<bool> bits;
  for (Natural e = exp; !e.is_zero(); e = half(e)) bits.push_back(!e.is_even());
  Natural result{1};
  Natural acc = base;
  for (bool bit : bits) {
    if (bit) result = mod_mul(result, acc, m);
    acc = mod_mul(acc, acc, m);
  }
  return result;
}

bool mr_pass_nat(const Natural& n, uint64_t base, const Natural& d,
                 std::size_t s, const Natural& n_minus_1) {
  const Natural one{1};
  Natural x = mod_pow(Natural{base}, d, n);
  if (x == one || x == n_minus_1) return true;
  for (std::size_t i = 1; i < s; ++i) {
    x = mod_mul(x, x, n);
    if (x == n_minus_1) return true;
  }
  return false;
}

Natural gcd_nat(Natural a, Natural b) {
  while (!b.is_zero()) {
    Natural r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Primality for inputs above 64 bits. The fixed witnesses are conclusive
// below 3317044064679887385961981; beyond that, extra derandomized rounds
// leave a (vanishingly unlikely) probable verdict.
Primality classify_wide(const Natural& n) {
  if (n.is_even()) return Primality::composite;
  for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull,
                     61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
    if (divmod(n, Natural{p}).remainder.is_zero()) return Primality::composite;
  }
  const Natural one{1};
  const Natural n_minus_1 = n - one;
  Natural d = n_minus_1;
  std::size_t s = 0;
  while (d.is_even()) {
    d = half(d);
    ++s;
  }
  for (uint64_t base : kWitnesses) {
    if (!mr_pass_nat(n, base, d, s, n_minus_1)) return Primality::composite;
  }
  static const Natural deterministic_bound =
      Natural::from_decimal("3317044064679887385961981");
  if (n < deterministic_bound) return Primality::prime;
  std::mt19937_64 rng(0x5bd1e9955bd1e995ull);
  for (int round = 0; round < 64; ++round) {
    const uint64_t base = 2 + rng() % (UINT64_MAX - 2);
    if (!mr_pass_nat(n, base, d, s, n_minus_1)) return Primality::composite;
  }
  return Primality::probable_prime;
}

// ----- iteration budget -----

struct Budget {
  uint64_t left;

  void spend_one() {
    if (left == 0) {
      throw BudgetExhausted("the Pollard iteration budget was exhausted");
    }
    --left;
  }
};

// ----- Pollard rho, Brent variant with batched gcds -----

uint64_t rho64(uint64_t n, std::mt19937_64& rng, Budget& budget) {
  if (n % 2 == 0) return 2;
  constexpr uint64_t kBatch = 128;
  while (true) {
    const uint64_t c = 1 + rng() % (n - 1);
    uint64_t y = 1 + rng() % (n - 1);
    uint64_t g = 1, q = 1, x = 0, ys = 0;
    auto step = [&](uint64_t v) { return addmod64(mulmod64(v, v, n), c, n); };
    for (uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) {
        budget.spend_one();
        y = step(y);
      }
      for (uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const uint64_t lim = std::min(kBatch, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          budget.spend_one();
          y = step(y);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        budget.spend_one();
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

Natural rho_nat(const Natural& n, std::mt19937_64& rng, Budget& budget) {
  if (n.is_even()) return Natural{2};
  const Natural one{1};
  constexpr uint64_t kBatch = 128;
  while (true) {
    const Natural c{1 + rng() % UINT32_MAX};
    Natural y{1 + rng() % UINT32_MAX};
    Natural g = one, q = one, x, ys;
    auto step = [&](const Natural& v) { return divmod(v * v + c, n).remainder; };
    auto absdiff = [](const Natural& a, const Natural& b) {
      return a > b ? a - b : b - a;
    };
    for (uint64_t r = 1; g == one; r <<= 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) {
        budget.spend_one();
        y = step(y);
      }
      for (uint64_t k = 0; k < r && g == one; k += kBatch) {
        ys = y;
        const uint64_t lim = std::min(kBatch, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          budget.spend_one();
          y = step(y);
          q = mod_mul(q, absdiff(x, y), n);
        }
        g = gcd_nat(q, n);
      }
    }
    if (g == n) {
      g = one;
      while (g == one) {
        budget.spend_one();
        ys = step(ys);
        g = gcd_nat(absdiff(x, ys), n);
      }
    }
    if (g != n) return g;
  }
}

// ----- integer roots for perfect-power detection -----

uint64_t root64(uint64_t n, unsigned e) {
  auto pow_at_most = [n, e](uint64_t x) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < e; ++i) {
      acc *= x;
      if (acc > n) return false;
    }
    return true;
  };
  uint64_t lo = 1, hi = n;
  if (e >= 2) hi = std::min<uint64_t>(hi, uint64_t{1} << (64 / e + 1));
  while (lo < hi) {
    const uint64_t mid = lo + (hi - lo + 1) / 2;
    if (pow_at_most(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Natural pow_nat(const Natural& base, unsigned e) {
  Natural result{1};
  for (unsigned i = 0; i < e; ++i) result = result * base;
  return result;
}

Natural root_nat(const Natural& n, unsigned e) {
  const std::size_t digits = n.digit_count();
  const std::size_t root_digits = (digits + e - 1) / e;
  const Natural one{1};
  Natural lo = root_digits > 1 ? Natural::pow10(root_digits - 1) : one;
  Natural hi = Natural::pow10(root_digits) - one;
  while (lo < hi) {
    const Natural mid = half(lo + hi + one);
    if (pow_nat(mid, e) <= n) {
      lo = mid;
    } else {
      hi = mid - one;
    }
  }
  return lo;
}

// ----- driver -----

struct ResolveState {
  std::map<Natural, std::size_t> found;
  Natural pending{1};  // product of cofactors the budget could not split
  bool complete = true;
  std::mt19937_64 rng;
  Budget budget;
};

void give_up(const Natural& m, std::size_t mult, ResolveState& st) {
  st.complete = false;
  for (std::size_t i = 0; i < mult; ++i) st.pending = st.pending * m;
}

void resolve(const Natural& m, std::size_t mult, ResolveState& st) {
  if (m.digit_count() > kResolveDigitLimit) {
    give_up(m, mult, st);
    return;
  }
  if (classify_prime(m) != Primality::composite) {
    st.found[m] += mult;
    return;
  }
  // Perfect powers: every factor here exceeds the sieve limit, so a root
  // would be above 10^6 and the exponent below digits/6 + 1.
  const unsigned max_exponent =
      static_cast<unsigned>(m.digit_count() / 6 + 1);
  for (unsigned e : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    if (e > max_exponent) break;
    if (m.fits_uint64()) {
      const uint64_t root = root64(m.to_uint64(), e);
      unsigned __int128 acc = 1;
      for (unsigned i = 0; i < e; ++i) acc *= root;
      if (acc == m.to_uint64()) {
        resolve(Natural{root}, mult * e, st);
        return;
      }
    } else {
      const Natural root = root_nat(m, e);
      if (pow_nat(root, e) == m) {
        resolve(root, mult * e, st);
        return;
      }
    }
  }
  Natural divisor;
  try {
    if (m.fits_uint64()) {
      divisor = Natural{rho64(m.to_uint64(), st.rng, st.budget)};
    } else {
      divisor = rho_nat(m, st.rng, st.budget);
    }
  } catch (const BudgetExhausted&) {
    give_up(m, mult, st);
    return;
  }
  resolve(divisor, mult, st);
  resolve(divide_exact(m, divisor), mult, st);
}

}  // namespace

Natural Factorization::product() const {
  Natural result{1};
  for (const FactorEntry& entry : factors) {
    for (std::size_t i = 0; i < entry.multiplicity; ++i) {
      result = result * entry.prime;
    }
  }
  if (unresolved.has_value()) result = result * *unresolved;
  return result;
}

Primality classify_prime(const Natural& n) {
  if (n.fits_uint64()) {
    return is_prime64(n.to_uint64()) ? Primality::prime : Primality::composite;
  }
  return classify_wide(n);
}

bool is_prime(const Natural& n) {
  return classify_prime(n) != Primality::composite;
}

Natural pollard_rho(const Natural& n, uint64_t seed, uint64_t budget) {
  if (n < Natural{4}) {
    throw InvalidParameter("pollard_rho expects a composite input");
  }
  std::mt19937_64 rng(seed);
  Budget b{budget};
  if (n.fits_uint64()) return Natural{rho64(n.to_uint64(), rng, b)};
  return rho_nat(n, rng, b);
}

Factorization factorize(const Natural& n, const FactorizationConfig& config) {
  if (n.is_zero()) {
    throw InvalidParameter("zero cannot be factored");
  }
  Factorization out;
  out.input = n;
  const Natural one{1};
  if (n == one) return out;

  ResolveState st{
      {}, one, true, std::mt19937_64(config.seed), Budget{config.rho_budget}};

  Natural remaining = n;
  uint64_t rem64 = 0;
  bool small = remaining.fits_uint64();
  if (small) rem64 = remaining.to_uint64();
  bool consumed = false;

  for (const uint32_t p : small_primes()) {
    if (small) {
      if (rem64 == 1 || uint64_t{p} * p > rem64) break;
      while (rem64 % p == 0) {
        rem64 /= p;
        ++st.found[Natural{p}];
      }
    } else {
      const Natural pn{p};
      while (true) {
        DivModResult dm = divmod(remaining, pn);
        if (!dm.remainder.is_zero()) break;
        remaining = std::move(dm.quotient);
        ++st.found[pn];
      }
      if (remaining.fits_uint64()) {
        small = true;
        rem64 = remaining.to_uint64();
      }
    }
    // Probe whether the rest is already prime before grinding through the
    // whole sieve; worthwhile at a few thresholds only.
    if (p == 997 || p == 9973 || p == 99991) {
      if (small) {
        if (rem64 > 1 && is_prime64(rem64)) {
          ++st.found[Natural{rem64}];
          consumed = true;
          break;
        }
      } else if (remaining.digit_count() <= 200 &&
                 classify_wide(remaining) != Primality::composite) {
        ++st.found[remaining];
        consumed = true;
        break;
      }
    }
  }

  if (!consumed) {
    const Natural tail = small ? Natural{rem64} : remaining;
    if (tail != one) resolve(tail, 1, st);
  }

  out.factors.reserve(st.found.size());
  for (auto& [prime, mult] : st.found) {
    out.factors.push_back(FactorEntry{prime, mult});
  }
  out.complete = st.complete;
  if (!st.complete) out.unresolved = st.pending;
  return out;
}

}  // namespace repet
